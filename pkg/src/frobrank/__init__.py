"""Exact toolkit for tightness of the Frobenius rank inequality.

Decides whether rank(ABC) + rank(B) = rank(AB) + rank(BC) for a triple
of matrices over the rationals or a prime field; on equality it builds
and verifies pairs (X, Y) with B = BCX + YAB, and on strict inequality
it emits a checkable witness vector.
"""

from .analysis import (
    CriteriaReport,
    InequalityWitness,
    RankProfile,
    equality_criteria,
    intersection_basis,
    quotient_map_matrix,
    rank_profile,
)
from .certificate import (
    ConstructionTrace,
    EqualityCertificate,
    construct_certificate,
    solution_family,
    verify_certificate,
)
from .fields import GF, QQ, Field, parse_field_tag
from .linalg import (
    RrefResult,
    extend_basis,
    inverse,
    kernel_basis,
    pivot_column_basis,
    rank,
    rref,
    solve_right,
)
from .matrix import Matrix, matmul
from .formats import (
    Report,
    build_report,
    emit_instance,
    emit_report,
    parse_certificate,
    parse_instance,
)
from .oracle import (
    DEFAULT_BUDGET,
    InstanceSpec,
    Lcg,
    brute_force_solvable,
    random_instance,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "CriteriaReport",
    "ConstructionTrace",
    "DEFAULT_BUDGET",
    "EqualityCertificate",
    "Field",
    "GF",
    "InequalityWitness",
    "InstanceSpec",
    "Lcg",
    "Matrix",
    "QQ",
    "RankProfile",
    "Report",
    "RrefResult",
    "brute_force_solvable",
    "build_report",
    "construct_certificate",
    "emit_instance",
    "emit_report",
    "equality_criteria",
    "errors",
    "extend_basis",
    "intersection_basis",
    "inverse",
    "kernel_basis",
    "matmul",
    "parse_certificate",
    "parse_field_tag",
    "parse_instance",
    "pivot_column_basis",
    "quotient_map_matrix",
    "random_instance",
    "rank",
    "rank_profile",
    "rref",
    "solution_family",
    "solve_right",
    "verify_certificate",
]
