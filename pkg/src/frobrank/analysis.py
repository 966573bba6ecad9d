"""Rank analysis of matrix triples and tightness tests.

For conformable A, B, C the ranks always satisfy

    rank(ABC) + rank(B) >= rank(AB) + rank(BC),

with a non-negative integer gap between the sides. The inequality is
tight exactly when any of three equivalent conditions holds:

* the induced map [x] -> [Ax] between the quotient spaces
  Rg(B)/Rg(BC) and Rg(AB)/Rg(ABC) is an isomorphism, i.e. its matrix
  block is square and invertible;
* the subspaces Rg(B) ∩ Ker(A) and Rg(BC) ∩ Ker(A) coincide (the
  second is always contained in the first);
* a basis of Rg(B) ∩ Ker(A) factors through a basis of
  Rg(BC) ∩ Ker(A).

``equality_criteria`` evaluates all of them independently, plus the gap
itself, and cross-checks the answers; any disagreement is an
implementation bug and raises InternalDisagreement. When the inequality
is strict, a witness vector inside Rg(B) ∩ Ker(A) but outside
Rg(BC) ∩ Ker(A) is produced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, InternalDisagreement
from .linalg import extend_basis, kernel_basis, pivot_column_basis, rank, solve_right
from .matrix import Matrix


@dataclass(frozen=True)
class RankProfile:
    """The four ranks governing the inequality, plus derived quantities."""

    rank_b: int
    rank_ab: int
    rank_bc: int
    rank_abc: int

    @property
    def lhs(self) -> int:
        """rank(ABC) + rank(B), the never-smaller side."""
        return self.rank_abc + self.rank_b

    @property
    def rhs(self) -> int:
        """rank(AB) + rank(BC)."""
        return self.rank_ab + self.rank_bc

    @property
    def gap(self) -> int:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class InequalityWitness:
    """A column vector in Rg(B) ∩ Ker(A) that is provably outside
    Rg(BC) ∩ Ker(A), refuting tightness constructively."""

    vector: Matrix


@dataclass(frozen=True)
class CriteriaReport:
    """Outcome of the four independent tightness tests.

    The booleans are equivalent by theory and must agree; ``factor``
    carries the factorization matrix Z with W_B = W_BC @ Z when it
    exists, and ``witness`` is populated exactly when the inequality is
    strict.
    """

    gap_zero: bool
    quotient_block_invertible: bool
    kernel_intersections_equal: bool
    intersection_factor_exists: bool
    factor: Matrix | None
    witness: InequalityWitness | None

    @property
    def is_equality(self) -> bool:
        return self.gap_zero


def _check_triple(a: Matrix, b: Matrix, c: Matrix) -> None:
    if not (a.field == b.field == c.field):
        raise FieldMismatch("A, B, C must share a field")
    if a.cols != b.rows:
        raise DimensionMismatch(f"A has {a.cols} columns but B has {b.rows} rows")
    if b.cols != c.rows:
        raise DimensionMismatch(f"B has {b.cols} columns but C has {c.rows} rows")


def rank_profile(a: Matrix, b: Matrix, c: Matrix) -> RankProfile:
    """Exact ranks of B, AB, BC, ABC."""
    _check_triple(a, b, c)
    ab = a @ b
    bc = b @ c
    return RankProfile(
        rank_b=rank(b),
        rank_ab=rank(ab),
        rank_bc=rank(bc),
        rank_abc=rank(ab @ c),
    )


def intersection_basis(a: Matrix, b: Matrix) -> Matrix:
    """Basis of Rg(B) ∩ Ker(A), as columns.

    Built as D @ K where D collects the pivot columns of ``b`` and K is
    the kernel basis of ``a @ D``: the columns are independent, lie in
    the column span of ``b``, and are annihilated by ``a``. A trivial
    intersection yields a matrix with no columns.
    """
    if a.field != b.field:
        raise FieldMismatch("operands must share a field")
    if a.cols != b.rows:
        raise DimensionMismatch(f"A has {a.cols} columns but B has {b.rows} rows")
    d = pivot_column_basis(b)
    return d @ kernel_basis(a @ d)


def quotient_map_matrix(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
    """Matrix of the induced map [x] -> [Ax] on quotient spaces.

    A basis of Rg(B) is built by extending a basis of Rg(BC), and a
    basis of Rg(AB) by extending a basis of Rg(ABC). The images of the
    trailing basis vectors of Rg(B), expressed in coordinates over the
    trailing basis vectors of Rg(AB), form the matrix of the map
    Rg(B)/Rg(BC) -> Rg(AB)/Rg(ABC); its shape is
    (rank AB - rank ABC) x (rank B - rank BC). Tightness of the rank
    inequality is equivalent to this block being square and invertible.
    """
    _check_triple(a, b, c)
    ab = a @ b
    bc = b @ c
    abc = ab @ c
    domain_basis = extend_basis(pivot_column_basis(bc), b)
    codomain_basis = extend_basis(pivot_column_basis(abc), ab)
    coords = solve_right(codomain_basis, a @ domain_basis)
    if coords is None:
        raise InternalDisagreement("images of Rg(B) vectors escaped Rg(AB)")
    m1 = rank(bc)
    m2 = rank(abc)
    return coords.submatrix(range(m2, coords.rows), range(m1, coords.cols))


def _block_invertible(block: Matrix) -> bool:
    return block.rows == block.cols and rank(block) == block.rows


def equality_criteria(a: Matrix, b: Matrix, c: Matrix) -> CriteriaReport:
    """Run all four tightness tests and cross-check their agreement."""
    _check_triple(a, b, c)
    profile = rank_profile(a, b, c)
    gap_zero = profile.gap == 0

    block_invertible = _block_invertible(quotient_map_matrix(a, b, c))

    bc = b @ c
    w_b = intersection_basis(a, b)
    w_bc = intersection_basis(a, bc)
    # Rg(BC) ∩ Ker(A) sits inside Rg(B) ∩ Ker(A); verify rather than assume.
    contained = solve_right(w_b, w_bc) is not None
    intersections_equal = contained and w_b.cols == w_bc.cols

    factor = solve_right(w_bc, w_b)
    factor_exists = factor is not None

    answers = {gap_zero, block_invertible, intersections_equal, factor_exists}
    if len(answers) != 1:
        raise InternalDisagreement(
            "tightness tests disagree: "
            f"gap_zero={gap_zero}, quotient_block_invertible={block_invertible}, "
            f"kernel_intersections_equal={intersections_equal}, "
            f"intersection_factor_exists={factor_exists}"
        )

    witness = None
    if not gap_zero:
        for j in range(w_b.cols):
            col = w_b.col(j)
            if solve_right(w_bc, col) is None:
                witness = InequalityWitness(col)
                break
        if witness is None:
            raise InternalDisagreement("strict gap but no witness column found")

    return CriteriaReport(
        gap_zero=gap_zero,
        quotient_block_invertible=block_invertible,
        kernel_intersections_equal=intersections_equal,
        intersection_factor_exists=factor_exists,
        factor=factor,
        witness=witness,
    )
