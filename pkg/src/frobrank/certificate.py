"""Construction and verification of solution pairs for B = BCX + YAB.

The rank inequality rank(ABC) + rank(B) >= rank(AB) + rank(BC) is tight
exactly when the matrix equation B = BCX + YAB is solvable. On tight
instances ``construct_certificate`` builds such a pair explicitly:

1. Collect D, the pivot columns of B, and the kernel coordinates K of
   A @ D. The columns of W = D @ K form a basis of Rg(B) ∩ Ker(A), say
   s of them, inside the rank-r column space of B.
2. Extend W by further columns of B to a basis [W | completion] of
   Rg(B). The images of the completion under A form a basis of Rg(AB).
3. Y is the matrix sending each image back to its completion vector and
   a complement of Rg(AB) to zero, so Y(ABz) recovers the completion
   component of Bz.
4. Each basis vector of W is inside Rg(BC), so it has a preimage under
   BC. The map sending W to those preimages and the rest of a basis of
   the ambient space to zero, composed with B, yields X; BCXz then
   recovers the intersection component of Bz.

Both zero extensions use a deterministic greedy completion of the
standard basis, so the output is a pure function of the input triple.
Every constructed pair is re-verified before being returned; on strict
instances the analysis witness is returned instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .analysis import InequalityWitness, equality_criteria
from .errors import (
    BaseInvalid,
    DimensionMismatch,
    FieldMismatch,
    InternalDisagreement,
)
from .fields import Field, Scalar
from .linalg import extend_basis, inverse, kernel_basis, pivot_column_basis, solve_right
from .matrix import Matrix

FAMILY_BUDGET = 10_000


@dataclass(frozen=True)
class ConstructionTrace:
    """Every intermediate of the construction, for audit and tests.

    ``extended_basis`` holds the basis of Rg(B): its first
    ``intersection_dim`` columns span Rg(B) ∩ Ker(A) and the rest are
    the completion. ``bc_preimages`` solves BC @ u = w column by column
    against those first columns, ``preimage_map`` is the matrix sending
    them to their preimages (zero elsewhere), and ``image_basis`` holds
    the images of the completion under A, a basis of Rg(AB).
    """

    column_basis: Matrix
    kernel_coords: Matrix
    intersection_dim: int
    rank: int
    extended_basis: Matrix
    bc_preimages: Matrix
    preimage_map: Matrix
    image_basis: Matrix


@dataclass(frozen=True)
class EqualityCertificate:
    """A verified pair with B = BC @ X + Y @ A @ B exactly.

    ``trace`` is populated by ``construct_certificate`` and absent on
    pairs loaded from external documents.
    """

    X: Matrix
    Y: Matrix
    trace: ConstructionTrace | None = None


def verify_certificate(a: Matrix, b: Matrix, c: Matrix, x: Matrix, y: Matrix) -> bool:
    """True exactly when B - BC@X - Y@A@B is the zero matrix."""
    if not (a.field == b.field == c.field == x.field == y.field):
        raise FieldMismatch("all five matrices must share a field")
    if a.cols != b.rows or b.cols != c.rows:
        raise DimensionMismatch("A, B, C dimensions do not chain")
    if x.shape != (c.cols, b.cols):
        raise DimensionMismatch(
            f"X must be {c.cols}x{b.cols}, got {x.rows}x{x.cols}"
        )
    if y.shape != (b.rows, a.rows):
        raise DimensionMismatch(
            f"Y must be {b.rows}x{a.rows}, got {y.rows}x{y.cols}"
        )
    return (b - (b @ c) @ x - y @ (a @ b)).is_zero


def construct_certificate(
    a: Matrix, b: Matrix, c: Matrix
) -> EqualityCertificate | InequalityWitness:
    """Build a verified solution pair, or a witness of strictness.

    Deterministic: chooses pivot columns, canonical kernels, greedy
    basis completions, and zero free variables everywhere, so identical
    triples always yield the identical certificate.
    """
    report = equality_criteria(a, b, c)
    if not report.gap_zero:
        assert report.witness is not None
        return report.witness

    field = a.field
    ab = a @ b
    bc = b @ c

    column_basis = pivot_column_basis(b)
    kernel_coords = kernel_basis(a @ column_basis)
    intersection = column_basis @ kernel_coords
    s = intersection.cols
    r = column_basis.cols

    extended = extend_basis(intersection, b)
    completion = extended.take_cols(range(s, r))
    image_basis = a @ completion

    # Y on the basis [image_basis | greedy complement of Rg(AB)]:
    # images map back to their completion vectors, the complement to zero.
    y_domain = extend_basis(image_basis, Matrix.identity(field, a.rows))
    y_targets = completion.hstack(Matrix.zeros(field, b.rows, a.rows - completion.cols))
    y_domain_inv = inverse(y_domain)
    if y_domain_inv is None:
        raise InternalDisagreement("completed image basis is singular")
    y = y_targets @ y_domain_inv

    # The intersection basis lies inside Rg(BC); fetch preimages under BC.
    preimages = solve_right(bc, intersection)
    if preimages is None:
        raise InternalDisagreement("intersection basis has no preimage under BC")

    # The map behind X on the basis [extended | greedy complement of Rg(B)]:
    # intersection vectors go to their preimages, everything else to zero.
    m_domain = extend_basis(extended, Matrix.identity(field, b.rows))
    m_targets = preimages.hstack(Matrix.zeros(field, c.cols, b.rows - s))
    m_domain_inv = inverse(m_domain)
    if m_domain_inv is None:
        raise InternalDisagreement("completed range basis is singular")
    preimage_map = m_targets @ m_domain_inv

    x = preimage_map @ b

    if not verify_certificate(a, b, c, x, y):
        raise InternalDisagreement("constructed pair failed verification")

    trace = ConstructionTrace(
        column_basis=column_basis,
        kernel_coords=kernel_coords,
        intersection_dim=s,
        rank=r,
        extended_basis=extended,
        bc_preimages=preimages,
        preimage_map=preimage_map,
        image_basis=image_basis,
    )
    return EqualityCertificate(X=x, Y=y, trace=trace)


def _scalar_sequence(field: Field) -> Iterator[Scalar]:
    # 1, 2, 3, ... over the rationals; all nonzero residues over GF(p).
    if field.modulus is None:
        return (field.one * t for t in itertools.count(1))
    return iter(range(1, field.modulus))


def _add_to_column(base: Matrix, slot: int, vector: Matrix, scale: Scalar) -> Matrix:
    field = base.field
    data = [list(row) for row in base.entries]
    for i in range(base.rows):
        data[i][slot] = field.add(data[i][slot], field.mul(scale, vector[i, 0]))
    return Matrix(field, data, shape=base.shape)


def _add_to_row(base: Matrix, slot: int, vector: Matrix, scale: Scalar) -> Matrix:
    field = base.field
    data = [list(row) for row in base.entries]
    for j in range(base.cols):
        data[slot][j] = field.add(data[slot][j], field.mul(scale, vector[j, 0]))
    return Matrix(field, data, shape=base.shape)


def solution_family(
    a: Matrix,
    b: Matrix,
    c: Matrix,
    base: EqualityCertificate,
    count: int,
    budget: int = FAMILY_BUDGET,
) -> list[tuple[Matrix, Matrix]]:
    """Up to ``count`` further distinct solution pairs built from ``base``.

    Adding a kernel vector of BC to a column of X, or a left kernel
    vector of AB to a row of Y, leaves the residual of the equation
    untouched, so each such nudge is again a solution. Candidates are
    enumerated deterministically: for each scalar (1, 2, 3, ... over the
    rationals, 1 .. p-1 over GF(p)), every X column slot paired with
    every kernel vector, then every Y row slot paired with every left
    kernel vector. The base pair is excluded. Enumeration stops after
    ``count`` pairs, after ``budget`` candidates, or when a finite
    scalar supply is exhausted, whichever comes first.
    """
    if not verify_certificate(a, b, c, base.X, base.Y):
        raise BaseInvalid("base pair does not satisfy the equation")
    right_kernel = kernel_basis(b @ c)
    left_kernel = kernel_basis((a @ b).transpose())
    if right_kernel.cols == 0 and left_kernel.cols == 0:
        return []

    pairs: list[tuple[Matrix, Matrix]] = []
    seen = {(base.X, base.Y)}
    candidates = 0
    for scale in _scalar_sequence(base.X.field):
        for slot in range(base.X.cols):
            for k in range(right_kernel.cols):
                if len(pairs) == count or candidates == budget:
                    return pairs
                candidates += 1
                pair = (_add_to_column(base.X, slot, right_kernel.col(k), scale), base.Y)
                if pair not in seen:
                    seen.add(pair)
                    pairs.append(pair)
        for slot in range(base.Y.rows):
            for k in range(left_kernel.cols):
                if len(pairs) == count or candidates == budget:
                    return pairs
                candidates += 1
                pair = (base.X, _add_to_row(base.Y, slot, left_kernel.col(k), scale))
                if pair not in seen:
                    seen.add(pair)
                    pairs.append(pair)
    return pairs
