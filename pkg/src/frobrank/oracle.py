"""Ground-truth enumeration and reproducible instance generation.

``brute_force_solvable`` decides solvability of B = BCX + YAB over a
prime field by scanning every candidate pair, giving an oracle that is
independent of all rank machinery. ``random_instance`` produces seeded
triples from a fully specified generator so corpora are reproducible
anywhere.

The generator is a 64-bit linear congruential generator with Knuth's
MMIX parameters:

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2**64

Each draw advances the state once and takes the top 31 bits, reduced
modulo the requested range. Entries are drawn row-major for A, then B,
then C; rational entries draw the numerator first, then the denominator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, DimensionMismatch, FieldMismatch, NotFiniteField
from .fields import Field
from .matrix import Matrix

DEFAULT_BUDGET = 1 << 20

_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1
# Precomputing one side of the scan is capped so memory stays bounded
# even when the caller raises the budget.
_PRECOMPUTE_LIMIT = 1 << 16


class Lcg:
    """The documented 64-bit LCG; deterministic for a given seed."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_below(self, n: int) -> int:
        self.state = (_LCG_MULT * self.state + _LCG_INC) & _MASK64
        return (self.state >> 33) % n


@dataclass(frozen=True)
class InstanceSpec:
    """Shape, field, seed, and entry pool of a generated triple.

    ``dims = (m, n, p, q)`` gives A its m x n shape, B n x p, C p x q.
    Over the rationals entries are a/b with a in
    [-numerator_bound, numerator_bound] and b in [1, denominator_bound];
    over GF(p) they are uniform residues and the bounds are ignored.
    """

    field: Field
    dims: tuple[int, int, int, int]
    seed: int
    numerator_bound: int = 3
    denominator_bound: int = 2

    def __post_init__(self) -> None:
        if len(self.dims) != 4 or any(d < 1 for d in self.dims):
            raise DimensionMismatch(f"dims must be four positive counts, got {self.dims}")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.numerator_bound < 0 or self.denominator_bound < 1:
            raise ValueError("entry pool bounds out of range")


def random_instance(spec: InstanceSpec) -> tuple[Matrix, Matrix, Matrix]:
    """The triple determined by ``spec``; same spec, same triple."""
    lcg = Lcg(spec.seed)
    field = spec.field

    def draw():
        if field.modulus is not None:
            return lcg.next_below(field.modulus)
        num = lcg.next_below(2 * spec.numerator_bound + 1) - spec.numerator_bound
        den = 1 + lcg.next_below(spec.denominator_bound)
        return Fraction(num, den)

    def build(rows: int, cols: int) -> Matrix:
        return Matrix(field, [[draw() for _ in range(cols)] for _ in range(rows)])

    m, n, p, q = spec.dims
    return build(m, n), build(n, p), build(p, q)


def _flat(m: Matrix) -> tuple:
    return tuple(x for row in m.entries for x in row)


def _mul_flat(a: tuple, b: tuple, n: int, k: int, m: int, p: int) -> tuple:
    # (n x k) @ (k x m) over GF(p), flat row-major operands.
    out = []
    for i in range(n):
        base = i * k
        for j in range(m):
            acc = 0
            for t in range(k):
                acc += a[base + t] * b[t * m + j]
            out.append(acc % p)
    return tuple(out)


def brute_force_solvable(
    a: Matrix, b: Matrix, c: Matrix, budget: int = DEFAULT_BUDGET
) -> bool:
    """Decide solvability of B = BCX + YAB by full enumeration.

    Candidate X matrices over GF(p) are ordered lexicographically by
    their row-major entry tuples, Y likewise, and pairs are scanned
    X-major with an early exit on the first solution. The total pair
    count p**(X cells + Y cells) must stay within ``budget``.
    """
    if not (a.field == b.field == c.field):
        raise FieldMismatch("A, B, C must share a field")
    if a.cols != b.rows or b.cols != c.rows:
        raise DimensionMismatch("A, B, C dimensions do not chain")
    if not a.field.is_prime_field:
        raise NotFiniteField("exhaustive search needs a prime field")
    p = a.field.modulus

    m_dim, n_dim, p_dim, q_dim = a.rows, b.rows, b.cols, c.cols
    x_cells = q_dim * p_dim
    y_cells = n_dim * m_dim
    total = p ** (x_cells + y_cells)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate pairs exceed budget {budget}")

    b_flat = _flat(b)
    ab_flat = _flat(a @ b)
    bc_flat = _flat(b @ c)

    if p**y_cells <= _PRECOMPUTE_LIMIT:
        y_products = {
            _mul_flat(y, ab_flat, n_dim, m_dim, p_dim, p)
            for y in itertools.product(range(p), repeat=y_cells)
        }
    else:
        y_products = None

    for x in itertools.product(range(p), repeat=x_cells):
        bcx = _mul_flat(bc_flat, x, n_dim, q_dim, p_dim, p)
        target = tuple((bv - v) % p for bv, v in zip(b_flat, bcx))
        if y_products is not None:
            if target in y_products:
                return True
        else:
            for y in itertools.product(range(p), repeat=y_cells):
                if _mul_flat(y, ab_flat, n_dim, m_dim, p_dim, p) == target:
                    return True
    return False
