"""Immutable dense matrices with exact entries.

Entries are stored row-major as nested tuples and are canonicalized on
construction, so equal matrices compare and hash identically. Zero-row
and zero-column shapes are allowed; a matrix with no columns doubles as
the empty basis of the trivial subspace.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field, Scalar


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(
        self,
        field: Field,
        entries: Iterable[Iterable],
        shape: tuple[int, int] | None = None,
    ):
        data = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        if shape is not None:
            nrows, ncols = shape
        else:
            nrows = len(data)
            ncols = len(data[0]) if data else 0
        if nrows < 0 or ncols < 0:
            raise DimensionMismatch(f"negative shape {nrows}x{ncols}")
        if len(data) != nrows or any(len(row) != ncols for row in data):
            raise DimensionMismatch("entries do not match the declared shape")
        self.field = field
        self.rows = nrows
        self.cols = ncols
        self.entries = data

    # -- constructors --------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(
            field,
            [[one if i == j else zero for j in range(n)] for i in range(n)],
            shape=(n, n),
        )

    @classmethod
    def column(cls, field: Field, values: Sequence) -> "Matrix":
        return cls(field, [[v] for v in values], shape=(len(values), 1))

    @classmethod
    def from_columns(
        cls, field: Field, columns: Sequence[Sequence], rows: int
    ) -> "Matrix":
        """Assemble a matrix from column vectors; ``rows`` fixes the
        height when ``columns`` is empty."""
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(field, data, shape=(rows, len(columns)))

    # -- basic queries ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_zero(self) -> bool:
        zero = self.field.zero
        return all(x == zero for row in self.entries for x in row)

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(self.field.format(x) for x in row) + "]"
            for row in self.entries
        )
        return f"Matrix({self.field.label}, {self.rows}x{self.cols}, [{body}])"

    def _check_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(
                f"operands over {self.field.label} and {other.field.label}"
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        add = self.field.add
        return Matrix(
            self.field,
            [
                [add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            shape=self.shape,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {other.shape} from {self.shape}")
        sub = self.field.sub
        return Matrix(
            self.field,
            [
                [sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            shape=self.shape,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        field = self.field
        zero = field.zero
        out = []
        for i in range(self.rows):
            left = self.entries[i]
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + left[k] * other.entries[k][j]
                row.append(field.canon(acc))
            out.append(row)
        return Matrix(field, out, shape=(self.rows, other.cols))

    # -- shuffling ----------------------------------------------------------

    def transpose(self) -> "Matrix":
        data = [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix(self.field, data, shape=(self.cols, self.rows))

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch(
                f"cannot augment {self.rows} rows with {other.rows} rows"
            )
        data = [self.entries[i] + other.entries[i] for i in range(self.rows)]
        return Matrix(self.field, data, shape=(self.rows, self.cols + other.cols))

    def take_cols(self, indices: Iterable[int]) -> "Matrix":
        idx = list(indices)
        data = [[row[j] for j in idx] for row in self.entries]
        return Matrix(self.field, data, shape=(self.rows, len(idx)))

    def col(self, j: int) -> "Matrix":
        return self.take_cols([j])

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> "Matrix":
        ri = list(row_indices)
        ci = list(col_indices)
        data = [[self.entries[i][j] for j in ci] for i in ri]
        return Matrix(self.field, data, shape=(len(ri), len(ci)))


def matmul(lhs: Matrix, rhs: Matrix) -> Matrix:
    """Exact matrix product; function form of ``lhs @ rhs``."""
    return lhs @ rhs
