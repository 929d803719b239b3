"""Exact sparse linear algebra over the rationals.

Rank, reduced row echelon form, kernels and span dimensions with
arbitrary-precision rational arithmetic.  Every dimension claim in the
package reduces to a rank computed here, so there is no floating point and
no tolerance anywhere.

Elimination is fraction-free: rows are rescaled to coprime integers before
and after every combination step, which keeps intermediate numerators small
without ever dividing inexactly.  Pivoting is deterministic (leftmost
nonzero column, first available row) so reduced forms are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse rational matrix; absent entries are zero."""

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        clean: dict[tuple[int, int], Fraction] = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) outside {self.rows}x{self.cols} matrix")
            v = Fraction(value)
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @staticmethod
    def from_rows(rows: Iterable[Union[Sequence[Scalar], Mapping[int, Scalar]]],
                  cols: int | None = None) -> "SparseMatrix":
        """Build a matrix from an iterable of rows (sequences or column maps)."""
        entries: dict[tuple[int, int], Fraction] = {}
        width = cols
        count = 0
        for r, row in enumerate(rows):
            count += 1
            if isinstance(row, Mapping):
                items = row.items()
                if width is None:
                    raise ValueError("cols is required when rows are mappings")
            else:
                if width is None:
                    width = len(row)
                elif len(row) != width:
                    raise ValueError("rows have inconsistent lengths")
                items = enumerate(row)
            for c, value in items:
                v = Fraction(value)
                if v:
                    entries[(r, c)] = v
        return SparseMatrix(count, 0 if width is None else width, entries)

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries.get((r, c), Fraction(0))

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows,
                            {(c, r): v for (r, c), v in self.entries.items()})

    def matvec(self, x: Sequence[Scalar]) -> tuple[Fraction, ...]:
        if len(x) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [Fraction(0)] * self.rows
        for (r, c), v in self.entries.items():
            if x[c]:
                out[r] += v * x[c]
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            dict(self.entries) == dict(other.entries)


class RrefResult(NamedTuple):
    rank: int
    pivots: list[int]
    reduced: SparseMatrix


def _normalize_row(row: dict[int, Fraction]) -> None:
    # Rescale in place to coprime integer entries, preserving signs.
    if not row:
        return
    denom = 1
    for v in row.values():
        denom = lcm(denom, v.denominator)
    num = 0
    for v in row.values():
        num = gcd(num, v.numerator * (denom // v.denominator))
    scale = Fraction(denom, num)
    if scale != 1:
        for c in row:
            row[c] *= scale


def rref(matrix: SparseMatrix) -> RrefResult:
    """Unique reduced row echelon form, with rank and pivot columns."""
    work = matrix.row_dicts()
    for row in work:
        _normalize_row(row)
    pivots: list[int] = []
    next_pivot = 0
    for col in range(matrix.cols):
        if next_pivot == len(work):
            break
        sel = None
        for i in range(next_pivot, len(work)):
            if work[i].get(col):
                sel = i
                break
        if sel is None:
            continue
        work[next_pivot], work[sel] = work[sel], work[next_pivot]
        piv = work[next_pivot]
        a = piv[col]
        for i, row in enumerate(work):
            if i == next_pivot:
                continue
            b = row.get(col)
            if not b:
                continue
            # Fraction-free combination: a*row - b*piv clears column `col`.
            for c, pv in piv.items():
                new = a * row.get(c, 0) - b * pv
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)
            for c in list(row):
                if c not in piv:
                    row[c] = a * row[c]
            _normalize_row(row)
        pivots.append(col)
        next_pivot += 1
    entries: dict[tuple[int, int], Fraction] = {}
    for i, col in enumerate(pivots):
        inv = 1 / work[i][col]
        for c, v in work[i].items():
            entries[(i, c)] = v * inv
    reduced = SparseMatrix(matrix.rows, matrix.cols, entries)
    return RrefResult(len(pivots), pivots, reduced)


def rank(matrix: SparseMatrix) -> int:
    return rref(matrix).rank


def kernel_basis(matrix: SparseMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of {x : M x = 0}; one vector per free column of the rref."""
    result = rref(matrix)
    pivot_of_col = {col: i for i, col in enumerate(result.pivots)}
    basis: list[tuple[Fraction, ...]] = []
    for free in range(matrix.cols):
        if free in pivot_of_col:
            continue
        vec = [Fraction(0)] * matrix.cols
        vec[free] = Fraction(1)
        for i, col in enumerate(result.pivots):
            coeff = result.reduced.entry(i, free)
            if coeff:
                vec[col] = -coeff
        basis.append(tuple(vec))
    return basis


def _rows_matrix(vectors: Sequence[Union[Sequence[Scalar], Mapping[int, Scalar]]],
                 dim: int | None) -> SparseMatrix:
    if not vectors:
        return SparseMatrix(0, dim or 0, {})
    if dim is None:
        first = vectors[0]
        if isinstance(first, Mapping):
            raise ValueError("dim is required when vectors are mappings")
        dim = len(first)
    return SparseMatrix.from_rows(vectors, cols=dim)


def span_dim(vectors: Sequence[Union[Sequence[Scalar], Mapping[int, Scalar]]],
             dim: int | None = None) -> int:
    """Dimension of the span of the given vectors."""
    return rank(_rows_matrix(vectors, dim))


def in_span(vectors: Sequence[Union[Sequence[Scalar], Mapping[int, Scalar]]],
            candidate: Union[Sequence[Scalar], Mapping[int, Scalar]],
            dim: int | None = None) -> bool:
    """Whether candidate lies in the span of the given vectors."""
    base = span_dim(vectors, dim)
    extended = span_dim(list(vectors) + [candidate], dim)
    return extended == base
