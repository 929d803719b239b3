"""The special linear Lie algebra sl(m+n) over the rationals.

Conventions, fixed once and used everywhere downstream:

* matrix indices are 1-based; ``E(i, j)`` is the matrix unit with a single
  1 in row i, column j, and ``H(k) = E(k,k) - E(k+1,k+1)``;
* the ordered basis is every E_ij with i != j sorted by (i, j), followed by
  H_1 .. H_{m+n-1}; PBW monomial orders and chart variable orders are all
  derived from this order;
* the first m coordinates are the distinguished block: the parabolic
  subalgebra p consists of matrices whose lower-left n x m block vanishes,
  and its complement n is that block (abelian, of dimension m*n);
* weights live in Z^{m+n} modulo the all-ones vector, so two weight vectors
  are equal exactly when their difference is constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class LieElement:
    """A traceless (size x size) matrix, stored sparsely."""

    __slots__ = ("size", "entries")

    def __init__(self, size: int, entries: Mapping[tuple[int, int], Scalar] | None = None):
        self.size = size
        clean: dict[tuple[int, int], Fraction] = {}
        trace = Fraction(0)
        if entries:
            for (i, j), value in entries.items():
                if not (1 <= i <= size and 1 <= j <= size):
                    raise ValueError(f"index ({i},{j}) outside 1..{size}")
                v = Fraction(value)
                if v:
                    clean[(i, j)] = v
                    if i == j:
                        trace += v
        if trace:
            raise ValueError("matrix is not traceless")
        self.entries = clean

    def _check(self, other: "LieElement") -> None:
        if self.size != other.size:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        entries = dict(self.entries)
        for key, v in other.entries.items():
            new = entries.get(key, Fraction(0)) + v
            if new:
                entries[key] = new
            else:
                entries.pop(key, None)
        return LieElement(self.size, entries)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-1) * other

    def __rmul__(self, scalar: Scalar) -> "LieElement":
        c = Fraction(scalar)
        return LieElement(self.size, {k: c * v for k, v in self.entries.items()})

    def __neg__(self) -> "LieElement":
        return (-1) * self

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __hash__(self):
        return hash((self.size, frozenset(self.entries.items())))

    def __repr__(self):
        if not self.entries:
            return "LieElement(0)"
        body = " + ".join(f"{v}*E{i}{j}" for (i, j), v in sorted(self.entries.items()))
        return f"LieElement({body})"


class Weight:
    """Integer weight vector, considered modulo the all-ones vector."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[int]):
        self.coords = tuple(int(c) for c in coords)

    def normalized(self) -> tuple[int, ...]:
        base = min(self.coords) if self.coords else 0
        return tuple(c - base for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        if len(self.coords) != len(other.coords):
            return False
        diffs = {a - b for a, b in zip(self.coords, other.coords)}
        return len(diffs) <= 1

    def __hash__(self):
        return hash(self.normalized())

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __repr__(self):
        return f"Weight{self.coords}"


class SubalgebraTag(str, Enum):
    G_MINUS = "g_minus"
    H = "h"
    G_PLUS = "g_plus"
    P = "p"
    N = "n"


def _position_allowed(tag: SubalgebraTag, m: int, i: int, j: int) -> bool:
    if tag is SubalgebraTag.G_MINUS:
        return i > j
    if tag is SubalgebraTag.H:
        return i == j
    if tag is SubalgebraTag.G_PLUS:
        return i < j
    if tag is SubalgebraTag.P:
        return not (i > m and j <= m)
    if tag is SubalgebraTag.N:
        return i > m and j <= m
    raise ValueError(f"unknown tag {tag!r}")


class LieAlgebraContext:
    """sl(m+n) with its block decomposition relative to the first m coordinates."""

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise ValueError("both block sizes must be at least 1")
        self.m = m
        self.n = n
        self.size = m + n
        self.N = self.size * self.size - 1
        self.basis: list[LieElement] = []
        self.basis_names: list[str] = []
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                if i != j:
                    self.basis.append(self.E(i, j))
                    self.basis_names.append(f"E{i},{j}")
        for k in range(1, self.size):
            self.basis.append(self.H(k))
            self.basis_names.append(f"H{k}")

    def E(self, i: int, j: int) -> LieElement:
        if i == j:
            raise ValueError("diagonal matrix units are not traceless; use H(k)")
        return LieElement(self.size, {(i, j): 1})

    def H(self, k: int) -> LieElement:
        if not 1 <= k < self.size:
            raise ValueError(f"Cartan index {k} out of range")
        return LieElement(self.size, {(k, k): 1, (k + 1, k + 1): -1})

    def contains(self, x: LieElement, tag: SubalgebraTag) -> bool:
        if x.size != self.size:
            raise ValueError("element size mismatch")
        return all(_position_allowed(tag, self.m, i, j) for (i, j) in x.entries)

    def subalgebra_basis(self, tag: SubalgebraTag) -> list[LieElement]:
        if tag is SubalgebraTag.H:
            return [self.H(k) for k in range(1, self.size)]
        out = [self.E(i, j)
               for i in range(1, self.size + 1)
               for j in range(1, self.size + 1)
               if i != j and _position_allowed(tag, self.m, i, j)]
        if tag is SubalgebraTag.P:
            out.extend(self.H(k) for k in range(1, self.size))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebraContext):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return f"LieAlgebraContext(m={self.m}, n={self.n})"


def build_context(m: int, n: int) -> LieAlgebraContext:
    return LieAlgebraContext(m, n)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Matrix commutator [x, y] = xy - yx."""
    if x.size != y.size:
        raise ValueError("elements live in different algebras")
    acc: dict[tuple[int, int], Fraction] = {}
    y_rows: dict[int, list[tuple[int, Fraction]]] = {}
    x_rows: dict[int, list[tuple[int, Fraction]]] = {}
    for (i, j), v in y.entries.items():
        y_rows.setdefault(i, []).append((j, v))
    for (i, j), v in x.entries.items():
        x_rows.setdefault(i, []).append((j, v))
    for (i, k), xv in x.entries.items():
        for j, yv in y_rows.get(k, ()):
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + xv * yv
    for (i, k), yv in y.entries.items():
        for j, xv in x_rows.get(k, ()):
            acc[(i, j)] = acc.get((i, j), Fraction(0)) - yv * xv
    return LieElement(x.size, acc)


@dataclass(frozen=True)
class SimpleRoot:
    index: int
    weight: Weight
    lowering: LieElement


def simple_roots(ctx: LieAlgebraContext) -> list[SimpleRoot]:
    """Simple roots L_i - L_{i+1} with their lowering elements E_{i+1,i}."""
    out = []
    for i in range(1, ctx.size):
        coords = [0] * ctx.size
        coords[i - 1] = 1
        coords[i] = -1
        out.append(SimpleRoot(i, Weight(coords), ctx.E(i + 1, i)))
    return out


def root_weight(ctx: LieAlgebraContext, i: int, j: int) -> Weight:
    """The root L_i - L_j carried by the matrix unit E_ij."""
    coords = [0] * ctx.size
    coords[i - 1] += 1
    coords[j - 1] -= 1
    return Weight(coords)


def rho_character(ctx: LieAlgebraContext, d: int, y: LieElement) -> Fraction:
    """d times the trace of the upper-left m x m block of y (y must be in p)."""
    if not ctx.contains(y, SubalgebraTag.P):
        raise ValueError("element is not in the parabolic subalgebra")
    block_trace = sum((y.entries.get((i, i), Fraction(0)) for i in range(1, ctx.m + 1)),
                      Fraction(0))
    return d * block_trace


def highest_weight(ctx: LieAlgebraContext, d: int) -> Weight:
    if d < 1:
        raise ValueError("degree must be positive")
    return Weight((d,) * ctx.m + (0,) * ctx.n)
