"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial over a fixed number of variables is a map from exponent
tuples to nonzero Fractions.  This is deliberately minimal: arithmetic,
differentiation, truncation, composition and evaluation cover everything
the chart expansions and eliminants need.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent tuple {exps} has wrong length for {nvars} variables")
                c = _as_fraction(coeff)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def const(nvars: int, value: Scalar) -> "Poly":
        return Poly(nvars, {(0,) * nvars: value})

    @staticmethod
    def variable(nvars: int, index: int) -> "Poly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        exps = [0] * nvars
        exps[index] = 1
        return Poly(nvars, {tuple(exps): 1})

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            new = terms.get(exps, Fraction(0)) + c
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        out = Poly(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        out = Poly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            out = Poly(self.nvars)
            if c:
                out.terms = {e: v * c for e, v in self.terms.items()}
            return out
        if other.nvars != self.nvars:
            raise ValueError("mixed variable counts")
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exps, Fraction(0)) + c1 * c2
                if new:
                    terms[exps] = new
                else:
                    terms.pop(exps, None)
        out = Poly(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Poly":
        if power < 0:
            raise ValueError("negative powers are not defined")
        result = Poly.const(self.nvars, 1)
        base = self
        k = power
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms sorted by ascending exponent tuple (plain lex)."""
        return sorted(self.terms.items())

    # -- calculus and substitution --------------------------------------

    def derivative(self, index: int) -> "Poly":
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[index]
            if e:
                lowered = list(exps)
                lowered[index] = e - 1
                key = tuple(lowered)
                new = terms.get(key, Fraction(0)) + c * e
                if new:
                    terms[key] = new
                else:
                    terms.pop(key, None)
        out = Poly(self.nvars)
        out.terms = terms
        return out

    def truncate(self, max_degree: int) -> "Poly":
        """Drop every term of total degree above max_degree."""
        out = Poly(self.nvars)
        out.terms = {e: c for e, c in self.terms.items() if sum(e) <= max_degree}
        return out

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        vals = [_as_fraction(x) for x in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(vals, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    def substitute(self, values: Sequence[Union["Poly", Scalar]],
                   nvars_out: int | None = None) -> "Poly":
        """Compose: replace variable i by values[i] (polynomials or scalars)."""
        if len(values) != self.nvars:
            raise ValueError("substitution needs one value per variable")
        if nvars_out is None:
            for v in values:
                if isinstance(v, Poly):
                    nvars_out = v.nvars
                    break
            else:
                nvars_out = 0
        subs: list[Poly] = []
        for v in values:
            if isinstance(v, Poly):
                if v.nvars != nvars_out:
                    raise ValueError("substituted polynomials have mixed variable counts")
                subs.append(v)
            else:
                subs.append(Poly.const(nvars_out, v))
        powers: list[dict[int, Poly]] = [dict() for _ in range(self.nvars)]
        result = Poly.zero(nvars_out)
        for exps, c in self.terms.items():
            term = Poly.const(nvars_out, c)
            for i, e in enumerate(exps):
                if not e:
                    continue
                cache = powers[i]
                if e not in cache:
                    cache[e] = subs[i] ** e
                term = term * cache[e]
            result = result + term
        return result

    # -- display --------------------------------------------------------

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        ordered = sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0]))
        pieces: list[str] = []
        for exps, coeff in ordered:
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            body = "*".join(factors)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Poly({self.to_string()})"


def det(rows: Sequence[Sequence[Union[Poly, Scalar]]]) -> Poly:
    """Determinant of a square matrix of polynomials, by minor expansion."""
    size = len(rows)
    nvars = None
    for row in rows:
        if len(row) != size:
            raise ValueError("determinant needs a square matrix")
        for entry in row:
            if isinstance(entry, Poly):
                nvars = entry.nvars
                break
        if nvars is not None:
            break
    if nvars is None:
        nvars = 0
    lifted = [[e if isinstance(e, Poly) else Poly.const(nvars, e) for e in row]
              for row in rows]
    cache: dict[tuple[int, ...], Poly] = {}

    def minor(cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.const(nvars, 1)
        if cols in cache:
            return cache[cols]
        r = size - len(cols)
        total = Poly.zero(nvars)
        for k, c in enumerate(cols):
            entry = lifted[r][c]
            if entry.is_zero:
                continue
            rest = cols[:k] + cols[k + 1:]
            sub = minor(rest)
            term = entry * sub
            total = total + (term if k % 2 == 0 else -term)
        cache[cols] = total
        return total

    return minor(tuple(range(size)))


def integer_primitive(p: Poly) -> Poly:
    """Scale to integer coefficients with content 1, lex-first term positive."""
    if p.is_zero:
        return p
    denom = 1
    for c in p.terms.values():
        denom = lcm(denom, c.denominator)
    num = 0
    for c in p.terms.values():
        num = gcd(num, c.numerator * (denom // c.denominator))
    scale = Fraction(denom, num)
    first = min(p.terms)
    if p.terms[first] < 0:
        scale = -scale
    return p * scale


def divisible_by_variable(p: Poly, index: int) -> bool:
    return bool(p.terms) and all(e[index] >= 1 for e in p.terms)


def divide_by_variable(p: Poly, index: int) -> Poly:
    if not divisible_by_variable(p, index):
        raise ValueError(f"polynomial is not divisible by variable {index}")
    out = Poly(p.nvars)
    for exps, c in p.terms.items():
        lowered = list(exps)
        lowered[index] -= 1
        out.terms[tuple(lowered)] = c
    return out


def strip_variable_factors(p: Poly) -> Poly:
    """Remove every single-variable factor x_i dividing the polynomial."""
    for i in range(p.nvars):
        while divisible_by_variable(p, i):
            p = divide_by_variable(p, i)
    return p


def restrict_to_line(p: Poly, base: Sequence[Scalar], direction: Sequence[Scalar]) -> Poly:
    """Univariate restriction t -> p(base + t*direction)."""
    if len(base) != p.nvars or len(direction) != p.nvars:
        raise ValueError("base and direction must match the variable count")
    t = Poly.variable(1, 0)
    subs = [Poly.const(1, b) + t * w for b, w in zip(base, direction)]
    return p.substitute(subs, nvars_out=1)
