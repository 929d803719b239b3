"""Sections of the Plücker line bundles in an explicit chart, and their
order-l truncations (jets) at the distinguished point.

Chart convention: the m-plane with chart matrix T (rows m+1..m+n, columns
1..m) is the column span of the (m+n) x m matrix [[I_m], [T]].  The chart
variable t_{ij} sits at absolute row i and column j; variables are ordered
lexicographically by (i, j), matching the order of the nilpotent basis
elements E_ij.  The distinguished point is T = 0, where the minor with
rows {1..m} (the local trivialization) is identically 1, so a section is
an honest polynomial in the chart variables and its order-l jet is literal
truncation at total degree l.

A section carries both its chart polynomial and its coordinates in the
degree-d Plücker monomial spanning set; the latter is what pairs against
module vectors.  Row reduction produces basis sections whose coordinates
are linear combinations of monomials (the single-monomial case is the
generating family).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence, Union

from .filtration import canonical_filtration
from .linalg import SparseMatrix, kernel_basis, rref
from .plethysm import DEFAULT_AMBIENT_CAP, SymIndex, pair, sym_basis
from .polynomials import Poly, det

Scalar = Union[int, Fraction]


def chart_variables(m: int, n: int) -> list[tuple[int, int]]:
    """The mn chart positions (i, j), i in m+1..m+n, j in 1..m, in lex order."""
    return [(i, j) for i in range(m + 1, m + n + 1) for j in range(1, m + 1)]


@dataclass
class SectionPolynomial:
    """A global section in chart coordinates, with Plücker-monomial provenance."""

    chart: Poly
    plucker: dict[SymIndex, Fraction]

    def degree(self) -> int | None:
        for idx in self.plucker:
            return len(idx)
        return None

    def value_at_origin(self) -> Fraction:
        return self.chart.coefficient((0,) * self.chart.nvars)


def plucker_polynomial(subset: Sequence[int], m: int, n: int) -> SectionPolynomial:
    """The m x m minor with the given rows of [[I_m], [T]], in the chart
    normalized so the minor for rows {1..m} is 1."""
    rows = tuple(sorted(subset))
    if len(rows) != m or len(set(rows)) != m:
        raise ValueError(f"need {m} distinct row indices")
    if rows[0] < 1 or rows[-1] > m + n:
        raise ValueError(f"row indices must lie in 1..{m + n}")
    variables = chart_variables(m, n)
    var_index = {pos: k for k, pos in enumerate(variables)}
    nvars = len(variables)
    matrix: list[list[Poly]] = []
    for r in rows:
        if r <= m:
            matrix.append([Poly.const(nvars, 1 if c == r else 0)
                           for c in range(1, m + 1)])
        else:
            matrix.append([Poly.variable(nvars, var_index[(r, c)])
                           for c in range(1, m + 1)])
    return SectionPolynomial(det(matrix), {(rows,): Fraction(1)})


def section_monomial(multiset: SymIndex, m: int, n: int) -> SectionPolynomial:
    """Product of Plücker chart polynomials over a degree-d multiset."""
    nvars = m * n
    chart = Poly.const(nvars, 1)
    for subset in multiset:
        chart = chart * plucker_polynomial(subset, m, n).chart
    return SectionPolynomial(chart, {tuple(sorted(multiset)): Fraction(1)})


def monomial_sections(m: int, n: int, d: int,
                      cap: int = DEFAULT_AMBIENT_CAP) -> list[SectionPolynomial]:
    """The full degree-d Plücker monomial family, in canonical basis order."""
    return [section_monomial(idx, m, n) for idx in sym_basis(m, n, d, cap)]


def jet_monomials(m: int, n: int, l: int) -> list[tuple[int, ...]]:
    """Chart-variable exponent tuples of total degree <= l, graded lex."""
    if l < 0:
        raise ValueError("l must be non-negative")
    nvars = m * n

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    out: list[tuple[int, ...]] = []
    for degree in range(l + 1):
        out.extend(sorted(compositions(degree, nvars)))
    return out


def jet_truncation(section: SectionPolynomial, m: int, n: int,
                   l: int) -> tuple[Fraction, ...]:
    """Coefficient vector of the order-l truncation at the origin."""
    columns = jet_monomials(m, n, l)
    index = {exps: k for k, exps in enumerate(columns)}
    out = [Fraction(0)] * len(columns)
    for exps, c in section.chart.terms.items():
        k = index.get(exps)
        if k is not None:
            out[k] = c
    return tuple(out)


def _chart_columns(sections: Sequence[SectionPolynomial]) -> list[tuple[int, ...]]:
    exps = set()
    for s in sections:
        exps.update(s.chart.terms)
    return sorted(exps, key=lambda e: (sum(e), e))


def section_space(m: int, n: int, d: int,
                  cap: int = DEFAULT_AMBIENT_CAP) -> list[SectionPolynomial]:
    """Row-reduced basis of the span of all degree-d Plücker monomials.

    Plücker relations are handled implicitly: dependent monomials reduce
    away, and each basis section keeps exact coordinates over the monomial
    family so it can be paired against module vectors.
    """
    raw = monomial_sections(m, n, d, cap)
    columns = _chart_columns(raw)
    col_index = {exps: k for k, exps in enumerate(columns)}
    width = len(columns)
    rows = []
    for r, s in enumerate(raw):
        row = {col_index[exps]: c for exps, c in s.chart.terms.items()}
        row[width + r] = Fraction(1)  # provenance tracking
        rows.append(row)
    result = rref(SparseMatrix.from_rows(rows, cols=width + len(raw)))
    nvars = m * n
    basis: list[SectionPolynomial] = []
    reduced_rows = result.reduced.row_dicts()
    for i, pivot in enumerate(result.pivots):
        if pivot >= width:
            continue  # a pure Plücker relation, not a section
        row = reduced_rows[i]
        chart_terms = {columns[c]: v for c, v in row.items() if c < width}
        plucker: dict[SymIndex, Fraction] = {}
        for c, v in row.items():
            if c >= width:
                key = next(iter(raw[c - width].plucker))
                plucker[key] = plucker.get(key, Fraction(0)) + v
        basis.append(SectionPolynomial(Poly(nvars, chart_terms),
                                       {k: v for k, v in plucker.items() if v}))
    return basis


def taylor_matrix(m: int, n: int, d: int, l: int,
                  cap: int = DEFAULT_AMBIENT_CAP) -> tuple[SparseMatrix, int]:
    """Rows are basis sections, columns the jet monomials of degree <= l;
    returns the matrix together with its exact rank."""
    if l < 1:
        raise ValueError("l must be at least 1")
    basis = section_space(m, n, d, cap)
    rows = [jet_truncation(s, m, n, l) for s in basis]
    matrix = SparseMatrix.from_rows(rows, cols=comb(m * n + l, m * n))
    return matrix, rref(matrix).rank


def monomial_jet_projective(exponents: Sequence[int], l: int) -> tuple[Fraction, ...]:
    """Order-l jet of a projective-space monomial section in the chart at
    index 0: the unit vector at the residual exponents when their total
    degree is at most l, and zero otherwise."""
    if not exponents:
        raise ValueError("need at least one exponent")
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be non-negative")
    n = len(exponents) - 1
    tail = tuple(exponents[1:])
    columns = jet_monomials(1, n, l)
    out = [Fraction(0)] * len(columns)
    if sum(tail) <= l:
        out[columns.index(tail)] = Fraction(1)
    return tuple(out)


def kernel_sections(m: int, n: int, d: int, l: int,
                    cap: int = DEFAULT_AMBIENT_CAP
                    ) -> tuple[list[SectionPolynomial], int]:
    """Basis of the sections whose order-l jet vanishes, with its dimension."""
    if not 1 <= l <= d:
        raise ValueError("l must satisfy 1 <= l <= d")
    basis = section_space(m, n, d, cap)
    matrix, _ = taylor_matrix(m, n, d, l, cap)
    combos = kernel_basis(matrix.transpose())
    nvars = m * n
    out: list[SectionPolynomial] = []
    for combo in combos:
        chart = Poly.zero(nvars)
        plucker: dict[SymIndex, Fraction] = {}
        for coeff, s in zip(combo, basis):
            if not coeff:
                continue
            chart = chart + coeff * s.chart
            for key, v in s.plucker.items():
                new = plucker.get(key, Fraction(0)) + coeff * v
                if new:
                    plucker[key] = new
                else:
                    plucker.pop(key, None)
        out.append(SectionPolynomial(chart, plucker))
    return out, len(out)


@dataclass
class DualityReport:
    filtration_dim: int
    taylor_rank: int
    dim_match: bool
    pairing_vanishes: bool

    @property
    def ok(self) -> bool:
        return self.dim_match and self.pairing_vanishes


def duality_check(m: int, n: int, d: int, l: int,
                  cap: int = DEFAULT_AMBIENT_CAP) -> DualityReport:
    """The filtration level and the jet space have equal dimension, and
    every filtration vector pairs to zero with every vanishing-jet section."""
    if not 1 <= l < d:
        raise ValueError("the duality is only asserted for 1 <= l < d")
    filtration = canonical_filtration(m, n, d, l, cap)
    level = filtration.levels[l]
    _, rank = taylor_matrix(m, n, d, l, cap)
    vanishing, _ = kernel_sections(m, n, d, l, cap)
    pairing_vanishes = all(pair(u, s) == 0
                           for u in level.basis for s in vanishing)
    return DualityReport(level.dim, rank, level.dim == rank, pairing_vanishes)


def _chart_point(m: int, n: int, point) -> dict[tuple[int, int], Fraction]:
    variables = chart_variables(m, n)
    if isinstance(point, Mapping):
        values = {pos: Fraction(point.get(pos, 0)) for pos in variables}
        extra = set(point) - set(variables)
        if extra:
            raise ValueError(f"unknown chart positions {sorted(extra)}")
        return values
    rows = list(point)
    if len(rows) != n or any(len(row) != m for row in rows):
        raise ValueError(f"chart point must be an {n} x {m} array")
    return {(m + 1 + r, 1 + c): Fraction(rows[r][c])
            for r in range(n) for c in range(m)}


def chart_homogeneity_check(m: int, n: int, d: int, l: int, point,
                            cap: int = DEFAULT_AMBIENT_CAP) -> bool:
    """Rank of the Taylor matrix re-expanded around another chart point
    equals the rank at the origin."""
    if l < 1:
        raise ValueError("l must be at least 1")
    values = _chart_point(m, n, point)
    variables = chart_variables(m, n)
    nvars = len(variables)
    subs = [Poly.variable(nvars, k) + values[pos]
            for k, pos in enumerate(variables)]
    basis = section_space(m, n, d, cap)
    columns = jet_monomials(m, n, l)
    col_index = {exps: k for k, exps in enumerate(columns)}
    rows = []
    for s in basis:
        shifted = s.chart.substitute(subs, nvars_out=nvars).truncate(l)
        row = {col_index[exps]: c for exps, c in shifted.terms.items()}
        rows.append(row)
    shifted_rank = rref(SparseMatrix.from_rows(rows, cols=len(columns))).rank
    _, origin_rank = taylor_matrix(m, n, d, l, cap)
    return shifted_rank == origin_rank
