"""Canonical filtrations of the irreducible module generated by the highest
weight vector, their PBW bases, and annihilator/character-ideal checks.

Level l of the canonical filtration is the span of all vectors obtained by
applying at most l Lie algebra elements to the highest weight vector v; it
is computed iteratively as F_l = F_{l-1} + g . F_{l-1} and stored through
its canonical reduced row echelon basis, so bases are reproducible.

A PBW monomial is an exponent vector over a fixed ordered basis (of the
nilpotent complement n, or of all of g); it acts by applying its factors
right to left as repeated module actions.  No enveloping-algebra
multiplication is ever performed: every identity asserted here is verified
by exact rank computation on evaluation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .errors import SizeCapError
from .lie import (LieAlgebraContext, LieElement, SubalgebraTag, Weight,
                  build_context, rho_character, simple_roots)
from .linalg import SparseMatrix, rref
from .plethysm import (DEFAULT_AMBIENT_CAP, PlethysmVector, act, coordinates,
                       highest_weight_vector, sym_basis, weight_of)

DEFAULT_MONOMIAL_CAP = 50000

Subalgebra = Union[SubalgebraTag, str]


def weyl_dim_oracle(m: int, n: int, d: int) -> int:
    """Hook-content product over the m x n rectangle; always an integer."""
    if m < 1 or n < 1 or d < 1:
        raise ValueError("m, n and d must all be at least 1")
    value = Fraction(1)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            value *= Fraction(d + i + j - 1, i + j - 1)
    if value.denominator != 1:
        raise ArithmeticError("hook-content product is not an integer")
    return value.numerator


def pbw_monomials(num_generators: int, max_degree: int,
                  cap: int = DEFAULT_MONOMIAL_CAP) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree <= max_degree, sorted by (degree, lex)."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    count = comb(num_generators + max_degree, num_generators)
    if count > cap:
        raise SizeCapError("PBW monomial count", count, cap)
    out: list[tuple[int, ...]] = []

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for degree in range(max_degree + 1):
        out.extend(sorted(compositions(degree, num_generators)))
    return out


def apply_pbw_monomial(generators: Sequence[LieElement], exponents: Sequence[int],
                       start: PlethysmVector) -> PlethysmVector:
    """Apply z_1^{a_1} ... z_k^{a_k} to a vector, rightmost factor first."""
    vec = start
    for g, e in zip(reversed(generators), reversed(list(exponents))):
        for _ in range(e):
            if vec.is_zero:
                return vec
            vec = act(g, vec)
    return vec


def _generators(ctx: LieAlgebraContext, subalgebra: Subalgebra) -> list[LieElement]:
    if isinstance(subalgebra, str) and subalgebra == "all":
        return list(ctx.basis)
    tag = SubalgebraTag(subalgebra)
    return ctx.subalgebra_basis(tag)


def _vector_rows(vectors: Sequence[PlethysmVector], index_of) -> list[dict[int, Fraction]]:
    return [coordinates(v, index_of) for v in vectors]


def _vectors_from_rref(reduced: SparseMatrix, rank: int, basis) -> list[PlethysmVector]:
    rows: list[dict] = [dict() for _ in range(rank)]
    for (r, c), v in reduced.entries.items():
        if r < rank:
            rows[r][basis[c]] = v
    return [PlethysmVector(row) for row in rows]


def _weight_multiset(rows: list[dict[int, Fraction]], basis, size: int,
                     cols: int) -> dict[Weight, int]:
    """Per-weight dimensions of a weight-homogeneous span."""
    by_weight: dict[Weight, list[int]] = {}
    for col, idx in enumerate(basis):
        by_weight.setdefault(weight_of(idx, size), []).append(col)
    out: dict[Weight, int] = {}
    for weight, group in by_weight.items():
        keep = set(group)
        restricted = [{c: v for c, v in row.items() if c in keep} for row in rows]
        restricted = [row for row in restricted if row]
        if not restricted:
            continue
        r = rref(SparseMatrix.from_rows(restricted, cols=cols)).rank
        if r:
            out[weight] = r
    return out


@dataclass
class FiltrationLevel:
    level: int
    dim: int
    basis: list[PlethysmVector]
    weight_multiset: dict[Weight, int]
    saturated: bool


@dataclass
class FiltrationResult:
    m: int
    n: int
    d: int
    module_dim: int
    levels: list[FiltrationLevel]
    saturation_level: int | None

    @property
    def dims(self) -> list[int]:
        return [lvl.dim for lvl in self.levels]


def canonical_filtration(m: int, n: int, d: int, l_max: int,
                         cap: int = DEFAULT_AMBIENT_CAP) -> FiltrationResult:
    """Levels 0..l_max of the canonical filtration, with canonical bases."""
    if l_max < 0:
        raise ValueError("l_max must be non-negative")
    ctx = build_context(m, n)
    basis = sym_basis(m, n, d, cap)
    index_of = {idx: i for i, idx in enumerate(basis)}
    target = weyl_dim_oracle(m, n, d)

    current = [highest_weight_vector(m, n, d)]
    levels: list[FiltrationLevel] = []
    saturation_level: int | None = None

    for level in range(l_max + 1):
        generated = list(current)
        if level > 0:
            for vec in current:
                for x in ctx.basis:
                    image = act(x, vec)
                    if not image.is_zero:
                        generated.append(image)
        rows = _vector_rows(generated, index_of)
        result = rref(SparseMatrix.from_rows(rows, cols=len(basis)))
        current = _vectors_from_rref(result.reduced, result.rank, basis)
        reduced_rows = _vector_rows(current, index_of)
        multiset = _weight_multiset(reduced_rows, basis, ctx.size, len(basis))
        dim = result.rank
        saturated = dim == target
        if saturated and saturation_level is None:
            saturation_level = level
        levels.append(FiltrationLevel(level, dim, current, multiset, saturated))

    return FiltrationResult(m, n, d, target, levels, saturation_level)


def pbw_filtration(m: int, n: int, d: int, l: int,
                   cap: int = DEFAULT_AMBIENT_CAP,
                   monomial_cap: int = DEFAULT_MONOMIAL_CAP
                   ) -> tuple[list[PlethysmVector], bool]:
    """All PBW monomial images z^a v, |a| <= l, over the n-basis, plus an
    exact independence flag (rank equals the monomial count)."""
    if l < 1:
        raise ValueError("l must be at least 1")
    ctx = build_context(m, n)
    basis = sym_basis(m, n, d, cap)
    index_of = {idx: i for i, idx in enumerate(basis)}
    generators = ctx.subalgebra_basis(SubalgebraTag.N)
    monomials = pbw_monomials(len(generators), l, monomial_cap)
    v = highest_weight_vector(m, n, d)
    vectors = [apply_pbw_monomial(generators, exps, v) for exps in monomials]
    rows = _vector_rows(vectors, index_of)
    r = rref(SparseMatrix.from_rows(rows, cols=len(basis))).rank
    return vectors, r == len(monomials)


def evaluation_matrix(m: int, n: int, d: int, l: int,
                      subalgebra: Subalgebra = "all",
                      cap: int = DEFAULT_AMBIENT_CAP,
                      monomial_cap: int = DEFAULT_MONOMIAL_CAP) -> SparseMatrix:
    """Row r is the image of the r-th PBW monomial applied to v; columns are
    the ambient module coordinates."""
    if l < 0:
        raise ValueError("l must be non-negative")
    ctx = build_context(m, n)
    basis = sym_basis(m, n, d, cap)
    index_of = {idx: i for i, idx in enumerate(basis)}
    generators = _generators(ctx, subalgebra)
    monomials = pbw_monomials(len(generators), l, monomial_cap)
    v = highest_weight_vector(m, n, d)
    rows = [coordinates(apply_pbw_monomial(generators, exps, v), index_of)
            for exps in monomials]
    return SparseMatrix.from_rows(rows, cols=len(basis))


def annihilator_dim(m: int, n: int, d: int, l: int,
                    cap: int = DEFAULT_AMBIENT_CAP,
                    monomial_cap: int = DEFAULT_MONOMIAL_CAP) -> int:
    """Dimension of the degree <= l part of the annihilator of v inside the
    full enveloping algebra filtration."""
    ctx = build_context(m, n)
    matrix = evaluation_matrix(m, n, d, l, "all", cap, monomial_cap)
    total = comb(ctx.N + l, ctx.N)
    return total - rref(matrix).rank


@dataclass
class SplitReport:
    dim_ul_g: int
    dim_ul_n: int
    dim_ann: int
    split_holds: bool


def verma_split_check(m: int, n: int, d: int, l: int,
                      cap: int = DEFAULT_AMBIENT_CAP,
                      monomial_cap: int = DEFAULT_MONOMIAL_CAP) -> SplitReport:
    """Exact check that U_l(g) splits as U_l(n) plus the annihilator piece."""
    if not 1 <= l < d:
        raise ValueError("the split is only asserted for 1 <= l < d")
    ctx = build_context(m, n)
    dim_ul_g = comb(ctx.N + l, ctx.N)
    dim_ul_n = comb(m * n + l, m * n)
    n_matrix = evaluation_matrix(m, n, d, l, SubalgebraTag.N, cap, monomial_cap)
    n_rank = rref(n_matrix).rank
    g_rank = rref(evaluation_matrix(m, n, d, l, "all", cap, monomial_cap)).rank
    dim_ann = dim_ul_g - g_rank
    split_holds = (n_rank == n_matrix.rows == dim_ul_n) and (g_rank == dim_ul_n)
    return SplitReport(dim_ul_g, dim_ul_n, dim_ann, split_holds)


@dataclass
class RootPowerReport:
    index: int
    power: int
    below_nonzero: bool
    at_power_zero: bool

    @property
    def ok(self) -> bool:
        return self.below_nonzero and self.at_power_zero


def serre_power_check(m: int, n: int, d: int,
                      cap: int = DEFAULT_AMBIENT_CAP) -> list[RootPowerReport]:
    """For each simple root, the exact lowering power that kills v.

    The expected power is 1 for every simple root except the m-th, where it
    is d + 1 (so the d-th power is still nonzero).
    """
    sym_basis(m, n, d, cap)  # enforce the ambient cap before acting
    ctx = build_context(m, n)
    v = highest_weight_vector(m, n, d)
    out = []
    for root in simple_roots(ctx):
        power = d + 1 if root.index == m else 1
        vec = v
        below_nonzero = True
        for _ in range(power - 1):
            vec = act(root.lowering, vec)
            if vec.is_zero:
                below_nonzero = False
                break
        at_power_zero = below_nonzero and act(root.lowering, vec).is_zero
        out.append(RootPowerReport(root.index, power, below_nonzero, at_power_zero))
    return out


def char_ideal_generator_check(m: int, n: int, d: int, l: int,
                               cap: int = DEFAULT_AMBIENT_CAP,
                               monomial_cap: int = DEFAULT_MONOMIAL_CAP) -> bool:
    """Every generator x(y - rho(y) 1), deg x <= l-1, y in the parabolic
    basis, annihilates v: the character ideal sits inside the annihilator."""
    if l < 1:
        raise ValueError("l must be at least 1")
    ctx = build_context(m, n)
    sym_basis(m, n, d, cap)
    v = highest_weight_vector(m, n, d)
    p_basis = ctx.subalgebra_basis(SubalgebraTag.P)
    monomials = pbw_monomials(ctx.N, l - 1, monomial_cap)
    for y in p_basis:
        generator_image = act(y, v) - rho_character(ctx, d, y) * v
        for exps in monomials:
            if not apply_pbw_monomial(ctx.basis, exps, generator_image).is_zero:
                return False
    return True


def multi_filtration(m: int, n: int, degrees: Sequence[int], l: int,
                     cap: int = DEFAULT_AMBIENT_CAP,
                     monomial_cap: int = DEFAULT_MONOMIAL_CAP) -> int:
    """Dimension of U_l(g) applied to the span of the highest weight vectors
    of a direct sum of modules of the given degrees."""
    if not degrees:
        raise ValueError("need at least one degree")
    if not 1 <= l <= min(degrees):
        raise ValueError("l must satisfy 1 <= l <= min(degrees)")
    ctx = build_context(m, n)
    monomials = pbw_monomials(ctx.N, l, monomial_cap)
    offsets = []
    total_cols = 0
    index_maps = []
    for d in degrees:
        basis = sym_basis(m, n, d, cap)
        offsets.append(total_cols)
        index_maps.append({idx: i + total_cols for i, idx in enumerate(basis)})
        total_cols += len(basis)
    rows = []
    for d, index_of in zip(degrees, index_maps):
        v = highest_weight_vector(m, n, d)
        for exps in monomials:
            image = apply_pbw_monomial(ctx.basis, exps, v)
            if not image.is_zero:
                rows.append(coordinates(image, index_of))
    return rref(SparseMatrix.from_rows(rows, cols=total_cols)).rank
