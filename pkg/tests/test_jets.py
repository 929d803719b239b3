from fractions import Fraction
from math import comb, factorial

import pytest

from vermajet.filtration import weyl_dim_oracle
from vermajet.linalg import SparseMatrix, span_dim
from vermajet.plethysm import highest_weight_vector, pair
from vermajet.polynomials import Poly
from vermajet.jets import (chart_homogeneity_check, chart_variables,
                           duality_check, jet_monomials, jet_truncation,
                           kernel_sections, monomial_jet_projective,
                           monomial_sections, plucker_polynomial,
                           section_space, taylor_matrix)


def _t(m, n, i, j):
    variables = chart_variables(m, n)
    return Poly.variable(len(variables), variables.index((i, j)))


def test_plucker_minors_gr24():
    t31, t32 = _t(2, 2, 3, 1), _t(2, 2, 3, 2)
    t41, t42 = _t(2, 2, 4, 1), _t(2, 2, 4, 2)
    assert plucker_polynomial((1, 3), 2, 2).chart == t32
    assert plucker_polynomial((1, 2), 2, 2).chart == Poly.const(4, 1)
    assert plucker_polynomial((3, 4), 2, 2).chart == t31 * t42 - t32 * t41
    assert plucker_polynomial((2, 3), 2, 2).chart == -t31


def test_plucker_projective_chart():
    for k in range(2, 5):
        assert plucker_polynomial((k,), 1, 3).chart == _t(1, 3, k, 1)
    assert plucker_polynomial((1,), 1, 3).chart == Poly.const(3, 1)


def test_plucker_relation_vanishes_in_chart():
    p = {frozenset(s): plucker_polynomial(tuple(sorted(s)), 2, 2).chart
         for s in [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)]}
    relation = (p[frozenset((1, 2))] * p[frozenset((3, 4))]
                - p[frozenset((1, 3))] * p[frozenset((2, 4))]
                + p[frozenset((1, 4))] * p[frozenset((2, 3))])
    assert relation.is_zero


def test_degree_one_chart_polynomials_independent():
    sections = monomial_sections(2, 2, 1)
    vectors = [jet_truncation(s, 2, 2, 2) for s in sections]
    assert span_dim(vectors) == 6


def test_section_space_projective_line():
    basis = section_space(1, 1, 3)
    assert len(basis) == 4
    charts = {s.chart for s in basis}
    t = Poly.variable(1, 0)
    assert charts == {Poly.const(1, 1), t, t * t, t * t * t}


def test_section_space_dimensions():
    assert len(section_space(2, 2, 1)) == 6
    assert len(section_space(2, 2, 2)) == 20  # 21 monomials minus one relation


def test_section_space_matches_oracle():
    for m, n, d in [(1, 1, 3), (1, 2, 3), (1, 3, 2), (2, 2, 2)]:
        assert len(section_space(m, n, d)) == weyl_dim_oracle(m, n, d)


def test_taylor_ranks():
    assert taylor_matrix(1, 1, 3, 1)[1] == 2
    assert taylor_matrix(1, 2, 2, 2)[1] == 6
    assert taylor_matrix(2, 2, 2, 1)[1] == 5


def test_taylor_surjective_through_degree():
    for m, n, d in [(1, 1, 3), (1, 2, 2), (2, 2, 2)]:
        for l in range(1, d + 1):
            assert taylor_matrix(m, n, d, l)[1] == comb(m * n + l, m * n)


def test_monomial_jet_projective_rule():
    assert monomial_jet_projective((2, 1), 1) == (Fraction(0), Fraction(1))
    assert monomial_jet_projective((3, 0), 1) == (Fraction(1), Fraction(0))
    assert monomial_jet_projective((1, 2), 1) == (Fraction(0), Fraction(0))


def test_taylor_matches_projective_rule_entrywise():
    m = 1
    for n in (1, 2):
        for d in (2, 3):
            sections = monomial_sections(m, n, d)
            for l in range(1, d + 1):
                for s in sections:
                    (multiset,) = s.plucker
                    exps = [0] * (n + 1)
                    for (k,) in multiset:
                        exps[k - 1] += 1
                    assert jet_truncation(s, m, n, l) == monomial_jet_projective(exps, l)


def _coeff_vector(poly, columns):
    return tuple(poly.coefficient(e) for e in columns)


def test_kernel_sections_projective_line():
    sections, dim = kernel_sections(1, 1, 3, 1)
    assert dim == 2
    t = Poly.variable(1, 0)
    columns = jet_monomials(1, 1, 3)
    vectors = [jet_truncation(s, 1, 1, 3) for s in sections]
    expected = [_coeff_vector(t ** 2, columns), _coeff_vector(t ** 3, columns)]
    assert span_dim(vectors + expected) == 2


def test_kernel_dimension_rank_nullity():
    sections, dim = kernel_sections(1, 2, 3, 1)
    assert dim == 10 - 3
    _, dim_full = kernel_sections(1, 1, 4, 4)
    assert dim_full == 0


def test_kernel_sections_have_vanishing_jets():
    for m, n, d, l in [(1, 1, 3, 1), (2, 2, 2, 1), (1, 2, 3, 2)]:
        sections, _ = kernel_sections(m, n, d, l)
        for s in sections:
            assert s.chart.truncate(l).is_zero


def test_duality_reports():
    report = duality_check(1, 1, 3, 1)
    assert (report.filtration_dim, report.taylor_rank) == (2, 2)
    assert report.ok
    report = duality_check(2, 2, 2, 1)
    assert (report.filtration_dim, report.taylor_rank) == (5, 5)
    assert report.ok
    report = duality_check(1, 2, 3, 2)
    assert (report.filtration_dim, report.taylor_rank) == (6, 6)
    assert report.ok


def test_duality_rejects_large_level():
    with pytest.raises(ValueError):
        duality_check(1, 1, 3, 3)


def test_pairing_measures_value_at_origin():
    # <v, s> is a fixed positive multiple of the chart value of s at the
    # distinguished point, so sections vanishing there pair to zero.
    for m, n, d in [(1, 1, 3), (2, 2, 2)]:
        v = highest_weight_vector(m, n, d)
        for s in section_space(m, n, d):
            assert pair(v, s) == factorial(d) * s.value_at_origin()


def test_chart_homogeneity():
    assert chart_homogeneity_check(1, 1, 3, 1, [[1]])
    assert chart_homogeneity_check(2, 2, 2, 1, [[1, 2], [0, 1]])
    assert chart_homogeneity_check(2, 2, 2, 1, [[0, 0], [0, 0]])


def test_chart_homogeneity_mapping_form():
    assert chart_homogeneity_check(1, 2, 2, 1, {(2, 1): Fraction(1, 2), (3, 1): 1})


def test_taylor_matrix_equals_origin_truncations():
    matrix, _ = taylor_matrix(1, 1, 3, 2)
    basis = section_space(1, 1, 3)
    rows = [jet_truncation(s, 1, 1, 2) for s in basis]
    assert matrix == SparseMatrix.from_rows(rows, cols=3)


def test_jet_monomial_count_formula():
    for m, n, l in [(1, 1, 3), (2, 2, 2), (1, 3, 2), (2, 1, 4)]:
        assert len(jet_monomials(m, n, l)) == comb(m * n + l, m * n)


def test_section_provenance_matches_chart():
    # The Plücker coordinates of each basis section rebuild its chart
    # polynomial exactly.
    from vermajet.jets import section_monomial
    for m, n, d in [(1, 2, 2), (2, 2, 2)]:
        for s in section_space(m, n, d):
            rebuilt = Poly.zero(m * n)
            for multiset, coeff in s.plucker.items():
                rebuilt = rebuilt + coeff * section_monomial(multiset, m, n).chart
            assert rebuilt == s.chart
