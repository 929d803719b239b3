import random
from fractions import Fraction

import pytest

from vermajet.errors import SizeCapError
from vermajet.linalg import span_dim
from vermajet.polynomials import Poly
from vermajet.discriminant import (classical_discriminant_oracle,
                                   eliminant_generators, graded_relations,
                                   irreducibility_witness,
                                   multiple_root_eliminant,
                                   parametrization_jacobian_rank,
                                   parametrized_form,
                                   sample_jacobian_ranks,
                                   samples_satisfy_generators)


def _a_poly(d, terms):
    return Poly(d + 1, terms)


def test_oracle_quadratic():
    oracle = classical_discriminant_oracle(2)
    assert oracle.poly == _a_poly(2, {(0, 2, 0): 1, (1, 0, 1): -4})
    assert oracle.degree == 2


def test_oracle_cubic():
    oracle = classical_discriminant_oracle(3)
    expected = _a_poly(3, {
        (1, 1, 1, 1): 18, (0, 3, 0, 1): -4, (0, 2, 2, 0): 1,
        (1, 0, 3, 0): -4, (2, 0, 0, 2): -27,
    })
    assert oracle.poly == expected


def test_oracle_detects_double_root():
    oracle = classical_discriminant_oracle(2)
    # (x0 + x1)^2 has coefficients (1, 2, 1).
    assert oracle.poly.evaluate((1, 2, 1)) == 0


def test_oracle_nonzero_on_distinct_roots():
    oracle = classical_discriminant_oracle(3)
    # x0*x1*(x0 - x1) = x0^2 x1 - x0 x1^2 has coefficients (0, 1, -1, 0).
    assert oracle.poly.evaluate((0, 1, -1, 0)) != 0


def test_oracle_degree_bounds():
    with pytest.raises(ValueError):
        classical_discriminant_oracle(1)
    with pytest.raises(SizeCapError):
        classical_discriminant_oracle(9)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_eliminant_matches_oracle(d):
    eliminant = multiple_root_eliminant(d, 1)
    oracle = classical_discriminant_oracle(d)
    assert eliminant.poly == oracle.poly  # both are sign-normalized


def test_eliminant_rejects_bad_parameters():
    with pytest.raises(ValueError):
        multiple_root_eliminant(3, 3)
    with pytest.raises(SizeCapError):
        multiple_root_eliminant(9, 1)


def test_perfect_cube_locus_generators():
    generators = multiple_root_eliminant(3, 2)
    assert len(generators) == 3
    assert all(g.degree == 2 for g in generators)
    # The span must equal that of the 2x2 minors of the catalecticant
    # [[a0, a1/3, a2/3], [a1/3, a2/3, a3]], cleared of denominators.
    minors = [
        _a_poly(3, {(1, 0, 1, 0): 3, (0, 2, 0, 0): -1}),   # 3 a0 a2 - a1^2
        _a_poly(3, {(1, 0, 0, 1): 9, (0, 1, 1, 0): -1}),   # 9 a0 a3 - a1 a2
        _a_poly(3, {(0, 1, 0, 1): 3, (0, 0, 2, 0): -1}),   # 3 a1 a3 - a2^2
    ]
    monomials = sorted({e for g in generators for e in g.poly.terms}
                       | {e for p in minors for e in p.terms})
    index = {e: i for i, e in enumerate(monomials)}

    def row(p):
        out = [Fraction(0)] * len(monomials)
        for e, c in p.terms.items():
            out[index[e]] = c
        return out

    computed = [row(g.poly) for g in generators]
    target = [row(p) for p in minors]
    assert span_dim(computed) == 3
    assert span_dim(computed + target) == 3


def test_triple_root_quartic_generators():
    # The locus of quartics with a triple root is cut out by the two
    # classical quartic invariants I (degree 2) and J (degree 3).
    generators = multiple_root_eliminant(4, 2)
    assert sorted(g.degree for g in generators) == [2, 3]
    inv_i = _a_poly(4, {(0, 0, 2, 0, 0): 1, (0, 1, 0, 1, 0): -3,
                        (1, 0, 0, 0, 1): 12})
    inv_j = _a_poly(4, {(1, 0, 1, 0, 1): 72, (0, 1, 1, 1, 0): 9,
                        (0, 2, 0, 0, 1): -27, (1, 0, 0, 2, 0): -27,
                        (0, 0, 3, 0, 0): -2})
    by_degree = {g.degree: g.poly for g in generators}
    assert by_degree[2] == inv_i
    # the degree-3 generator lies in (I, J) and is not a multiple of I
    a = [Poly(5, {tuple(1 if k == i else 0 for k in range(5)): 1})
         for i in range(5)]
    combos = [inv_j] + [inv_i * ak for ak in a]
    monomials = sorted({e for p in combos + [by_degree[3]] for e in p.terms})
    index = {e: i for i, e in enumerate(monomials)}

    def row(p):
        out = [Fraction(0)] * len(monomials)
        for e, c in p.terms.items():
            out[index[e]] = c
        return out

    base = [row(p) for p in combos]
    base_i_only = [row(inv_i * ak) for ak in a]
    assert span_dim(base + [row(by_degree[3])]) == span_dim(base)
    assert span_dim(base_i_only + [row(by_degree[3])]) > span_dim(base_i_only)


def test_graded_relations_recover_discriminant():
    for d in (2, 3):
        relations = graded_relations(d, 1, 2 * (d - 1))
        oracle = classical_discriminant_oracle(d)
        assert len(relations) == 1
        assert relations[0] == oracle.poly


def test_graded_relations_empty_below_ideal():
    assert graded_relations(3, 2, 1) == []


def test_parametrized_form_values():
    # (x0 - 2 x1)^2 * x0 = x0^3 - 4 x0^2 x1 + 4 x0 x1^2.
    form = parametrized_form(3, 1, 2, [1, 0])
    assert form.coeffs == (1, -4, 4, 0)


def test_every_sample_is_a_zero_of_every_generator():
    rng = random.Random(3)
    for d, l in [(2, 1), (3, 1), (4, 1), (3, 2)]:
        assert samples_satisfy_generators(d, l, 10, rng)


def test_jacobian_ranks_generic():
    assert parametrization_jacobian_rank(3, 1, (2, [1, 1])) == 3
    assert parametrization_jacobian_rank(4, 1, (1, [2, 1, 1])) == 4
    assert parametrization_jacobian_rank(3, 2, (5, [3])) == 2


def test_jacobian_rank_sampling():
    rng = random.Random(17)
    for d, l in [(3, 1), (4, 1), (3, 2), (4, 2)]:
        ranks = sample_jacobian_ranks(d, l, 5, rng)
        assert ranks == [d - l + 1] * 5


def test_jacobian_rejects_degenerate_cofactor():
    with pytest.raises(ValueError):
        parametrization_jacobian_rank(3, 1, (2, [0, 1]))


def test_jacobian_degenerate_at_shared_root():
    # b = 1 is a root of g = x0 - x1, so the derivative column collapses.
    assert parametrization_jacobian_rank(3, 1, (1, [1, -1])) == 2


def test_witness_certified_envelope():
    assert irreducibility_witness(2, 1).status == "certified"
    assert irreducibility_witness(3, 1).status == "certified"


def test_witness_policy_boundary():
    assert irreducibility_witness(5, 2).status == "heuristic"
    assert irreducibility_witness(3, 2).status == "heuristic"


def test_witness_details_record_oracle_match():
    witness = irreducibility_witness(3, 1)
    assert witness.details["oracle_match"] is True
    assert len(witness.details["lines"]) == 3


def test_eliminant_normalization():
    from math import gcd
    for d, l in [(2, 1), (3, 1), (4, 1), (3, 2)]:
        for g in eliminant_generators(d, l):
            content = 0
            for c in g.poly.terms.values():
                assert c.denominator == 1
                content = gcd(content, c.numerator)
            assert content == 1
            first = min(g.poly.terms)
            assert g.poly.terms[first] > 0
