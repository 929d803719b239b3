import random
from fractions import Fraction
from math import factorial

import pytest

from vermajet.errors import SizeCapError
from vermajet.lie import SubalgebraTag, Weight, bracket, build_context, highest_weight, rho_character
from vermajet.plethysm import (PlethysmVector, act, highest_weight_vector,
                               module_dim, pair, sym_basis, weight_of)


def test_module_dim_sl2():
    for d in range(1, 6):
        assert module_dim(1, 1, d) == d + 1


def test_module_dim_wedge():
    assert module_dim(2, 2, 1) == 6
    assert module_dim(2, 2, 2) == 21


def test_module_dim_cap():
    with pytest.raises(SizeCapError):
        module_dim(3, 3, 6)


def test_lowering_on_cubic():
    ctx = build_context(1, 1)
    v = highest_weight_vector(1, 1, 3)
    expected = PlethysmVector({((1,), (1,), (2,)): 3})
    assert act(ctx.E(2, 1), v) == expected


def test_raising_kills_highest_weight():
    ctx = build_context(2, 2)
    v = highest_weight_vector(2, 2, 2)
    assert act(ctx.E(1, 2), v).is_zero


def test_wedge_substitution_with_sign():
    ctx = build_context(2, 2)
    v = highest_weight_vector(2, 2, 2)
    expected = PlethysmVector({((1, 2), (1, 3)): 2})
    assert act(ctx.E(3, 2), v) == expected


def test_highest_weight_vector_shape():
    assert highest_weight_vector(1, 1, 3) == PlethysmVector({((1,),) * 3: 1})
    assert highest_weight_vector(2, 2, 2) == PlethysmVector({((1, 2), (1, 2)): 1})


def test_weight_of_v_is_highest():
    for m, n, d in [(1, 1, 3), (2, 2, 2), (1, 2, 4)]:
        ctx = build_context(m, n)
        v = highest_weight_vector(m, n, d)
        (idx,) = v.coeffs
        assert weight_of(idx, ctx.size) == highest_weight(ctx, d)


def test_weight_of_examples():
    assert weight_of(((1,), (1,), (1,)), 2) == Weight((3, 0))
    assert weight_of(((1, 2), (1, 3)), 4) == Weight((2, 1, 1, 0))


def test_weight_coordinate_sum():
    for idx in sym_basis(2, 2, 2):
        assert sum(weight_of(idx, 4).coords) == 2 * 2


def _random_vector(rng, basis, size=4):
    picks = rng.sample(range(len(basis)), min(size, len(basis)))
    return PlethysmVector({basis[i]: rng.randint(-5, 5) for i in picks})


def test_action_is_a_lie_action_sl2():
    rng = random.Random(11)
    ctx = build_context(1, 1)
    basis = sym_basis(1, 1, 3)
    for _ in range(20):
        w = _random_vector(rng, basis)
        for x in ctx.basis:
            for y in ctx.basis:
                lhs = act(bracket(x, y), w)
                rhs = act(x, act(y, w)) - act(y, act(x, w))
                assert lhs == rhs


def test_action_is_a_lie_action_sl4_sampled():
    rng = random.Random(13)
    ctx = build_context(2, 2)
    basis = sym_basis(2, 2, 2)
    for _ in range(25):
        w = _random_vector(rng, basis)
        x = rng.choice(ctx.basis)
        y = rng.choice(ctx.basis)
        assert act(bracket(x, y), w) == act(x, act(y, w)) - act(y, act(x, w))


def test_cartan_and_raising_on_highest_weight():
    for m, n, d in [(1, 1, 3), (2, 2, 2), (1, 2, 3)]:
        ctx = build_context(m, n)
        v = highest_weight_vector(m, n, d)
        lam = highest_weight(ctx, d)
        for x in ctx.subalgebra_basis(SubalgebraTag.G_PLUS):
            assert act(x, v).is_zero
        for k in range(1, ctx.size):
            h = ctx.H(k)
            value = lam.coords[k - 1] - lam.coords[k]
            assert act(h, v) == value * v


def test_parabolic_stabilizes_the_line():
    ctx = build_context(2, 2)
    d = 2
    v = highest_weight_vector(2, 2, d)
    for y in ctx.subalgebra_basis(SubalgebraTag.P):
        assert act(y, v) == rho_character(ctx, d, y) * v


def test_action_shifts_weights_by_roots():
    ctx = build_context(2, 2)
    basis = sym_basis(2, 2, 2)
    for idx in basis[:8]:
        w = weight_of(idx, ctx.size)
        for i in range(1, ctx.size + 1):
            for j in range(1, ctx.size + 1):
                if i == j:
                    continue
                image = act(ctx.E(i, j), PlethysmVector({idx: 1}))
                shift = [0] * ctx.size
                shift[i - 1] += 1
                shift[j - 1] -= 1
                for out_idx in image.coeffs:
                    assert weight_of(out_idx, ctx.size) == w + Weight(shift)


def test_pair_dual_monomials():
    d = 3
    v = highest_weight_vector(1, 1, d)
    section = {((1,),) * d: Fraction(1)}
    assert pair(v, section) == factorial(d)


def test_pair_disjoint_supports():
    d = 3
    v = highest_weight_vector(1, 1, d)
    section = {((2,),) * d: Fraction(1)}
    assert pair(v, section) == 0


def test_pair_degree_mismatch():
    v = highest_weight_vector(1, 1, 3)
    with pytest.raises(ValueError):
        pair(v, {((1,), (1,)): Fraction(1)})
