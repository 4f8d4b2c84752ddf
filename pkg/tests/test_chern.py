from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rrcalc.chern import (
    Bundle,
    VirtualBundle,
    apply_rootwise,
    bundle_dual,
    bundle_tensor_line,
    chern_character,
    direct_sum,
    line_bundle,
    mult_extension,
    newton_e_to_p,
    newton_p_to_e,
    todd_class,
    total_chern,
    trivial_bundle,
    whitney_sum,
)
from rrcalc.gysin import (
    additive_theory,
    euler_tangent,
    k_theory,
    line_c1,
    product_space,
    projection_pushforward,
    projective_space,
    quotient_bundle,
)
from rrcalc.series import PowerSeries, todd_series

ADD = additive_theory(12)
K = k_theory(12)


def ring(n, theory=ADD):
    return projective_space(n).ring(theory)


def integrate(a):
    """Degree over P^n in the additive theory."""
    return projection_pushforward(a.ring.fiber_dims[-1], a.ring.theory).apply(a).to_rational()


def test_newton_small():
    assert newton_e_to_p([5, 6], 2) == [5, 13]
    assert newton_p_to_e([5, 13], 2) == [5, 6]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=5))
def test_newton_round_trip(e):
    k = len(e)
    assert newton_p_to_e(newton_e_to_p(e, k), k) == e


def test_whitney_of_lines():
    R = product_space(2, 2).ring(ADD)
    a, b = R.gen(0), R.gen(1)
    V = whitney_sum(line_bundle(R, a), line_bundle(R, b))
    assert V.chern == (a + b, a * b)
    assert total_chern(V) == (R.one() + a) * (R.one() + b)


@pytest.mark.parametrize("theory", [ADD, K], ids=lambda t: t.name)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_quotient_bundle_whitney(theory, n):
    R = ring(n, theory)
    Q = quotient_bundle(R)
    O_minus = line_bundle(R, R.gen(0))
    assert total_chern(whitney_sum(O_minus, Q)) == R.one()


def test_quotient_bundle_examples():
    R = ring(2)
    x = R.gen(0)
    assert quotient_bundle(R).chern == (-x, x ** 2)


def test_dual_line_additive_and_k():
    R = ring(3)
    x = R.gen(0)
    assert bundle_dual(ADD.fgl, line_bundle(R, x)).chern == (-x,)
    RK = ring(3, K)
    y = RK.gen(0)
    # mu(y) = -y/(1 - y)
    assert bundle_dual(K.fgl, line_bundle(RK, y)).chern == (-y - y ** 2 - y ** 3,)


@pytest.mark.parametrize("theory", [ADD, K], ids=lambda t: t.name)
def test_double_dual_is_identity(theory):
    R = product_space(2, 2).ring(theory)
    V = direct_sum([line_bundle(R, R.gen(0)), line_bundle(R, R.gen(1)), line_bundle(R, R.gen(0) + R.gen(1))])
    assert bundle_dual(theory.fgl, bundle_dual(theory.fgl, V)) == V


def test_tensor_line_additive_shift():
    R = product_space(2, 2).ring(ADD)
    a, b = R.gen(0), R.gen(1)
    V = direct_sum([line_bundle(R, a), line_bundle(R, R.zero())])
    W = bundle_tensor_line(ADD.fgl, V, b)
    assert W.chern == (a + 2 * b, (a + b) * b)


def test_tensor_line_rejects_weight_two():
    R = ring(2)
    V = line_bundle(R, R.gen(0))
    with pytest.raises(ValueError):
        bundle_tensor_line(ADD.fgl, V, R.gen(0) ** 2)


def test_chern_character_of_line():
    R = ring(4)
    x = R.gen(0)
    for d in (-2, 1, 3):
        # ch(O(d)) = e^(d h), h = -x
        expected = sum((x ** k * Fraction((-d) ** k, factorial(k)) for k in range(5)), R.zero())
        assert chern_character(line_bundle(R, line_c1(R, (d,)))) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_todd_of_tangent_integrates_to_one(n):
    R = ring(n)
    assert integrate(todd_class(euler_tangent(R))) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_top_chern_of_tangent_is_euler_characteristic(n):
    R = ring(n)
    T = euler_tangent(R)
    assert integrate(T.c(n)) == n + 1


def test_mult_extension_of_trivial_and_virtual():
    R = ring(3)
    F = PowerSeries([2, 1, 5], 12)
    assert mult_extension(F, trivial_bundle(R, 2)).to_rational() == 4
    L = line_bundle(R, R.gen(0))
    V = VirtualBundle(L, L)
    assert mult_extension(F, V) == R.one()
    with pytest.raises(ValueError):
        mult_extension(PowerSeries([0, 1], 12), L)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=3))
def test_mult_extension_is_multiplicative(twists):
    R = ring(3)
    lines = [line_bundle(R, line_c1(R, (d,))) for d in twists]
    F = todd_series(12)
    prod = R.one()
    for L in lines:
        prod = prod * mult_extension(F, L)
    assert mult_extension(F, direct_sum(lines)) == prod


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_apply_rootwise_on_lines(twists):
    R = ring(3)
    g = [0, 1, 2, -1]
    lines = [line_bundle(R, line_c1(R, (d,))) for d in twists]
    expected = direct_sum([line_bundle(R, R.eval_series(PowerSeries(g, 12), L.c(1))) for L in lines])
    assert apply_rootwise(direct_sum(lines), g) == expected


def test_virtual_chern_classes():
    R = ring(2)
    x = R.gen(0)
    V = VirtualBundle(trivial_bundle(R, 1), line_bundle(R, x))
    # c = 1 / (1 + x)
    assert V.chern_classes() == [R.one(), -x, x ** 2]


def test_bundle_validates_rank():
    R = ring(1)
    with pytest.raises(ValueError):
        Bundle(2, (R.zero(),), R)
