from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rrcalc.catalog import CATALOG, run_catalog
from rrcalc.chern import chern_character, line_bundle
from rrcalc.gysin import (
    additive_theory,
    k_class,
    k_flip_theory,
    k_theory,
    lci_map,
    line_c1,
    product_space,
    projective_space,
)
from rrcalc.oracles import euler_char_oracle, hypersurface_chi_oracle
from rrcalc.rr import (
    TheoryMorphism,
    additive_flip_morphism,
    change_orientation_check,
    chern_character_morphism,
    extract_G,
    k_flip_morphism,
    module_rr_reduced,
    morphism_apply,
    morphism_from_G,
    transport,
    verify_rr,
    verify_rr_oriented,
)
from rrcalc.series import PowerSeries, exp_series, todd_series

CH = chern_character_morphism(12)
K = k_theory(12)
ADD = additive_theory(12)


def test_extract_G_examples():
    G = extract_G(CH)
    # (1 - e^-t)/t = sum (-1)^k t^k / (k+1)!
    assert G.coefficients()[:4] == [1, Fraction(-1, 2), Fraction(1, 6), Fraction(-1, 24)]
    assert extract_G(additive_flip_morphism(12)) == PowerSeries([1], 11)
    assert extract_G(k_flip_morphism(12)) == PowerSeries([1] * 12, 11)


def test_extract_G_inverse_is_todd():
    assert extract_G(CH).recip() == todd_series(11)


def test_morphism_requires_unit_linear_term():
    with pytest.raises(ValueError):
        TheoryMorphism(K, ADD, PowerSeries([0, 2], 4))
    with pytest.raises(ValueError):
        TheoryMorphism(K, ADD, PowerSeries([1, 1], 4))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=11, max_size=11))
def test_G_round_trip(tail):
    G = PowerSeries([1] + tail, 11)
    assert extract_G(morphism_from_G(K, ADD, G)) == G


def test_ch_on_generators():
    R = projective_space(1).ring(K)
    y = R.gen(0)
    out = morphism_apply(CH, y)
    assert out == out.ring.gen(0)
    assert morphism_apply(CH, R.one()) == out.ring.one()
    R2 = projective_space(2).ring(K)
    out2 = morphism_apply(CH, R2.gen(0) ** 2)
    assert out2 == out2.ring.gen(0) ** 2


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_ch_is_multiplicative(ac, bc):
    R = projective_space(2).ring(K)
    a = R.element(dict(zip(R.basis(), ac)))
    b = R.element(dict(zip(R.basis(), bc)))
    assert morphism_apply(CH, a * b) == morphism_apply(CH, a) * morphism_apply(CH, b)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ch_of_line_class_two_paths(n):
    R = projective_space(n).ring(K)
    A = projective_space(n).ring(ADD)
    for d in (-2, 1, 3):
        via_morphism = morphism_apply(CH, k_class(R, (d,)))
        via_roots = chern_character(line_bundle(A, line_c1(A, (d,))))
        assert via_morphism == via_roots


@pytest.mark.parametrize("recipe", [("proj", 2), ("hyper", 3, 2), ("conic",), ("linear", 1, 3)])
def test_transport_matches_target_tangent(recipe):
    f = lci_map(recipe, K)
    fbar = lci_map(recipe, ADD)
    moved = transport(CH, f.virtual_tangent, f.source_space)
    assert moved.chern_classes() == fbar.virtual_tangent.chern_classes()


def test_verify_rr_examples():
    f1 = lci_map(("proj", 1), K)
    r = verify_rr(CH, f1, f1.source_ring.one())
    assert r.equal and r.lhs.to_rational() == 1
    f2 = lci_map(("proj", 2), K)
    r = verify_rr(CH, f2, k_class(f2.source_ring, (1,)))
    assert r.equal and r.lhs.to_rational() == 3 == r.rhs.to_rational()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", range(-5, 6))
def test_grr_projective_spaces(n, d):
    f = lci_map(("proj", n), K)
    r = verify_rr(CH, f, k_class(f.source_ring, (d,)), oracle=euler_char_oracle(n, d))
    assert r.passed


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [-1, 0, 1, 2])
def test_grr_hypersurfaces(n, d, k):
    f = lci_map(("hyper", n, d), K)
    r = verify_rr(CH, f, k_class(f.source_ring, (k,)), oracle=hypersurface_chi_oracle(n, d, k))
    assert r.passed


def test_classical_hypersurface_values():
    for (n, d), chi in {(2, 3): 0, (2, 2): 1, (3, 4): 2}.items():
        f = lci_map(("hyper", n, d), K)
        assert verify_rr(CH, f, f.source_ring.one()).lhs.to_rational() == chi


def test_identity_morphism_is_trivially_rr():
    ident = TheoryMorphism(K, K, PowerSeries([0, 1], 12))
    f = lci_map(("proj", 2), K)
    r = verify_rr_oriented(ident, f, f.source_ring.gen(0))
    assert r.equal
    assert verify_rr(ident, f, f.source_ring.gen(0)).equal


def test_oriented_rr_rejects_nontrivial_G():
    f = lci_map(("proj", 1), K)
    with pytest.raises(ValueError):
        verify_rr_oriented(CH, f, f.source_ring.one())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rr_facil_additive_flip(n):
    phi = additive_flip_morphism(12)
    f = lci_map(("proj", n), ADD)
    for k in range(n + 1):
        assert verify_rr_oriented(phi, f, f.source_ring.gen(0) ** k).equal


@pytest.mark.parametrize("n", [1, 2])
def test_change_of_orientation(n):
    f = lci_map(("proj", n), K)
    for mono in f.source_ring.basis():
        r = change_orientation_check(f, f.source_ring.element({mono: 1}))
        assert r.equal


def test_change_of_orientation_p1_unit_value():
    f = lci_map(("proj", 1), K)
    r = change_orientation_check(f, f.source_ring.one())
    assert r.lhs.to_rational() == r.rhs.to_rational() == -1


def test_flipped_pushforward_is_twisted_euler_characteristic():
    F = k_flip_theory(12)
    for n in (1, 2, 3):
        f = lci_map(("proj", n), F)
        for d in range(-3, 4):
            assert f.push(k_class(f.source_ring, (d,))).to_rational() == euler_char_oracle(n, d - n - 1)


def test_module_rr_examples():
    R = product_space(1, 1).ring(K)
    x1, x2 = R.gen(0), R.gen(1)
    r = module_rr_reduced(CH, R.one())
    assert r.equal and r.lhs.is_zero()
    r = module_rr_reduced(CH, x1)
    assert r.equal and r.lhs == r.lhs.ring.gen(0)
    r = module_rr_reduced(CH, x1 * x2)
    assert r.equal and r.lhs == -r.lhs.ring.gen(0)


def test_run_catalog_selection():
    assert run_catalog([]) == []
    one = run_catalog(["rr-p2-O1"])
    assert len(one) == 1 and one[0].case_name == "rr-p2-O1"
    with pytest.raises(KeyError):
        run_catalog(["nope"])


def test_default_catalog_all_pass():
    reports = run_catalog()
    assert [r.case_name for r in reports] == sorted(CATALOG)
    failed = [r.case_name for r in reports if not r.passed]
    assert failed == []


def test_catalog_rejects_low_precision():
    with pytest.raises(ValueError):
        CATALOG["rr-p4-O1"].run(6)


def test_exp_series_sanity():
    assert exp_series(3).coefficients() == [1, 1, Fraction(1, 2), Fraction(1, 6)]
