from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcalc.oracles import (
    chow_pushforward_oracle,
    euler_char_oracle,
    hypersurface_chi_oracle,
    todd_oracle,
)


def test_euler_char_examples():
    assert euler_char_oracle(1, 1) == 2
    assert euler_char_oracle(2, 0) == 1
    assert euler_char_oracle(2, -3) == 1
    assert euler_char_oracle(0, -7) == 1


@given(st.integers(0, 6), st.integers(0, 10))
def test_euler_char_is_binomial_for_effective_twists(n, d):
    assert euler_char_oracle(n, d) == comb(n + d, n)


@given(st.integers(1, 6), st.integers(-10, 10))
def test_serre_duality_symmetry(n, d):
    # chi(O(d)) = (-1)^n chi(O(-d-n-1))
    assert euler_char_oracle(n, d) == (-1) ** n * euler_char_oracle(n, -d - n - 1)


def test_hypersurface_examples():
    assert hypersurface_chi_oracle(2, 3) == 0
    assert hypersurface_chi_oracle(2, 2) == 1
    assert hypersurface_chi_oracle(3, 4) == 2
    with pytest.raises(ValueError):
        hypersurface_chi_oracle(0, 1)


def test_chow_oracle():
    assert chow_pushforward_oracle(2, 2) == 1
    assert chow_pushforward_oracle(2, 1) == 0
    with pytest.raises(ValueError):
        chow_pushforward_oracle(2, 3)


def test_todd_oracle_low_degrees():
    assert todd_oracle(4) == [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]
