from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from umbral import kailath
from umbral.polyring import Poly

sigma = kailath.sigma_symbols(10)
s1, s2, s3 = sigma[:3]


def test_first_polynomials():
    assert kailath.ks_poly(1, sigma) == s1
    assert kailath.ks_poly(2, sigma) == (s1**2 - s2) / 2
    assert kailath.ks_poly(3, sigma) == (s1**3 - 3 * s1 * s2 + 2 * s3) / 6


@pytest.mark.parametrize("n", range(11))
def test_bell_form(n):
    assert kailath.ks_via_bell(n, sigma) == kailath.ks_poly(n, sigma)


def test_inversion_examples():
    assert kailath.ks_invert(1, [s1]) == s1
    assert kailath.ks_invert(2, [s1, s1**2 - s2]) == s2


@pytest.mark.parametrize("n", range(1, 11))
def test_inversion_round_trip(n):
    P = kailath.ks_polys(n, sigma)
    c = [P[i] * factorial(i) for i in range(1, n + 1)]
    assert kailath.ks_invert(n, c) == sigma[n - 1]


def test_newton_example():
    x1, x2, x3 = (Poly.var(f"x{i}") for i in (1, 2, 3))
    p = [x1 + x2 + x3, x1**2 + x2**2 + x3**2]
    assert kailath.ks_poly(2, p) == x1 * x2 + x1 * x3 + x2 * x3


@pytest.mark.parametrize("m", range(1, 9))
def test_newton_oracle(m):
    for n in range(m + 1):
        assert kailath.newton_oracle_check(n, m).passed


def test_umbral_recursion():
    assert kailath.ks_recursion_check(8).passed


def test_jump_examples():
    r = kailath.jump_path_eval([1], 1)
    assert (r.variation, r.integral) == (1, 1)
    r = kailath.jump_path_eval([1, 2], 2)
    assert (r.variation, r.integral, r.ks_value) == (5, 2, 2)
    r = kailath.jump_path_eval([Fraction(1, 2), Fraction(-1, 3), 2], 3)
    assert r.integral == r.ks_value == Fraction(-1, 3)
    assert r.to_json()["check"] is True


def test_short_variation_list():
    with pytest.raises(IndexError):
        kailath.ks_poly(3, sigma[:2])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(-4, 4, max_denominator=4), min_size=1, max_size=8), st.data())
def test_random_jump_paths(jumps, data):
    n = data.draw(st.integers(1, len(jumps)))
    assert kailath.jump_path_eval(jumps, n).check
