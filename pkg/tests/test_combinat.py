import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from umbral import umbra as U
from umbral.combinat import (
    bell_complete,
    bell_partial,
    bell_partial_enum,
    elementary_direct,
    elementary_from_powersums,
    falling_factorial,
    power_sums,
    set_partitions,
    stirling1,
)
from umbral.polyring import Poly

x, t, s = Poly.var("x"), Poly.var("t"), Poly.var("s")
a = [Poly.var(f"a{i}") for i in range(1, 10)]
b = [Poly.var(f"b{i}") for i in range(1, 10)]


@pytest.mark.parametrize("j,value", [(3, 1), (2, -3), (1, 2), (0, 0)])
def test_stirling_row_three(j, value):
    assert stirling1(3, j) == value


def test_stirling_out_of_range():
    with pytest.raises(IndexError):
        stirling1(2, 3)


def test_falling_factorial_examples():
    assert falling_factorial(t, 2) == t**2 - t
    assert falling_factorial(Poly.var("w"), 0) == 1
    assert falling_factorial(t - s, 2) == (t - s) ** 2 - (t - s)


def test_partial_bell_examples():
    assert bell_partial(3, 2, a) == 3 * a[0] * a[1]
    for n in range(1, 7):
        assert bell_partial(n, 1, a) == a[n - 1]
        assert bell_partial(n, n, a) == a[0] ** n


def test_complete_bell_examples():
    assert bell_complete(0, []) == 1
    assert bell_complete(2, b) == b[0] ** 2 + b[1]
    assert bell_complete(3, b) == b[0] ** 3 + 3 * b[0] * b[1] + b[2]


def test_newton_examples():
    p = [Poly.var(f"p{i}") for i in range(1, 4)]
    assert elementary_from_powersums(1, p) == p[0]
    assert elementary_from_powersums(2, p) == (p[0] ** 2 - p[1]) / 2
    assert elementary_from_powersums(3, p) == (p[0] ** 3 - 3 * p[0] * p[1] + 2 * p[2]) / 6


def test_set_partition_counts_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(list(range(n)))) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


@pytest.mark.parametrize("k", range(11))
def test_stirling_expands_falling_factorial(k):
    assert sum((x**j * stirling1(k, j) for j in range(k + 1)), Poly.const(0)) == falling_factorial(x, k)


@pytest.mark.parametrize("i", range(1, 9))
def test_bell_recurrence_matches_enumeration(i):
    for j in range(1, i + 1):
        assert bell_partial(i, j, a) == bell_partial_enum(i, j, a)


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=8, max_size=8))
def test_moment_cumulant_identity(ms):
    alpha = U.Umbra((Fraction(1), *ms))
    kappa = U.cumulant(alpha)
    for k in range(alpha.order + 1):
        assert bell_complete(k, kappa.moments[1:]) == alpha[k]


@pytest.mark.parametrize("m", range(1, 9))
def test_newton_on_random_rationals(m):
    rng = random.Random(m)
    xs = [Poly.const(Fraction(rng.randint(-9, 9), rng.randint(1, 5))) for _ in range(m)]
    e = elementary_direct(xs, m)
    p = power_sums(xs, m)
    for n in range(m + 1):
        assert elementary_from_powersums(n, p) == e[n]


def test_index_errors():
    with pytest.raises(IndexError):
        bell_complete(3, b[:2])
