import math

import numpy as np
import pytest

from umbral.numcheck import SimConfig, martingale_check, simulate


def test_poisson_mean():
    ens = simulate(SimConfig("poisson", {"lambda": "2"}, t=1.0, paths=100_000, seed=42))
    assert abs(ens.x_t.mean() - 2.0) < 5 * math.sqrt(2) / math.sqrt(100_000)


def test_brownian_mean():
    ens = simulate(SimConfig("brownian", {"s": "1"}, paths=100_000, seed=1))
    assert abs(ens.x_t.mean()) < 5 / math.sqrt(100_000)


def test_gamma_mean():
    ens = simulate(SimConfig("gamma", {"lambda": "1"}, t=2.0, paths=100_000, seed=3))
    assert abs(ens.x_t.mean() - 2.0) < 5 * math.sqrt(2) / math.sqrt(100_000)


def test_seed_is_reproducible():
    a = simulate(SimConfig("poisson", {"lambda": "1"}, paths=1000, seed=9))
    b = simulate(SimConfig("poisson", {"lambda": "1"}, paths=1000, seed=9))
    assert np.array_equal(a.x_t, b.x_t)


@pytest.mark.parametrize("name,params", [
    ("brownian", {"s": "1"}),
    ("poisson", {"lambda": "2"}),
    ("gamma", {"lambda": "1"}),
    ("pascal", {"p": "1/3"}),
    ("uniform_walk", {}),
    ("bernoulli_half_walk", {}),
    ("bernoulli_walk", {"p": "1/4"}),
])
def test_martingale(name, params):
    t = 3.0 if "walk" in name else 1.0
    report = martingale_check(SimConfig(name, params, t=t, paths=50_000, seed=42), K=4)
    assert report.passed, report.to_json()
    assert [r.k for r in report.rows] == [1, 2, 3, 4]


def test_walks_need_integer_time():
    with pytest.raises(ValueError):
        SimConfig("uniform_walk", t=1.5)


def test_wrong_polynomial_is_detected():
    # x^2 alone is not a martingale for Brownian motion: its mean is t
    ens = simulate(SimConfig("brownian", {"s": "1"}, paths=100_000, seed=5))
    sample = ens.x_t**2
    z = sample.mean() / (sample.std(ddof=1) / math.sqrt(sample.size))
    assert z > 5
