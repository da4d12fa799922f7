import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from umbral import levy
from umbral import umbra as U
from umbral.polyring import Poly

t = Poly.var("t")
ORDER = 8


def test_standard_gaussian_moments():
    p = levy.from_triplet(levy.LevySpec(0, 1), 6)
    assert p.alpha.moments == (1, 0, 1, 0, 3, 0, 15)


def test_zero_triplet_is_eps():
    assert levy.from_triplet(levy.LevySpec(), 6).alpha == U.special("eps", 6)


def test_pure_drift():
    p = levy.from_triplet(levy.LevySpec(c0=1), 6)
    assert p.at(t).moments == tuple(t**k for k in range(7))


def test_poisson_moments():
    lam = Fraction(3, 2)
    m = levy.poisson(lam, 4).at(t)
    assert m[1] == lam * t
    assert m[2] == lam * t + lam**2 * t**2


def test_gamma_rising_factorials():
    m = levy.gamma(1, 5).at(t)
    rising = Poly.const(1)
    for k in range(6):
        assert m[k] == rising
        rising = rising * (t + k)


def test_pascal_mean():
    p = Fraction(1, 3)
    assert levy.pascal(p, 4).alpha[1] == p / (1 - p)


def test_sum_with_zero_process():
    bm = levy.brownian(2, ORDER)
    assert levy.sum_process(bm, levy.zero_process(ORDER)).alpha == bm.alpha


def test_sum_cumulants_add():
    bm, po = levy.brownian(1, ORDER), levy.poisson(2, ORDER)
    both = levy.sum_process(bm, po)
    assert U.cumulant(both.alpha).moments[1:] == tuple(
        a + b for a, b in zip(U.cumulant(bm.alpha).moments[1:], U.cumulant(po.alpha).moments[1:]))


def test_sum_mean():
    po = levy.poisson(Fraction(5, 2), ORDER)
    assert levy.sum_process(po, po).at(t)[1] == 2 * t * po.alpha[1]


@pytest.mark.parametrize("name", levy.PROCESS_NAMES)
def test_named_processes_match_closed_form(name):
    params = {"brownian": {"s2": 2}, "poisson": {"lambda": "3/2"}, "gamma": {"lambda": 2},
              "pascal": {"p": "1/3"}, "bernoulli_walk": {"p": "2/5"}}.get(name, {})
    proc = levy.named_process(name, {k: Fraction(v) for k, v in params.items()}, ORDER)
    assert U.egf(proc.at(t)) == levy.closed_form_power(proc)


def test_triplet_cumulants_and_mgf():
    spec = levy.LevySpec(c0="1/2", s2=1, atoms=(("1", "2/3"), ("-2", "1/6")))
    proc = levy.from_triplet(spec, ORDER)
    kappa = U.cumulant(proc.alpha)
    m = lambda n: Fraction(2, 3) + Fraction(1, 6) * (-2) ** n  # noqa: E731
    assert kappa[1] == Fraction(1, 2)
    assert kappa[2] == 1 + m(2)
    assert [kappa[n] for n in range(3, ORDER + 1)] == [m(n) for n in range(3, ORDER + 1)]
    assert U.egf(proc.at(t)) == levy.closed_form_power(proc)


def test_measure_moment_list():
    spec = levy.LevySpec(s2=0, measure_moments=(1, 0, 2, 0, 4, 0, 8))
    kappa = U.cumulant(levy.from_triplet(spec, ORDER).alpha)
    assert kappa.moments[1:] == (0, 1, 0, 2, 0, 4, 0, 8)


def test_config_round_trip(tmp_path):
    data = {"c0": "1/2", "s2": "1", "measure": {"atoms": [["1", "2/3"], ["-2", "1/6"]]}, "order": 12}
    path = tmp_path / "levy.json"
    path.write_text(json.dumps(data))
    spec, order = levy.load_spec(path)
    assert order == 12
    assert levy.LevySpec.from_json(spec.to_json()) == spec


def test_bad_parameters():
    with pytest.raises(levy.BadParameter):
        levy.LevySpec(s2=-1)
    with pytest.raises(levy.BadParameter):
        levy.LevySpec(atoms=((1, -1),))
    with pytest.raises(levy.BadParameter):
        levy.poisson(0)
    with pytest.raises(levy.BadParameter):
        levy.named_process("cauchy")


def test_drift_from_mean():
    assert levy.drift_from_mean(0, [(2, Fraction(1, 2)), (Fraction(1, 2), 4)]) == 1


atoms = st.lists(
    st.tuples(st.fractions(-3, 3, max_denominator=3).filter(bool), st.fractions(0, 3, max_denominator=3)),
    max_size=3,
)


@settings(max_examples=20, deadline=None)
@given(st.fractions(-3, 3, max_denominator=4), st.fractions(0, 3, max_denominator=4), atoms)
def test_compound_poisson_decomposition(c0, s2, jumps):
    spec = levy.LevySpec(c0, s2, tuple(jumps))
    whole = levy.from_triplet(spec, 6).alpha
    parts = U.add(levy.from_triplet(levy.LevySpec(c0, s2), 6).alpha,
                  levy.from_triplet(levy.LevySpec(atoms=tuple(jumps)), 6).alpha)
    assert whole == parts


@settings(max_examples=15, deadline=None)
@given(st.fractions(-3, 3, max_denominator=4), atoms, st.fractions(-2, 2, max_denominator=5))
def test_power_at_rational_time(c0, jumps, tt):
    proc = levy.from_triplet(levy.LevySpec(c0, 1, tuple(jumps)), 6)
    assert U.egf(proc.at(tt)) == levy.closed_form_power(proc, tt)
