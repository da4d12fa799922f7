from fractions import Fraction

import pytest

from umbral import families
from umbral.polyring import Poly

x, t, n = Poly.var("x"), Poly.var("t"), Poly.var("n")


@pytest.mark.parametrize("name", families.FAMILY_NAMES)
def test_umbral_column_matches_classical(name):
    table = families.family_table(name, K=8)
    assert len(table.rows) == 9
    assert all(c.passed for c in table.checks()), [c.id for c in table.checks() if not c.passed]


@pytest.mark.parametrize("name,params", [
    ("hermite", {"s2": "5/2"}),
    ("poisson_charlier", {"lambda": "2/3"}),
    ("actuarial", {"lambda": 3}),
    ("meixner1", {"p": "3/4"}),
    ("krawtchouk", {"p": "1/2"}),
    ("pseudo_narumi", {"a": 3}),
])
def test_other_parameters(name, params):
    table = families.family_table(name, params, K=6)
    assert all(c.passed for c in table.checks())


def test_hermite_degree_two():
    row = families.family_table("hermite", K=2).rows[2]
    assert row.classical == row.umbral == x**2 - t


def test_charlier_degree_one():
    row = families.family_table("poisson_charlier", {"lambda": 2}, K=1).rows[1]
    assert row.classical == row.umbral == x - 2 * t
    assert row.transform_row == [0, 1]


def test_bernoulli_polynomial_degree_two():
    # E[(x + n.iota)^2] = x^2 - n x + n/6 + n(n - 1)/4
    row = families.family_table("bernoulli_poly", K=2).rows[2]
    assert row.umbral == x**2 - n * x + n**2 / 4 - n / 12
    assert row.classical == row.umbral


def test_walk_families_use_n():
    for name in ("bernoulli_poly", "euler_poly", "krawtchouk", "pseudo_narumi"):
        table = families.family_table(name, K=3)
        assert table.time == "n"
        assert "t" not in table.rows[3].umbral.variables()


def test_laguerre_factor():
    rows = families.family_table("laguerre", K=4).rows
    assert [r.factor for r in rows] == [1, -1, 2, -6, 24]


def test_json_schema():
    data = families.family_table("meixner1", K=3).to_json()
    assert data["family"] == "meixner1"
    assert data["params"] == {"p": "1/3"}
    assert [r["k"] for r in data["rows"]] == [0, 1, 2, 3]
    assert set(data["rows"][1]) >= {"k", "classical", "umbral", "transform_row"}


def test_unknown_family():
    with pytest.raises(families.UnknownFamily):
        families.family_table("legendre")


def test_similarities():
    checks = families.similarity_checks(10)
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]


@pytest.mark.parametrize("p", [Fraction(1, 3), Fraction(1, 2), Fraction(3, 4)])
def test_literal_krawtchouk_similarity_does_not_hold(p):
    # the statement with -1 in front is the inverse of mu, not mu
    check = families.krawtchouk_similarity_literal(8, p)
    assert not check.passed
    assert check.witness["lhs"] != check.witness["rhs"]
