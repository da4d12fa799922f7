"""Classical polynomial families as time-space harmonic polynomials.

For each family the *classical* column is read straight off its generating
function with the series oracle, and the *umbral* column is assembled from
the ``Q_j`` of the matching process.  A row passes when
``umbral == factor * classical``.

=================  ===========================  =====================================
family             process                      umbral column
=================  ===========================  =====================================
hermite            Brownian(s2)                 Q_k
poisson_charlier   Poisson(lambda)              sum_j s(k, j) Q_j
laguerre           Gamma(1)                     Q_k = (-1)^k k! L_k^(t-k)(x)
actuarial          Gamma(lambda)                sum_j B_kj(m) Q_j
meixner1           Pascal(p)                    sum_j B_kj(m) Q_j = (-1)^k (t)_k M_k
bernoulli_poly     uniform walk, time n         Q_k
euler_poly         Bernoulli(1/2) walk, time n  Q_k
krawtchouk         Bernoulli(p) walk, time n    sum_j B_kj(m) Q_j = (n)_k K_k
pseudo_narumi      uniform walk, time a n       sum_j B_kj(m) Q_j = k! N_k
=================  ===========================  =====================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import levy
from . import umbra as U
from .combinat import bell_table, stirling1_row
from .polyring import ONE, ZERO, Poly, Series, rat, series_exp, series_log, series_pow
from .report import Check
from .tsh import tsh_polys

FAMILY_NAMES = (
    "hermite",
    "poisson_charlier",
    "laguerre",
    "actuarial",
    "meixner1",
    "bernoulli_poly",
    "euler_poly",
    "krawtchouk",
    "pseudo_narumi",
)

DEFAULT_PARAMS = {
    "hermite": {"s2": Fraction(1)},
    "poisson_charlier": {"lambda": Fraction(1)},
    "laguerre": {},
    "actuarial": {"lambda": Fraction(1)},
    "meixner1": {"p": Fraction(1, 3)},
    "bernoulli_poly": {},
    "euler_poly": {},
    "krawtchouk": {"p": Fraction(1, 3)},
    "pseudo_narumi": {"a": 1},
}

class UnknownFamily(KeyError):
    pass


@dataclass
class FamilyRow:
    k: int
    classical: Poly
    umbral: Poly
    transform_row: list | None = None
    factor: Poly = ONE

    @property
    def ok(self) -> bool:
        return self.umbral == self.factor * self.classical

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "classical": str(self.classical),
            "umbral": str(self.umbral),
            "factor": str(self.factor),
            "transform_row": None if self.transform_row is None else [str(c) for c in self.transform_row],
        }


@dataclass
class FamilyTable:
    family: str
    params: dict
    rows: list = field(default_factory=list)
    time: str = "t"

    def checks(self) -> list:
        out = []
        for r in self.rows:
            witness = {} if r.ok else {
                "classical": r.classical, "factor": r.factor, "umbral": r.umbral}
            out.append(Check(f"family[{self.family}] k={r.k}", r.ok, witness))
        return out

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": {k: str(v) for k, v in self.params.items()},
            "time": self.time,
            "rows": [r.to_json() for r in self.rows],
        }


def _egf_column(f: Series) -> list:
    return [c * factorial(k) for k, c in enumerate(f.coeffs)]


def _one_plus_z(K: int) -> Series:
    return Series.from_coeffs([1, 1], K)


def _bell_rows(m: U.Umbra, K: int) -> list:
    B = bell_table(m.moments[1:], K)
    return [[B[k][j] for j in range(k + 1)] for k in range(K + 1)]


def _combine(rows, Q) -> list:
    out = []
    for row in rows:
        acc = ZERO
        for j, c in enumerate(row):
            if c:
                acc = acc + Q[j] * c
        out.append(acc)
    return out


def actuarial_inner(K: int) -> U.Umbra:
    """``(chi . (-chi))^<-1>``: reversion of ``1 + log(1 - z)``."""
    return U.comp_inverse(U.cumulant(U.scale(-1, U.special("chi", K))))


def meixner_inner(p, K: int) -> U.Umbra:
    """``chi . (-1 . chi + chi / p)``."""
    chi = U.special("chi", K)
    return U.cumulant(U.add(U.inverse(chi), U.scale(1 / rat(p), chi)))


def krawtchouk_inner(p, K: int) -> U.Umbra:
    """``chi . (-1 . chi - chi / d)`` with ``d = p / (1 - p)``."""
    p = rat(p)
    d = p / (1 - p)
    chi = U.special("chi", K)
    return U.cumulant(U.add(U.inverse(chi), U.scale(-1 / d, chi)))


def family_table(name: str, params: dict | None = None, K: int = 8) -> FamilyTable:
    if name not in FAMILY_NAMES:
        raise UnknownFamily(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    prm = dict(DEFAULT_PARAMS[name])
    prm.update({k: rat(v) for k, v in (params or {}).items()})
    x, t, n = Poly.var("x"), Poly.var("t"), Poly.var("n")
    one = Series.constant(1, K)
    rows: list = []
    time = "t"

    if name == "hermite":
        s2 = prm["s2"]
        classical = _egf_column(series_exp(Series.from_coeffs([0, x, -s2 * t / 2], K)))
        Q = tsh_polys(levy.brownian(s2, K), K)
        rows = [FamilyRow(k, classical[k], Q[k]) for k in range(K + 1)]

    elif name == "poisson_charlier":
        lam = prm["lambda"]
        if lam <= 0:
            raise levy.BadParameter("lambda must be positive")
        gf = Series.exp_z(K, -lam * t) * series_pow(_one_plus_z(K), x)
        classical = _egf_column(gf)
        Q = tsh_polys(levy.poisson(lam, K), K)
        for k in range(K + 1):
            srow = list(stirling1_row(k))
            rows.append(FamilyRow(k, classical[k], _combine([srow], Q)[0], srow))

    elif name == "laguerre":
        gf = series_pow(Series.from_coeffs([1, -1], K), t) * Series.exp_z(K, x)
        classical = [c * (-1) ** k for k, c in enumerate(gf.coeffs)]
        Q = tsh_polys(levy.gamma(1, K), K)
        rows = [FamilyRow(k, classical[k], Q[k], None, Poly.const((-1) ** k * factorial(k)))
                for k in range(K + 1)]

    elif name == "actuarial":
        lam = prm["lambda"]
        if lam <= 0:
            raise levy.BadParameter("lambda must be positive")
        gf = series_exp(Series.from_coeffs([0, lam * t], K) + (one - Series.exp_z(K)) * x)
        classical = _egf_column(gf)
        Q = tsh_polys(levy.gamma(lam, K), K)
        brows = _bell_rows(actuarial_inner(K), K)
        umbral = _combine(brows, Q)
        rows = [FamilyRow(k, classical[k], umbral[k], brows[k]) for k in range(K + 1)]

    elif name == "meixner1":
        p = prm["p"]
        if not 0 < p < 1:
            raise levy.BadParameter("p must lie in (0, 1)")
        gf = series_pow(Series.from_coeffs([1, 1 / p], K), x) * series_pow(_one_plus_z(K), -x - t)
        classical = _egf_column(gf)
        Q = tsh_polys(levy.pascal(p, K), K)
        brows = _bell_rows(meixner_inner(p, K), K)
        umbral = _combine(brows, Q)
        rows = [FamilyRow(k, classical[k], umbral[k], brows[k]) for k in range(K + 1)]

    elif name == "bernoulli_poly":
        time = "n"
        base = Series.z(K + 1) / (Series.exp_z(K + 1) - 1)
        classical = _egf_column(series_pow(base, n) * Series.exp_z(K, x))
        Q = tsh_polys(levy.uniform_walk(K), K, t="n")
        rows = [FamilyRow(k, classical[k], Q[k]) for k in range(K + 1)]

    elif name == "euler_poly":
        time = "n"
        base = Series.constant(2, K) / (Series.exp_z(K) + 1)
        classical = _egf_column(series_pow(base, n) * Series.exp_z(K, x))
        Q = tsh_polys(levy.bernoulli_half_walk(K), K, t="n")
        rows = [FamilyRow(k, classical[k], Q[k]) for k in range(K + 1)]

    elif name == "krawtchouk":
        time = "n"
        p = prm["p"]
        if not 0 < p < 1:
            raise levy.BadParameter("p must lie in (0, 1)")
        gf = series_pow(Series.from_coeffs([1, -(1 - p) / p], K), x) * series_pow(_one_plus_z(K), n - x)
        classical = _egf_column(gf)
        Q = tsh_polys(levy.bernoulli_walk(p, K), K, t="n")
        brows = _bell_rows(krawtchouk_inner(p, K), K)
        umbral = _combine(brows, Q)
        rows = [FamilyRow(k, classical[k], umbral[k], brows[k]) for k in range(K + 1)]

    elif name == "pseudo_narumi":
        time = "n"
        a = prm["a"]
        if a <= 0 or a.denominator != 1:
            raise levy.BadParameter("a must be a positive integer")
        log_ratio = series_log(_one_plus_z(K + 1)).shift_down(1)
        gf = series_pow(log_ratio, a * n) * series_pow(_one_plus_z(K), x)
        classical = list(gf.coeffs)
        Q = [q.subs({"n": a * n}) for q in tsh_polys(levy.uniform_walk(K), K, t="n")]
        brows = _bell_rows(U.comp_inverse(U.special("u", K)), K)
        umbral = _combine(brows, Q)
        rows = [FamilyRow(k, classical[k], umbral[k], brows[k], Poly.const(factorial(k)))
                for k in range(K + 1)]

    return FamilyTable(name, prm, rows, time)


def similarity_checks(order: int = 10, p=Fraction(1, 3)) -> list:
    """The umbral similarities the family bridges rely on."""
    p = rat(p)
    out = []
    lhs = U.inverse(U.special("ubar", order))
    rhs = U.scale(-1, U.special("chi", order))
    out.append(Check("similar[-1.ubar == -chi]", lhs == rhs, {"lhs": lhs, "rhs": rhs}))

    # the reversion is mu itself; its inverse -1 . (...) is the Bernoulli(p) umbra
    inv = U.comp_inverse(krawtchouk_inner(p, order))
    mu = levy.bernoulli_mu(p, order)
    out.append(Check(f"similar[(chi.(-1.chi - chi/d))^<-1> == mu] p={p}", inv == mu,
                     {"lhs": inv, "rhs": mu}))
    walk = levy.bernoulli_walk(p, order).alpha
    out.append(Check(f"similar[-1.(chi.(-1.chi - chi/d))^<-1> == -1.mu] p={p}",
                     U.inverse(inv) == walk, {"lhs": U.inverse(inv), "rhs": walk}))

    u_inv_p = U.primitive(U.comp_inverse(U.special("u", order + 1)))
    lhs = U.dot_umbra(u_inv_p, U.special("bell", order))
    rhs = U.special("bernoulli", order)
    out.append(Check("similar[u^<-1>_P . beta == iota]", lhs == rhs, {"lhs": lhs, "rhs": rhs}))

    lhs = U.inverse(U.scale(-1, U.special("chi", order)))
    rhs = U.special("ubar", order)
    out.append(Check("similar[ubar == -1.(-chi)]", lhs == rhs, {"lhs": lhs, "rhs": rhs}))
    for c in out:
        if c.passed:
            c.witness = {}
    return out


def krawtchouk_similarity_literal(order: int = 10, p=Fraction(1, 3)) -> Check:
    """``-1 . (chi . (-1 . chi - chi / d))^<-1> == mu`` read literally.

    This does not hold: the left side has generating function ``p e^z + 1 - p``
    while ``f(mu, z) = 1 / (p e^z + 1 - p)``.  Kept so the discrepancy stays visible.
    """
    p = rat(p)
    lhs = U.inverse(U.comp_inverse(krawtchouk_inner(p, order)))
    rhs = levy.bernoulli_mu(p, order)
    ok = lhs == rhs
    return Check(f"literal[-1.(chi.(-1.chi - chi/d))^<-1> == mu] p={p}", ok,
                 {} if ok else {"lhs": lhs, "rhs": rhs})
