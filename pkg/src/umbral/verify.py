"""Verification suites: every identity checked exactly on fixed and randomized inputs."""

from __future__ import annotations

import random
import time
from fractions import Fraction

from . import families, kailath, levy, mirror
from . import umbra as U
from .combinat import (
    bell_partial,
    bell_partial_enum,
    bell_complete,
    falling_factorial,
    stirling1,
)
from .polyring import Poly, Series
from .report import Check, Report
from .tsh import (
    appell_check,
    dual_path_check,
    sheffer_check,
    sum_process_check,
    tsh_polys,
    tsh_verify,
    tsh_verify_poly,
)

def random_rational(rng: random.Random, num: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_umbra(rng: random.Random, order: int, invertible: bool = True) -> U.Umbra:
    ms = [Fraction(1)] + [random_rational(rng) for _ in range(order)]
    if invertible and ms[1] == 0:
        ms[1] = Fraction(rng.choice([-2, -1, 1, 2]), rng.randint(1, 3))
    return U.Umbra(tuple(ms))


def random_spec(rng: random.Random) -> levy.LevySpec:
    atoms = []
    for _ in range(rng.randint(0, 3)):
        x = random_rational(rng, 3, 3) or Fraction(1)
        atoms.append((x, Fraction(rng.randint(1, 4), rng.randint(1, 3))))
    return levy.LevySpec(
        c0=random_rational(rng),
        s2=Fraction(rng.randint(0, 4), rng.randint(1, 3)),
        atoms=tuple(atoms),
    )


def named_processes(order: int) -> list:
    """The seven named processes with fixed rational parameters."""
    return [
        levy.brownian(Fraction(2), order),
        levy.poisson(Fraction(3, 2), order),
        levy.gamma(Fraction(2), order),
        levy.pascal(Fraction(1, 3), order),
        levy.uniform_walk(order),
        levy.bernoulli_half_walk(order),
        levy.bernoulli_walk(Fraction(1, 3), order),
    ]


def random_triplets(order: int, count: int = 10, seed: int = 7) -> list:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        p = levy.from_triplet(random_spec(rng), order)
        out.append(levy.ProcessUmbra(p.alpha, f"triplet{i}", p.params, p.known_cumulants, p.mgf))
    return out


def _eq(id_: str, lhs, rhs) -> Check:
    ok = lhs == rhs
    return Check(id_, ok, {} if ok else {"lhs": lhs, "rhs": rhs})


# -- special umbrae ----------------------------------------------------------


def suite_special(order: int) -> list:
    N = order
    out = [
        _eq("chi moments", U.special("chi", N).moments, tuple(Poly.const(int(n <= 1)) for n in range(N + 1))),
        _eq("eps moments", U.special("eps", N).moments, tuple(Poly.const(int(n == 0)) for n in range(N + 1))),
        _eq("u moments", U.special("u", N).moments, tuple(Poly.const(1) for _ in range(N + 1))),
    ]
    from math import factorial

    out.append(_eq("ubar moments", U.special("ubar", N).moments,
                   tuple(Poly.const(factorial(n)) for n in range(N + 1))))
    bell_numbers = [bell_complete(n, [1] * n) for n in range(N + 1)]
    out.append(_eq("bell moments", list(U.special("bell", N).moments), bell_numbers))
    out.append(_eq("bell first six", [int(m.constant_value()) for m in U.special("bell", min(N, 5)).moments],
                   [1, 1, 2, 5, 15, 52][: min(N, 5) + 1]))
    out.append(_eq("delta moments", U.special("delta", N).moments,
                   tuple(Poly.const(int(n in (0, 2))) for n in range(N + 1))))
    # gf reconstruction: f(iota) (e^z - 1) = z and f(eta) (1 + e^{2z}) = 2 e^z
    f_iota = U.egf(U.special("bernoulli", N))
    out.append(_eq("iota gf", f_iota * (Series.exp_z(N) - 1), Series.z(N)))
    f_eta = U.egf(U.special("euler", N))
    out.append(_eq("eta gf", f_eta * (Series.exp_z(N, 2) + 1), Series.exp_z(N) * 2))
    return out


# -- umbral calculus -------------------------------------------------------------


def dual_path_checks(a: U.Umbra, g: U.Umbra, tag: str, rng: random.Random) -> list:
    """Moment-domain vs generating-function results of every operation."""
    t = Poly.var("t")
    c = random_rational(rng)
    w = random_rational(rng)
    out = [
        _eq(f"{tag} add", U.add(a, g), mirror.add(a, g)),
        _eq(f"{tag} disjoint_sum", U.disjoint_sum(a, g), mirror.disjoint_sum(a, g)),
        _eq(f"{tag} disjoint_diff", U.disjoint_sum(a, g, -1), mirror.disjoint_sum(a, g, -1)),
        _eq(f"{tag} scale", U.scale(c, a), mirror.scale(c, a)),
        _eq(f"{tag} dot_poly rational", U.dot_poly(w, a), mirror.dot_poly(w, a)),
        _eq(f"{tag} dot_poly t", U.dot_poly(t, a), mirror.dot_poly(t, a)),
        _eq(f"{tag} dot_umbra", U.dot_umbra(g, a), mirror.dot_umbra(g, a)),
        _eq(f"{tag} cumulant", U.cumulant(a), mirror.cumulant(a)),
        _eq(f"{tag} partition", U.partition(a), mirror.partition(a)),
        _eq(f"{tag} compose", U.compose(g, a), mirror.compose(g, a)),
        _eq(f"{tag} comp_inverse", U.comp_inverse(a), mirror.comp_inverse(a)),
        _eq(f"{tag} primitive", U.primitive(a), mirror.primitive(a)),
    ]
    k = rng.randint(0, a.order)
    out.append(_eq(f"{tag} falling_moments k={k}", U.falling_moments(a, k), mirror.falling_moments(a, k)))
    return out


def law_checks(a: U.Umbra, g: U.Umbra, h: U.Umbra, tag: str) -> list:
    t = Poly.var("t")
    s = Poly.var("s")
    N = a.order
    eps = U.special("eps", N)
    return [
        _eq(f"{tag} a == beta.kappa_a", U.partition(U.cumulant(a)), a),
        _eq(f"{tag} chi.(a+g) == chi.a +. chi.g", U.cumulant(U.add(a, g)),
            U.disjoint_sum(U.cumulant(a), U.cumulant(g))),
        _eq(f"{tag} beta.(a+.g) == beta.a + beta.g", U.partition(U.disjoint_sum(a, g)),
            U.add(U.partition(a), U.partition(g))),
        _eq(f"{tag} t.(a+g) == t.a + t.g", U.dot_poly(t, U.add(a, g)),
            U.add(U.dot_poly(t, a), U.dot_poly(t, g))),
        _eq(f"{tag} (a+g).h == a.h + g.h", U.dot_umbra(U.add(a, g), h),
            U.add(U.dot_umbra(a, h), U.dot_umbra(g, h))),
        _eq(f"{tag} (t+s).a == t.a + s.a", U.dot_poly(t + s, a),
            U.add(U.dot_poly(t, a), U.dot_poly(s, a))),
        _eq(f"{tag} -1.a + a == eps", U.add(U.inverse(a), a), eps),
    ]


def inverse_checks(a: U.Umbra, tag: str) -> list:
    chi = U.special("chi", a.order)
    inv = U.comp_inverse(a)
    return [
        _eq(f"{tag} a^<-1>.beta.a == chi", U.compose(inv, a), chi),
        _eq(f"{tag} a.beta.a^<-1> == chi", U.compose(a, inv), chi),
    ]


def chi_chi_checks(order: int) -> list:
    from math import factorial

    chi = U.special("chi", order)
    cc = U.dot_umbra(chi, chi)
    expected = tuple([Poly.const(1)] + [Poly.const((-1) ** (n - 1) * factorial(n - 1))
                                         for n in range(1, order + 1)])
    return [_eq("E[(chi.chi)^n] = (-1)^(n-1) (n-1)!", cc.moments, expected)]


def fixed_umbra_checks(order: int) -> list:
    N = order
    sp = lambda n: U.special(n, N)  # noqa: E731
    return [
        _eq("beta.chi == u", U.dot_umbra(sp("bell"), sp("chi")), sp("u")),
        _eq("chi.beta == u", U.dot_umbra(sp("chi"), sp("bell")), sp("u")),
        _eq("u.a == a (bell)", U.dot_umbra(sp("u"), sp("bell")), sp("bell")),
        _eq("kappa_beta == u", U.cumulant(sp("bell")), sp("u")),
        _eq("kappa_eps == eps", U.cumulant(sp("eps")), sp("eps")),
        _eq("beta.chi partition == u", U.partition(sp("chi")), sp("u")),
        _eq("chi^<-1> == chi", U.comp_inverse(sp("chi")), sp("chi")),
        _eq("factorial moments of beta", [U.falling_moments(sp("bell"), k) for k in range(N + 1)],
            [Poly.const(1)] * (N + 1)),
        _eq("u_P^<-1>.beta == iota",
            U.dot_umbra(U.primitive(U.comp_inverse(U.special("u", N + 1))), sp("bell")), sp("bernoulli")),
    ]


def suite_umbra(order: int, n_random: int = 100, n_inverse: int = 20, seed: int = 2024) -> list:
    rng = random.Random(seed)
    out = fixed_umbra_checks(order) + chi_chi_checks(order)
    for i in range(n_random):
        a = random_umbra(rng, order)
        g = random_umbra(rng, order)
        out += dual_path_checks(a, g, f"rnd{i}", rng)
    for i in range(max(n_random // 5, 1)):
        a, g, h = (random_umbra(rng, order) for _ in range(3))
        out += law_checks(a, g, h, f"law{i}")
    for i in range(n_inverse):
        out += inverse_checks(random_umbra(rng, order), f"inv{i}")
    return out


# -- combinatorics -------------------------------------------------------------


def suite_combinat(order: int) -> list:
    x = Poly.var("x")
    out = []
    for k in range(order + 1):
        expanded = sum((x**j * stirling1(k, j) for j in range(k + 1)), Poly.const(0))
        out.append(_eq(f"stirling1 row {k}", expanded, falling_factorial(x, k)))
    a = [Poly.var(f"a{i}") for i in range(1, 9)]
    for i in range(1, 9):
        for j in range(1, i + 1):
            out.append(_eq(f"B_{i},{j} recurrence == enumeration", bell_partial(i, j, a),
                           bell_partial_enum(i, j, a)))
    return out


# -- Lévy processes --------------------------------------------------------------


def suite_levy(order: int) -> list:
    out = []
    for proc in named_processes(order) + random_triplets(order):
        lhs = U.egf(proc.at(Poly.var("t")))
        rhs = levy.closed_form_power(proc)
        out.append(_eq(f"mgf^t [{proc.label}]", lhs, rhs))
        out.append(_eq(f"cumulants [{proc.label}]", list(U.cumulant(proc.alpha).moments[1:]),
                       proc.cumulants()[1:]))
    rng = random.Random(11)
    for i in range(5):
        spec = random_spec(rng)
        whole = levy.from_triplet(spec, order).alpha
        diffusion = levy.from_triplet(levy.LevySpec(spec.c0, spec.s2), order).alpha
        jumps = levy.from_triplet(levy.LevySpec(atoms=spec.atoms), order).alpha
        out.append(_eq(f"compound decomposition {i}", whole, U.add(diffusion, jumps)))
    out.append(_eq("standard Gaussian", levy.from_triplet(levy.LevySpec(0, 1), 6).alpha.moments,
                   tuple(Poly.const(v) for v in (1, 0, 1, 0, 3, 0, 15))))
    return out


# -- Kailath-Segall --------------------------------------------------------------


def suite_ks(order: int, n_paths: int = 50, seed: int = 5) -> list:
    from math import factorial

    sigma = kailath.sigma_symbols(order)
    out = []
    P = kailath.ks_polys(order, sigma)
    for n in range(order + 1):
        out.append(_eq(f"ks recursion == bell n={n}", P[n], kailath.ks_via_bell(n, sigma)))
    c = [P[i] * factorial(i) for i in range(1, order + 1)]
    for n in range(1, order + 1):
        out.append(_eq(f"ks inversion n={n}", kailath.ks_invert(n, c), sigma[n - 1]))
    out.append(kailath.ks_recursion_check(order))
    for m in range(1, 9):
        for n in range(0, m + 1):
            out.append(kailath.newton_oracle_check(n, m))
    rng = random.Random(seed)
    for i in range(n_paths):
        jumps = [random_rational(rng, 4, 4) for _ in range(rng.randint(1, 8))]
        for n in range(1, len(jumps) + 1):
            r = kailath.jump_path_eval(jumps, n)
            out.append(Check(f"jump path {i} n={n}", r.check,
                             {} if r.check else {"jumps": jumps, **r.to_json()}))
    return out


# -- time-space harmonic ---------------------------------------------------------


def process_set(order: int) -> list:
    return named_processes(order) + random_triplets(order)


def suite_tsh(order: int, k_max: int = 8, seed: int = 3) -> list:
    out = []
    rng = random.Random(seed)
    for proc in process_set(order):
        for k in range(min(k_max, order) + 1):
            out.append(tsh_verify(proc, k))
        out.append(dual_path_check(proc, order))
    for proc in named_processes(order)[:4]:
        Q = tsh_polys(proc, min(4, order))
        combo = sum((q * random_rational(rng) for q in Q), Poly.const(0))
        out.append(tsh_verify_poly(proc, combo))
    return out


def suite_appell(order: int, k_max: int = 8) -> list:
    return [appell_check(p, k) for p in named_processes(order) for k in range(min(k_max, order) + 1)]


def suite_sheffer(order: int, k_max: int = 8) -> list:
    return [sheffer_check(p, k) for p in named_processes(order) for k in range(min(k_max, order) + 1)]


def suite_sum(order: int, k_max: int = 6) -> list:
    bm, po, ga = levy.brownian(1, order), levy.poisson(Fraction(3, 2), order), levy.gamma(2, order)
    out = []
    for p1, p2 in ((bm, po), (ga, po), (bm, bm)):
        for k in range(min(k_max, order) + 1):
            out.append(sum_process_check(p1, p2, k))
    return out


def suite_families(order: int, k_max: int = 8) -> list:
    out = []
    K = min(k_max, order)
    params = {
        "hermite": {"s2": Fraction(2)},
        "poisson_charlier": {"lambda": Fraction(3, 2)},
        "actuarial": {"lambda": Fraction(2)},
        "meixner1": {"p": Fraction(1, 3)},
        "krawtchouk": {"p": Fraction(2, 5)},
        "pseudo_narumi": {"a": 2},
    }
    for name in families.FAMILY_NAMES:
        out += families.family_table(name, params.get(name), K).checks()
    out += families.similarity_checks(order)
    out.append(families.krawtchouk_similarity_literal(order))
    return out


_SUITE_FUNCS = {
    "special": suite_special,
    "combinat": suite_combinat,
    "umbra": suite_umbra,
    "levy": suite_levy,
    "ks": suite_ks,
    "tsh": suite_tsh,
    "appell": suite_appell,
    "sheffer": suite_sheffer,
    "sum": suite_sum,
    "families": suite_families,
}

SUITES = tuple(_SUITE_FUNCS)


def run_suite(name: str, order: int) -> Report:
    names = SUITES if name == "all" else (name,)
    start = time.perf_counter()
    checks = []
    for n in names:
        if n not in _SUITE_FUNCS:
            raise KeyError(f"unknown suite {n!r}; expected one of {SUITES + ('all',)}")
        checks += _SUITE_FUNCS[n](order)
    return Report(name, order, checks, time.perf_counter() - start)
