"""Acceptance gate: every criterion at its stated size and tolerance.

Run with ``pytest tests/test_acceptance.py -v`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time

import pytest

from umbral import families, levy, mirror, verify
from umbral import umbra as U
from umbral.numcheck import SE_TOLERANCE, SimConfig, martingale_check
from umbral.report import Check
from umbral.tsh import appell_check, dual_path_check, sheffer_check, sum_process_check, tsh_verify

ORDER = 10
RESULTS: dict = {}


def processes():
    return verify.named_processes(ORDER) + verify.random_triplets(ORDER, count=10)


def special_tables():
    return verify.suite_special(ORDER)


def master_dual_path():
    rng = random.Random(2024)
    out = []
    for i in range(100):
        a, g = verify.random_umbra(rng, ORDER), verify.random_umbra(rng, ORDER)
        out += verify.dual_path_checks(a, g, f"rnd{i}", rng)
        out.append(verify._eq(f"rnd{i} u.a == a (gf mirror)", mirror.dot_umbra(U.special("u", ORDER), a), a))
    return out


def algebraic_laws():
    rng = random.Random(99)
    out = []
    for i in range(20):
        a, g, h = (verify.random_umbra(rng, ORDER) for _ in range(3))
        out += verify.law_checks(a, g, h, f"law{i}")
    for i in range(20):
        out += verify.inverse_checks(verify.random_umbra(rng, ORDER), f"inv{i}")
    return out


def chi_dot_chi():
    return verify.chi_chi_checks(ORDER)


def kailath_segall():
    return verify.suite_ks(ORDER, n_paths=50)


def time_space_harmonic():
    return [tsh_verify(p, k) for p in processes() for k in range(9)]


def dual_tsh_paths():
    return [dual_path_check(p, 10) for p in processes()]


def appell_sheffer():
    procs = verify.named_processes(ORDER)
    return [f(p, k) for p in procs for k in range(9) for f in (appell_check, sheffer_check)]


def product_formula():
    bm, po, ga = levy.brownian(1, ORDER), levy.poisson(2, ORDER), levy.gamma(1, ORDER)
    return [sum_process_check(a, b, k) for a, b in ((bm, po), (ga, po)) for k in range(7)]


def family_tables():
    out = []
    for name in families.FAMILY_NAMES:
        out += families.family_table(name, K=8).checks()
    out += families.similarity_checks(ORDER)
    # stated literally; the reversion itself (checked above) is mu, so this is expected to fail
    out.append(families.krawtchouk_similarity_literal(ORDER))
    return out


def monte_carlo():
    start = time.perf_counter()
    out = []
    for name, params in (("brownian", {"s": "1"}), ("poisson", {"lambda": "2"}), ("gamma", {"lambda": "1"})):
        rep = martingale_check(SimConfig(name, params, t=1.0, paths=100_000, seed=42), K=4, rerun=False)
        for row in rep.rows:
            ok = abs(row.z) <= SE_TOLERANCE
            out.append(Check(f"mc[{name}] k={row.k}", ok, {} if ok else {"mean": row.mean, "se": row.se}))
    elapsed = time.perf_counter() - start
    out.append(Check("mc runtime < 30 s", elapsed < 30, {"seconds": elapsed}))
    return out


CRITERIA = [
    (1, "special-umbra moment tables and gf reconstruction", special_tables),
    (2, "dual-path agreement on 100 random umbrae", master_dual_path),
    (3, "algebraic laws and compositional-inverse round trip", algebraic_laws),
    (4, "E[(chi.chi)^n] = (-1)^(n-1) (n-1)!", chi_dot_chi),
    (5, "Kailath-Segall identities", kailath_segall),
    (6, "time-space harmonicity, k <= 8", time_space_harmonic),
    (7, "binomial vs complete-Bell TSH paths, k <= 10", dual_tsh_paths),
    (8, "Appell and Sheffer identities, k <= 8", appell_sheffer),
    (9, "product formula for sums of processes, k <= 6", product_formula),
    (10, "family tables and similarities", family_tables),
    (11, "Monte Carlo martingale means within 5 SE", monte_carlo),
]


def evaluate(number, title, fn):
    start = time.perf_counter()
    checks = fn()
    failed = [c for c in checks if not c.passed]
    line = (f"criterion {number:>2} {'PASS' if not failed else 'FAIL'}  {title} "
            f"({len(checks) - len(failed)}/{len(checks)}, {time.perf_counter() - start:.2f}s)")
    if failed:
        line += "  failing: " + ", ".join(c.id for c in failed[:3])
    RESULTS[number] = line
    return failed


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    failed = evaluate(number, title, fn)
    assert not failed, "\n".join(f"{c.id}: {c.witness}" for c in failed)


if __name__ == "__main__":
    for number, title, fn in CRITERIA:
        evaluate(number, title, fn)
        print(RESULTS[number])
