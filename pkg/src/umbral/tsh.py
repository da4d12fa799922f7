"""Time-space harmonic polynomials ``Q_k(x, t) = E[(x - t . alpha)^k]``."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from . import umbra as U
from .combinat import bell_complete_all
from .levy import ProcessUmbra, sum_process
from .polyring import ONE, ZERO, Poly, as_poly
from .report import Check


class DegreeTooLarge(ValueError):
    pass


def _binomial_moments(shift: Poly, u: U.Umbra, K: int) -> list:
    # E[(shift + u)^k] for k <= K, shift an ordinary polynomial
    powers = [ONE]
    for _ in range(K):
        powers.append(powers[-1] * shift)
    out = []
    for k in range(K + 1):
        acc = ZERO
        for j in range(k + 1):
            if u[j]:
                acc = acc + powers[k - j] * u[j] * comb(k, j)
        out.append(acc)
    return out


@lru_cache(maxsize=256)
def _tsh_cached(alpha: U.Umbra, K: int, x: str, t: str) -> tuple:
    minus_t = U.dot_poly(-Poly.var(t), alpha.truncate(K))
    return tuple(_binomial_moments(Poly.var(x), minus_t, K))


def tsh_polys(proc: ProcessUmbra, K: int, x: str = "x", t: str = "t") -> list:
    """``[Q_0, ..., Q_K]`` by binomial expansion against ``(-t) . alpha``."""
    if K > proc.order:
        raise DegreeTooLarge(f"degree {K} exceeds truncation order {proc.order}")
    return list(_tsh_cached(proc.alpha, K, x, t))


def tsh_Q(proc: ProcessUmbra, k: int, x: str = "x", t: str = "t") -> Poly:
    return tsh_polys(proc, k, x, t)[k]


def tsh_polys_bell(proc: ProcessUmbra, K: int, x: str = "x", t: str = "t") -> list:
    """Dual path: ``Q_k = Y_k(x - t c_1, -t c_2, ..., -t c_k)`` from the cumulants ``c_i``."""
    if K > proc.order:
        raise DegreeTooLarge(f"degree {K} exceeds truncation order {proc.order}")
    X, T = Poly.var(x), Poly.var(t)
    cums = proc.cumulants()
    args = [-T * as_poly(c) for c in cums[1 : K + 1]]
    if K:
        args[0] = X + args[0]
    return bell_complete_all(args, K)


def tsh_verify(proc: ProcessUmbra, k: int) -> Check:
    """Conditional-evaluation check ``E[Q_k(q(t), t) | q(s)] = Q_k(q(s), s)``.

    With ``q(s)`` handled as the indeterminate ``y``, the left side is
    ``E[(y + zeta)^k]`` where ``zeta = (t - s) . alpha' + (-t) . alpha''``.
    """
    y, s, t = Poly.var("y"), Poly.var("s"), Poly.var("t")
    alpha = proc.alpha.truncate(k)
    zeta = U.add(U.dot_poly(t - s, alpha), U.dot_poly(-t, alpha))
    lhs = _binomial_moments(y, zeta, k)[k]
    rhs = tsh_Q(proc, k, x="y", t="s")
    ok = "t" not in lhs.variables() and lhs == rhs
    return Check(f"tsh[{proc.label}] k={k}", ok, {} if ok else {"lhs": lhs, "rhs": rhs})


def tsh_verify_poly(proc: ProcessUmbra, poly: Poly) -> Check:
    """Conditional-evaluation check for an arbitrary ``P(x, t)``:
    ``E[P(y + (t - s) . alpha, t)]`` must be ``P(y, s)``."""
    k = max(poly.degree("x"), 0)
    y, s, t = Poly.var("y"), Poly.var("s"), Poly.var("t")
    increment = U.dot_poly(t - s, proc.alpha.truncate(k))
    ymoments = _binomial_moments(y, increment, k)
    lhs = ZERO
    for j, c in poly.coefficients_in("x").items():
        lhs = lhs + c * ymoments[j]
    rhs = poly.subs({"x": y, "t": s})
    ok = "t" not in lhs.variables() and lhs == rhs
    return Check(f"tsh[{proc.label}] combination", ok, {} if ok else {"lhs": lhs, "rhs": rhs})


def dual_path_check(proc: ProcessUmbra, K: int) -> Check:
    a = tsh_polys(proc, K)
    b = tsh_polys_bell(proc, K)
    bad = [k for k in range(K + 1) if a[k] != b[k]]
    witness = {}
    if bad:
        k = bad[0]
        witness = {"k": k, "binomial": a[k], "bell": b[k]}
    return Check(f"dual[{proc.label}] K={K}", not bad, witness)


def appell_check(proc: ProcessUmbra, k: int) -> Check:
    """``dQ_k/dx = k Q_{k-1}``."""
    Q = tsh_polys(proc, k)
    if k == 0:
        ok = Q[0] == 1
        return Check(f"appell[{proc.label}] k=0", ok, {} if ok else {"Q0": Q[0]})
    lhs, rhs = Q[k].diff("x"), Q[k - 1] * k
    ok = lhs == rhs
    return Check(f"appell[{proc.label}] k={k}", ok, {} if ok else {"lhs": lhs, "rhs": rhs})


def sheffer_check(proc: ProcessUmbra, k: int) -> Check:
    """``Q_k(x, t + v) = sum_j C(k, j) P_j(v) Q_{k-j}(x, t)`` with ``P_j(v) = Q_j(0, v)``."""
    Q = tsh_polys(proc, k)
    t, v = Poly.var("t"), Poly.var("v")
    lhs = Q[k].subs({"t": t + v})
    rhs = ZERO
    for j in range(k + 1):
        Pj = Q[j].subs({"x": 0, "t": v})
        rhs = rhs + Pj * Q[k - j] * comb(k, j)
    ok = lhs == rhs
    return Check(f"sheffer[{proc.label}] k={k}", ok, {} if ok else {"lhs": lhs, "rhs": rhs})


def sum_process_check(p1: ProcessUmbra, p2: ProcessUmbra, k: int) -> Check:
    """``Q_k(w + y, t) = sum_j C(k, j) Q'_j(w, t) Q''_{k-j}(y, t)`` for ``X = W + Z``.

    The second spatial variable is named ``y`` because ``z`` is the series variable.
    """
    both = sum_process(p1, p2)
    w, y = Poly.var("w"), Poly.var("y")
    lhs = tsh_Q(both, k).subs({"x": w + y})
    A = tsh_polys(p1, k, x="w")
    B = tsh_polys(p2, k, x="y")
    rhs = ZERO
    for j in range(k + 1):
        rhs = rhs + A[j] * B[k - j] * comb(k, j)
    ok = lhs == rhs
    return Check(f"sum[{both.label}] k={k}", ok, {} if ok else {"lhs": lhs, "rhs": rhs})
