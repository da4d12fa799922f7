"""Kailath-Segall polynomials: iterated integrals in terms of variations.

``P^(n)`` is a polynomial in the variations ``sigma_1 = X_t``,
``sigma_2 = [X, X]_t`` and ``sigma_k = sum (Delta X_s)^k``.  Under the
substitution ``sigma_k -> p_k`` (power sums of the jumps) it becomes the
elementary symmetric polynomial ``e_n`` of the jumps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from . import umbra as U
from .combinat import (
    bell_complete,
    bell_table,
    elementary_direct,
    elementary_from_powersums,
    falling_factorial,
    power_sums,
)
from .polyring import ONE, ZERO, Poly, as_poly, rat
from .report import Check


def sigma_symbols(n: int) -> list:
    """Indeterminates ``sigma1 .. sigma_n`` standing for the variations."""
    return [Poly.var(f"sigma{i}") for i in range(1, n + 1)]


def _need(seq: Sequence, n: int):
    if n < 0 or len(seq) < n:
        raise IndexError(f"need {n} variations, got {len(seq)}")


def ks_polys(n: int, sigma: Sequence) -> list:
    """``[P^(0), ..., P^(n)]`` from the recursion
    ``P^(k) = (1/k) sum_{i=1}^k (-1)^(i+1) P^(k-i) sigma_i``."""
    _need(sigma, n)
    sigma = [as_poly(s) for s in sigma]
    P = [ONE]
    for k in range(1, n + 1):
        acc = ZERO
        for i in range(1, k + 1):
            term = P[k - i] * sigma[i - 1]
            acc = acc + term if i % 2 else acc - term
        P.append(acc / k)
    return P


def ks_poly(n: int, sigma: Sequence) -> Poly:
    return ks_polys(n, sigma)[n]


def ks_via_bell(n: int, sigma: Sequence) -> Poly:
    """``P^(n) = Y_n(b_1, ..., b_n) / n!`` with ``b_i = (-1)^(i-1) (i-1)! sigma_i``."""
    _need(sigma, n)
    b = [as_poly(sigma[i - 1]) * ((-1) ** (i - 1) * factorial(i - 1)) for i in range(1, n + 1)]
    return bell_complete(n, b) / factorial(n)


def ks_invert(n: int, c: Sequence) -> Poly:
    """Recover ``sigma_n`` from ``c_i = i! P^(i)``:
    ``sigma_n = sum_j (-1)^(n-j) / (n-1)_(n-j) B_{n,j}(c_1, ...)``."""
    _need(c, n)
    if n == 0:
        return ONE
    B = bell_table(list(c[:n]), n)
    acc = ZERO
    for j in range(1, n + 1):
        coef = Fraction((-1) ** (n - j)) / falling_factorial(n - 1, n - j).constant_value()
        acc = acc + B[n][j] * coef
    return acc


def ks_umbra(n: int, sigma: Sequence) -> tuple:
    """``(psi, upsilon)`` with ``psi = (chi . chi) sigma_t`` and ``upsilon = beta . psi``.

    ``sigma_t`` is the umbra whose k-th moment is ``sigma_k``; ``E[upsilon^k] = k! P^(k)``.
    """
    _need(sigma, n)
    sig = U.Umbra((ONE,) + tuple(as_poly(s) for s in sigma[:n]))
    chi = U.special("chi", n)
    psi = U.product(U.dot_umbra(chi, chi), sig)
    return psi, U.partition(psi)


def ks_recursion_check(n: int) -> Check:
    """``E[upsilon^k] = E[psi (upsilon + psi)^(k-1)]`` on the umbral side, and ``k! P^(k)`` agreement."""
    sigma = sigma_symbols(n)
    psi, ups = ks_umbra(n, sigma)
    P = ks_polys(n, sigma)
    bad = []
    for k in range(1, n + 1):
        # E[psi (upsilon + psi)^(k-1)] = sum_j C(k-1, j) E[ups^(k-1-j)] E[psi^(j+1)]
        rhs = ZERO
        for j in range(k):
            rhs = rhs + ups[k - 1 - j] * psi[j + 1] * comb(k - 1, j)
        if ups[k] != rhs or ups[k] != P[k] * factorial(k):
            bad.append(k)
    return Check(f"ks-umbral n<={n}", not bad, {"k": bad[0]} if bad else {})


def newton_oracle_check(n: int, m: int) -> Check:
    """``P^(n)(p_1, ..., p_n) == e_n(x_1, ..., x_m)`` for symbolic ``x_i``."""
    if not 0 <= n <= m:
        raise ValueError("need 0 <= n <= m")
    xs = [Poly.var(f"x{i}") for i in range(1, m + 1)]
    p = power_sums(xs, max(n, 1))
    direct = elementary_direct(xs, n)[n]
    via_ks = ks_poly(n, p)
    via_newton = elementary_from_powersums(n, p)
    ok = via_ks == direct == via_newton
    return Check(f"newton n={n} m={m}", ok,
                 {} if ok else {"ks": via_ks, "direct": direct, "newton": via_newton})


@dataclass
class JumpPathResult:
    n: int
    variation: Fraction
    integral: Fraction
    ks_value: Fraction

    @property
    def check(self) -> bool:
        return self.ks_value == self.integral

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "variation": str(self.variation),
            "integral": str(self.integral),
            "ks_value": str(self.ks_value),
            "check": self.check,
        }


def jump_path_eval(jumps: Sequence, n: int) -> JumpPathResult:
    """Pure-jump path with finitely many jumps.

    The n-th variation is ``sum_i jump_i^n``; the n-th iterated integral is
    ``e_n(jumps)``.  ``ks_value`` is ``P^(n)`` evaluated at the variations.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    js = [rat(j) for j in jumps]
    pk = [sum((j**k for j in js), Fraction(0)) for k in range(1, n + 1)]
    e = elementary_direct([Poly.const(j) for j in js], n)[n].constant_value()
    return JumpPathResult(n, pk[n - 1], e, ks_poly(n, pk).constant_value())
