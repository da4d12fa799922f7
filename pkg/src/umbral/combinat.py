"""Stirling numbers, falling factorials, Bell polynomials and Newton's identities."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .polyring import ONE, ZERO, Poly, Series, as_poly, series_exp


@lru_cache(maxsize=None)
def _stirling1_row(k: int) -> tuple:
    # coefficients of x(x-1)...(x-k+1), constant term first
    row = [1]
    for m in range(k):
        nxt = [0] * (len(row) + 1)
        for j, c in enumerate(row):
            nxt[j + 1] += c
            nxt[j] -= m * c
        row = nxt
    return tuple(row)


def stirling1(k: int, j: int) -> int:
    """Signed Stirling number of the first kind, ``(x)_k = sum_j s(k, j) x^j``."""
    if k < 0 or j < 0 or j > k:
        raise IndexError(f"stirling1 needs 0 <= j <= k, got ({k}, {j})")
    return _stirling1_row(k)[j]


def stirling1_row(k: int) -> tuple:
    return _stirling1_row(k)


def falling_factorial(w, j: int) -> Poly:
    """``w (w - 1) ... (w - j + 1)``, with ``(w)_0 = 1``."""
    if j < 0:
        raise ValueError("falling factorial order must be nonnegative")
    w = as_poly(w)
    out = ONE
    for i in range(j):
        out = out * (w - i)
    return out


def falling_factorials(w, n: int) -> list:
    """``[(w)_0, (w)_1, ..., (w)_n]``."""
    w = as_poly(w)
    out = [ONE]
    for i in range(n):
        out.append(out[-1] * (w - i))
    return out


def bell_table(a: Sequence, n: int) -> list:
    """Partial Bell polynomials ``B[i][j] = B_{i,j}(a_1, ..., a_{i-j+1})`` for ``i, j <= n``.

    ``a`` is indexed from 1: ``a[0]`` holds ``a_1``.  Uses
    ``B_{i,j} = sum_m C(i-1, m-1) a_m B_{i-m, j-1}`` with ``B_{0,0} = 1``.
    """
    if len(a) < n:
        raise IndexError(f"need {n} Bell arguments, got {len(a)}")
    a = [as_poly(v) for v in a[:n]]
    B = [[ZERO] * (n + 1) for _ in range(n + 1)]
    B[0][0] = ONE
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            acc = ZERO
            for m in range(1, i - j + 2):
                prev = B[i - m][j - 1]
                if prev and a[m - 1]:
                    acc = acc + a[m - 1] * prev * comb(i - 1, m - 1)
            B[i][j] = acc
    return B


def bell_partial(i: int, j: int, a: Sequence) -> Poly:
    if i < 0 or j < 0:
        raise IndexError("negative Bell index")
    if j > i:
        return ZERO
    if i == 0:
        return ONE
    if j == 0:
        return ZERO
    if len(a) < i - j + 1:
        raise IndexError(f"B_{{{i},{j}}} needs {i - j + 1} arguments")
    padded = list(a[: i - j + 1]) + [ZERO] * (j - 1)
    return bell_table(padded, i)[i][j]


def bell_complete(k: int, b: Sequence) -> Poly:
    """Complete exponential Bell polynomial ``Y_k = sum_j B_{k,j}``; ``Y_0 = 1``."""
    if k == 0:
        return ONE
    if len(b) < k:
        raise IndexError(f"Y_{k} needs {k} arguments")
    row = bell_table(b, k)[k]
    out = ZERO
    for v in row:
        out = out + v
    return out


def bell_complete_all(b: Sequence, n: int) -> list:
    """``[Y_0, ..., Y_n]``."""
    B = bell_table(b, n)
    out = []
    for i in range(n + 1):
        acc = ZERO
        for v in B[i]:
            acc = acc + v
        out.append(acc)
    return out


def set_partitions(elements: Sequence) -> Iterator[list]:
    """All set partitions of ``elements`` as lists of blocks."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def bell_partial_enum(i: int, j: int, a: Sequence) -> Poly:
    """Partial Bell polynomial by brute-force set-partition enumeration (test oracle)."""
    a = [as_poly(v) for v in a]
    out = ZERO
    for part in set_partitions(list(range(i))):
        if len(part) != j:
            continue
        term = ONE
        for block in part:
            term = term * a[len(block) - 1]
        out = out + term
    return out


def power_sums(xs: Sequence, n: int) -> list:
    """``[p_1, ..., p_n]`` of the values ``xs``."""
    xs = [as_poly(v) for v in xs]
    return [sum((x**k for x in xs), ZERO) for k in range(1, n + 1)]


def elementary_direct(xs: Sequence, n: int) -> list:
    """``[e_0, ..., e_n]`` of ``xs`` by expanding ``prod (1 + x_i z)``."""
    e = [ONE] + [ZERO] * n
    for x in xs:
        x = as_poly(x)
        for k in range(n, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e


def elementary_from_powersums(n: int, p: Sequence) -> Poly:
    """``e_n`` in terms of power sums ``p_1..p_n``.

    Read off ``sum_k e_k z^k = exp(sum_i (-1)^(i-1) p_i z^i / i)``, a route
    independent of the Newton/Kailath-Segall recursion.
    """
    if len(p) < n:
        raise IndexError(f"e_{n} needs {n} power sums")
    if n == 0:
        return ONE
    inner = [ZERO] + [as_poly(p[i - 1]) * Fraction((-1) ** (i - 1), i) for i in range(1, n + 1)]
    return series_exp(Series(inner)).coeffs[n]
