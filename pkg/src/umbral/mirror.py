"""Generating-function counterparts of the operations in :mod:`umbral.umbra`.

Each function builds the egf of its operands, works on truncated series
only, and reads the moments back.  None of them touches Bell polynomials or
Stirling numbers, so they serve as an independent oracle.
"""

from __future__ import annotations

from .polyring import (
    Series,
    as_poly,
    series_compose,
    series_exp,
    series_log,
    series_pow,
    series_revert,
)
from .umbra import Umbra, egf, from_egf, _rational_first_moment


def add(a: Umbra, b: Umbra) -> Umbra:
    return from_egf(egf(a) * egf(b))


def disjoint_sum(a: Umbra, b: Umbra, sign: int = 1) -> Umbra:
    if sign > 0:
        return from_egf(egf(a) + egf(b) - 1)
    return from_egf(egf(a) - egf(b) + 1)


def scale(c, a: Umbra) -> Umbra:
    return from_egf(egf(a).scale_z(c))


def dot_poly(w, a: Umbra) -> Umbra:
    return from_egf(series_pow(egf(a), as_poly(w)))


def dot_umbra(g: Umbra, a: Umbra) -> Umbra:
    """``f(g . a, z) = f(g, log f(a, z))``."""
    return from_egf(series_compose(egf(g), series_log(egf(a))))


def cumulant(a: Umbra) -> Umbra:
    return from_egf(series_log(egf(a)) + 1)


def partition(a: Umbra) -> Umbra:
    return from_egf(series_exp(egf(a) - 1))


def compose(g: Umbra, a: Umbra) -> Umbra:
    return from_egf(series_compose(egf(g), egf(a) - 1))


def comp_inverse(a: Umbra) -> Umbra:
    _rational_first_moment(a)
    return from_egf(series_revert(egf(a) - 1) + 1)


def primitive(a: Umbra) -> Umbra:
    # (f - 1)/z has constant term m_1; an umbra keeps m_0 = 1, so only n >= 1 carries over
    f = (egf(a) - 1).shift_down(1)
    return from_egf(f - f.coeffs[0] + 1)


def falling_moments(a: Umbra, k: int):
    """``E[(a)_k] = k! [z^k] f(a, log(1 + z))``."""
    N = a.order
    log1pz = series_log(Series.from_coeffs([1, 1], N))
    return from_egf(series_compose(egf(a), log1pz))[k]
