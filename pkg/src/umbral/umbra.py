"""Umbrae as truncated moment sequences and the auxiliary-umbra operations.

Every function here works in the moment domain (binomial convolutions,
falling factorials, partial Bell polynomials).  Their generating-function
counterparts live in :mod:`umbral.mirror` and are kept independent so one
can check the other.

Binary operations always treat their operands as uncorrelated; an umbra is
identified with its moments, so similarity is plain equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import polyring
from .combinat import bell_table, falling_factorials, stirling1_row
from .polyring import ONE, ZERO, Poly, Series, as_poly

SPECIAL_NAMES = ("eps", "u", "chi", "ubar", "bell", "bernoulli", "euler", "delta")

_ALIASES = {
    "epsilon": "eps",
    "augmentation": "eps",
    "unity": "u",
    "singleton": "chi",
    "boolean_unity": "ubar",
    "beta": "bell",
    "iota": "bernoulli",
    "eta": "euler",
}


class OrderMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


@dataclass(frozen=True)
class Umbra:
    """Moments ``m_0 = 1, m_1, ..., m_N`` of an umbra."""

    moments: tuple

    def __post_init__(self):
        ms = tuple(as_poly(m) for m in self.moments)
        if not ms or ms[0] != 1:
            raise ValueError("an umbra has m_0 = 1")
        object.__setattr__(self, "moments", ms)

    @classmethod
    def from_moments(cls, moments) -> "Umbra":
        return cls(tuple(moments))

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, n):
        return self.moments[n]

    def __len__(self):
        return len(self.moments)

    def __str__(self):
        return "Umbra(" + ", ".join(str(m) for m in self.moments) + ")"

    def truncate(self, order: int) -> "Umbra":
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return Umbra(self.moments[: order + 1])

    def to_json(self) -> dict:
        return {"order": self.order, "moments": [str(m) for m in self.moments]}

    @classmethod
    def from_json(cls, data) -> "Umbra":
        ms = [polyring.parse_poly(s) for s in data["moments"]]
        if len(ms) != data["order"] + 1:
            raise ValueError("moment count does not match order")
        return cls(tuple(ms))


def similar(a: Umbra, b: Umbra) -> bool:
    return a.moments == b.moments


def _same_order(*us: Umbra) -> int:
    orders = {u.order for u in us}
    if len(orders) != 1:
        raise OrderMismatch(f"umbrae of different orders: {sorted(orders)}")
    return orders.pop()


def constant(c, order: int) -> Umbra:
    """Umbra with moments ``c^n``; represents the scalar (or polynomial) ``c``."""
    c = as_poly(c)
    out = [ONE]
    for _ in range(order):
        out.append(out[-1] * c)
    return Umbra(tuple(out))


def special_egf(name: str, order: int) -> Series:
    """Registry generating function of a special umbra, exact to ``z^order``."""
    name = _ALIASES.get(name, name)
    N = order
    if name == "eps":
        return Series.constant(1, N)
    if name == "u":
        return Series.exp_z(N)
    if name == "chi":
        return Series.from_coeffs([1, 1], N)
    if name == "ubar":
        return Series.constant(1, N) / (Series.constant(1, N) - Series.z(N))
    if name == "bell":
        return polyring.series_exp(Series.exp_z(N) - 1)
    if name == "bernoulli":
        # z / (e^z - 1): the common z cancels, so work one order higher
        return Series.z(N + 1) / (Series.exp_z(N + 1) - 1)
    if name == "euler":
        return (Series.exp_z(N) * 2) / (Series.exp_z(N, 2) + 1)
    if name == "delta":
        return Series.from_coeffs([1, 0, Fraction(1, 2)], N)
    raise KeyError(f"unknown special umbra {name!r}; expected one of {SPECIAL_NAMES}")


@lru_cache(maxsize=None)
def special(name: str, order: int) -> Umbra:
    """Special umbra by registry name, moments read off its generating function."""
    return Umbra(tuple(polyring.moments_from_egf(special_egf(name, order))))


def add(a: Umbra, b: Umbra) -> Umbra:
    """Sum of uncorrelated umbrae: binomial convolution of moments."""
    N = _same_order(a, b)
    out = []
    for n in range(N + 1):
        acc = ZERO
        for k in range(n + 1):
            if a[k] and b[n - k]:
                acc = acc + a[k] * b[n - k] * comb(n, k)
        out.append(acc)
    return Umbra(tuple(out))


def disjoint_sum(a: Umbra, b: Umbra, sign: int = 1) -> Umbra:
    """Disjoint sum (``sign=+1``) or difference (``sign=-1``)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    N = _same_order(a, b)
    out = [ONE] + [a[n] + b[n] if sign > 0 else a[n] - b[n] for n in range(1, N + 1)]
    return Umbra(tuple(out))


def scale(c, a: Umbra) -> Umbra:
    """``c a`` for a scalar or polynomial ``c``: moments ``c^n m_n``."""
    c = as_poly(c)
    out, f = [], ONE
    for m in a.moments:
        out.append(m * f)
        f = f * c
    return Umbra(tuple(out))


def product(a: Umbra, b: Umbra) -> Umbra:
    """Product of uncorrelated umbrae: ``E[(a b)^n] = E[a^n] E[b^n]``."""
    _same_order(a, b)
    return Umbra(tuple(x * y for x, y in zip(a.moments, b.moments)))


def _bell_combine(weights, a: Umbra) -> Umbra:
    # E^i = sum_j weights[j] B_{i,j}(a_1, ...)
    N = a.order
    B = bell_table(a.moments[1:], N)
    out = [ONE]
    for i in range(1, N + 1):
        acc = ZERO
        for j in range(1, i + 1):
            if weights[j] and B[i][j]:
                acc = acc + weights[j] * B[i][j]
        out.append(acc)
    return Umbra(tuple(out))


def dot_poly(w, a: Umbra) -> Umbra:
    """``w . a`` for a polynomial multiplier ``w`` (integer, rational, ``t``, ``t - s`` ...)."""
    return _bell_combine(falling_factorials(w, a.order), a)


def falling_moments(a: Umbra, k: int) -> Poly:
    """``E[(a)_k] = sum_j s(k, j) m_j``."""
    if k > a.order:
        raise OrderMismatch(f"k={k} exceeds order {a.order}")
    row = stirling1_row(k)
    acc = ZERO
    for j, s in enumerate(row):
        if s and a[j]:
            acc = acc + a[j] * s
    return acc


def dot_umbra(g: Umbra, a: Umbra) -> Umbra:
    """``g . a``: the multiplier ``t`` of :func:`dot_poly` replaced by the umbra ``g``."""
    N = _same_order(g, a)
    weights = [falling_moments(g, j) for j in range(N + 1)]
    return _bell_combine(weights, a)


def cumulant(a: Umbra) -> Umbra:
    """The cumulant umbra ``chi . a``, using ``E[(chi)_j] = (-1)^(j-1) (j-1)!``."""
    return dot_umbra(special("chi", a.order), a)


def partition(a: Umbra) -> Umbra:
    """The partition umbra ``beta . a``: moments are complete Bell polynomials."""
    return _bell_combine([ONE] * (a.order + 1), a)


def compose(g: Umbra, a: Umbra) -> Umbra:
    """Composition umbra ``g . beta . a``: ``sum_j E[g^j] B_{i,j}(a)``."""
    _same_order(g, a)
    return _bell_combine(g.moments, a)


def _rational_first_moment(a: Umbra) -> Fraction:
    if a.order < 1 or not a[1].is_constant() or not a[1]:
        raise NotInvertible("compositional inverse needs a nonzero rational first moment")
    return a[1].constant_value()


def comp_inverse(a: Umbra) -> Umbra:
    """Compositional inverse: the umbra ``g`` with ``g . beta . a == chi``.

    Solves the triangular system ``sum_j g_j B_{i,j}(a) = [i == 1]`` using
    ``B_{i,i} = a_1^i``.
    """
    a1 = _rational_first_moment(a)
    N = a.order
    B = bell_table(a.moments[1:], N)
    g = [ONE]
    for i in range(1, N + 1):
        acc = ONE if i == 1 else ZERO
        for j in range(1, i):
            if g[j] and B[i][j]:
                acc = acc - g[j] * B[i][j]
        g.append(acc / a1**i)
    return Umbra(tuple(g))


def primitive(a: Umbra) -> Umbra:
    """The primitive umbra; its n-th moment is ``m_(n+1) / (n+1)``. Loses one order."""
    if a.order < 1:
        raise OrderMismatch("primitive needs order >= 1")
    return Umbra((ONE,) + tuple(a[n + 1] / (n + 1) for n in range(1, a.order)))


def inverse(a: Umbra) -> Umbra:
    """``-1 . a``."""
    return dot_poly(-1, a)


def egf(a: Umbra) -> Series:
    return polyring.egf_from_moments(a.moments)


def from_egf(f: Series) -> Umbra:
    return Umbra(tuple(polyring.moments_from_egf(f)))
