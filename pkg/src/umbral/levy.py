"""Lévy processes as umbrae.

A process is carried by the umbra ``alpha`` of its value at time 1; the
process at time ``t`` is ``t . alpha`` (see :func:`umbral.umbra.dot_poly`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Mapping, Sequence

from . import umbra as U
from .polyring import ONE, ZERO, Poly, Series, as_poly, rat, series_exp, series_pow

DEFAULT_ORDER = 12


class BadParameter(ValueError):
    pass


@dataclass(frozen=True)
class LevySpec:
    """Triplet in normal form: ``c0`` (drift plus large jumps), Gaussian variance
    ``s2`` and a Lévy measure given either by atoms ``(x_i, w_i)`` or directly by
    its moments ``m_2, m_3, ...``."""

    c0: Fraction = Fraction(0)
    s2: Fraction = Fraction(0)
    atoms: tuple = ()
    measure_moments: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "c0", rat(self.c0))
        object.__setattr__(self, "s2", rat(self.s2))
        atoms = tuple((rat(x), rat(w)) for x, w in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if self.measure_moments is not None:
            if atoms:
                raise BadParameter("give either atoms or measure moments, not both")
            object.__setattr__(self, "measure_moments", tuple(rat(m) for m in self.measure_moments))
        if self.s2 < 0:
            raise BadParameter("Gaussian variance must be nonnegative")
        if any(w < 0 for _, w in atoms):
            raise BadParameter("Lévy measure weights must be nonnegative")

    def measure_moment(self, n: int) -> Fraction:
        """``int x^n dnu`` for ``n >= 2``."""
        if self.measure_moments is not None:
            idx = n - 2
            if idx >= len(self.measure_moments):
                raise BadParameter(f"measure moment m_{n} not supplied")
            return self.measure_moments[idx]
        return sum((w * x**n for x, w in self.atoms), Fraction(0))

    def cumulants(self, order: int) -> list:
        """``(c0, s2 + m_2, m_3, ..., m_N)`` as rationals, index 0 unused (set to 0)."""
        out = [Fraction(0)]
        for n in range(1, order + 1):
            if n == 1:
                out.append(self.c0)
            elif n == 2:
                out.append(self.s2 + self.measure_moment(2))
            else:
                out.append(self.measure_moment(n))
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "LevySpec":
        measure = data.get("measure", {}) or {}
        return cls(
            c0=rat(str(data.get("c0", "0"))),
            s2=rat(str(data.get("s2", "0"))),
            atoms=tuple((str(x), str(w)) for x, w in measure.get("atoms", [])),
            measure_moments=(
                tuple(str(m) for m in measure["moments"]) if "moments" in measure else None
            ),
        )

    def to_json(self) -> dict:
        measure = (
            {"moments": [str(m) for m in self.measure_moments]}
            if self.measure_moments is not None
            else {"atoms": [[str(x), str(w)] for x, w in self.atoms]}
        )
        return {"c0": str(self.c0), "s2": str(self.s2), "measure": measure}


def drift_from_mean(m, atoms: Sequence) -> Fraction:
    """``c0 = m + sum_{|x_i| >= 1} w_i x_i`` for a discrete Lévy measure."""
    return rat(m) + sum((rat(w) * rat(x) for x, w in atoms if abs(rat(x)) >= 1), Fraction(0))


@dataclass(frozen=True)
class ProcessUmbra:
    alpha: U.Umbra
    label: str
    params: dict = field(default_factory=dict, hash=False, compare=False)
    # closed-form cumulants of alpha when known; index 0 unused
    known_cumulants: tuple | None = field(default=None, compare=False)
    # closed-form mgf of X_1 as a series builder, used for the gf cross-check
    mgf: object = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.alpha.order

    def cumulants(self) -> list:
        if self.known_cumulants is not None:
            return [as_poly(c) for c in self.known_cumulants]
        return list(U.cumulant(self.alpha).moments)

    def at(self, t) -> U.Umbra:
        """``t . alpha``."""
        return U.dot_poly(t, self.alpha)


def gamma_umbra(spec: LevySpec, order: int) -> U.Umbra:
    """The umbra of the Lévy measure: ``m_1 = 0``, ``m_n = int x^n dnu``."""
    return U.Umbra((ONE, ZERO) + tuple(Poly.const(spec.measure_moment(n)) for n in range(2, order + 1)))


def gaussian_part(s2, order: int) -> U.Umbra:
    """``s delta`` written through its only nonzero moment ``s^2`` (``s`` may be irrational)."""
    s2 = as_poly(s2)
    return U.Umbra(tuple([ONE, ZERO, s2] + [ZERO] * (order - 2))[: order + 1])


def from_triplet(spec: LevySpec, order: int = DEFAULT_ORDER) -> ProcessUmbra:
    """``beta . [c0 chi  +.  s delta  +.  gamma]``."""
    chi = U.special("chi", order)
    inner = U.disjoint_sum(
        U.scale(spec.c0, chi),
        U.disjoint_sum(gaussian_part(spec.s2, order), gamma_umbra(spec, order)),
    )
    alpha = U.partition(inner)
    cums = spec.cumulants(order)
    if U.cumulant(alpha).moments[1:] != tuple(Poly.const(c) for c in cums[1:]):
        raise AssertionError("cumulants of the triplet umbra disagree with the triplet")

    def mgf(N):
        k = [Fraction(0)] + [c / factorial(n) for n, c in enumerate(cums) if n >= 1][:N]
        return series_exp(Series.from_coeffs(k, N))

    return ProcessUmbra(alpha, "triplet", {"spec": spec.to_json()}, tuple(cums), mgf)


def load_spec(path) -> tuple:
    """Read a JSON triplet config; returns ``(spec, order or None)``."""
    data = json.loads(Path(path).read_text())
    return LevySpec.from_json(data), data.get("order")


# named processes ------------------------------------------------------------

PROCESS_NAMES = (
    "brownian",
    "poisson",
    "gamma",
    "pascal",
    "uniform_walk",
    "bernoulli_half_walk",
    "bernoulli_walk",
)


def _param(params: Mapping, *names, default=None):
    for n in names:
        if n in params:
            return rat(params[n]) if not isinstance(params[n], Fraction) else params[n]
    if default is None:
        raise BadParameter(f"missing parameter {names[0]!r}")
    return rat(default)


def _prob(params):
    p = _param(params, "p")
    if not 0 < p < 1:
        raise BadParameter("p must lie in (0, 1)")
    return p


def brownian(s2=1, order: int = DEFAULT_ORDER) -> ProcessUmbra:
    s2 = rat(s2)
    if s2 < 0:
        raise BadParameter("variance must be nonnegative")
    alpha = U.partition(gaussian_part(s2, order))
    cums = [0, 0, s2] + [0] * (order - 2)
    return ProcessUmbra(
        alpha, "brownian", {"s2": s2}, tuple(cums[: order + 1]),
        lambda N: series_exp(Series.from_coeffs([0, 0, s2 / 2], N)),
    )


def poisson(lam, order: int = DEFAULT_ORDER) -> ProcessUmbra:
    lam = rat(lam)
    if lam <= 0:
        raise BadParameter("lambda must be positive")
    alpha = U.dot_poly(lam, U.special("bell", order))
    return ProcessUmbra(
        alpha, "poisson", {"lambda": lam}, tuple([0] + [lam] * order),
        lambda N: series_exp((Series.exp_z(N) - 1) * lam),
    )


def gamma(lam=1, order: int = DEFAULT_ORDER) -> ProcessUmbra:
    lam = rat(lam)
    if lam <= 0:
        raise BadParameter("lambda must be positive")
    alpha = U.dot_poly(lam, U.special("ubar", order))
    cums = [0] + [lam * factorial(n - 1) for n in range(1, order + 1)]
    return ProcessUmbra(
        alpha, "gamma", {"lambda": lam}, tuple(cums),
        lambda N: series_pow(Series.from_coeffs([1, -1], N), -lam),
    )


def pascal(p, order: int = DEFAULT_ORDER) -> ProcessUmbra:
    """``ubar . d . beta`` with ``d = p / q``, evaluated right to left."""
    p = rat(p)
    if not 0 < p < 1:
        raise BadParameter("p must lie in (0, 1)")
    q = 1 - p
    d = p / q
    alpha = U.dot_umbra(U.special("ubar", order), U.dot_poly(d, U.special("bell", order)))
    return ProcessUmbra(
        alpha, "pascal", {"p": p, "d": d}, None,
        lambda N: Series.constant(q, N) / (Series.constant(1, N) - Series.exp_z(N) * p),
    )


def uniform_walk(order: int = DEFAULT_ORDER) -> ProcessUmbra:
    """Increments uniform on [0, 1]: the umbra ``-1 . iota``."""
    alpha = U.inverse(U.special("bernoulli", order))
    return ProcessUmbra(
        alpha, "uniform_walk", {}, None,
        lambda N: (Series.exp_z(N + 1) - 1).shift_down(1),
    )


def bernoulli_half_walk(order: int = DEFAULT_ORDER) -> ProcessUmbra:
    """Bernoulli(1/2) increments: ``1/2 (-1 . eta + u)``."""
    eta, u = U.special("euler", order), U.special("u", order)
    alpha = U.scale(Fraction(1, 2), U.add(U.inverse(eta), u))
    return ProcessUmbra(
        alpha, "bernoulli_half_walk", {"p": Fraction(1, 2)}, None,
        lambda N: (Series.exp_z(N) + 1) * Fraction(1, 2),
    )


def bernoulli_mu(p, order: int) -> U.Umbra:
    """``mu = -1 . chi . p . beta``, generating function ``1 / (p e^z + 1 - p)``."""
    return U.inverse(U.dot_umbra(U.special("chi", order), U.dot_poly(p, U.special("bell", order))))


def bernoulli_walk(p, order: int = DEFAULT_ORDER) -> ProcessUmbra:
    """Bernoulli(p) increments: ``-1 . mu``."""
    p = rat(p)
    if not 0 < p < 1:
        raise BadParameter("p must lie in (0, 1)")
    alpha = U.inverse(bernoulli_mu(p, order))
    return ProcessUmbra(
        alpha, "bernoulli_walk", {"p": p}, None,
        lambda N: Series.exp_z(N) * p + (1 - p),
    )


def named_process(name: str, params: Mapping | None = None, order: int = DEFAULT_ORDER) -> ProcessUmbra:
    params = dict(params or {})
    key = name.lower().replace("-", "_")
    if key == "brownian":
        if "s" in params:
            s2 = _param(params, "s") ** 2
        else:
            s2 = _param(params, "s2", default=1)
        return brownian(s2, order)
    if key == "poisson":
        return poisson(_param(params, "lambda", "lam"), order)
    if key == "gamma":
        return gamma(_param(params, "lambda", "lam", default=1), order)
    if key == "pascal":
        return pascal(_prob(params), order)
    if key in ("uniform_walk", "uniform"):
        return uniform_walk(order)
    if key in ("bernoulli_half_walk", "euler_walk"):
        return bernoulli_half_walk(order)
    if key in ("bernoulli_walk", "bernoulli"):
        return bernoulli_walk(_prob(params), order)
    raise BadParameter(f"unknown process {name!r}; expected one of {PROCESS_NAMES}")


def sum_process(p1: ProcessUmbra, p2: ProcessUmbra) -> ProcessUmbra:
    """Independent sum ``W + Z``, carried by ``alpha + gamma``."""
    alpha = U.add(p1.alpha, p2.alpha)
    cums = None
    if p1.known_cumulants is not None and p2.known_cumulants is not None:
        cums = tuple(as_poly(a) + as_poly(b) for a, b in zip(p1.known_cumulants, p2.known_cumulants))
    mgf = None
    if p1.mgf is not None and p2.mgf is not None:
        mgf = lambda N: p1.mgf(N) * p2.mgf(N)  # noqa: E731
    return ProcessUmbra(alpha, f"{p1.label}+{p2.label}", {}, cums, mgf)


def zero_process(order: int = DEFAULT_ORDER) -> ProcessUmbra:
    return ProcessUmbra(
        U.special("eps", order), "zero", {}, tuple([0] * (order + 1)),
        lambda N: Series.constant(1, N),
    )


def closed_form_power(proc: ProcessUmbra, t="t") -> Series:
    """``mgf(z)^t`` with ``t`` symbolic, straight from the closed form."""
    if proc.mgf is None:
        raise ValueError(f"no closed-form mgf for {proc.label}")
    return series_pow(proc.mgf(proc.order), t)
