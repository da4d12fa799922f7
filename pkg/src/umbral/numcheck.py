"""Monte Carlo cross-check of the symbolic time-space harmonic polynomials.

Floating point lives only here.  Increments are drawn with numpy's PCG64
generator; Gamma increments use shape additivity (shape ``lambda dt``) and
Pascal increments use numpy's negative binomial with a real-valued count.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import levy
from .polyring import rat
from .tsh import tsh_polys

WALKS = {"uniform_walk", "bernoulli_half_walk", "bernoulli_walk"}
SE_TOLERANCE = 5.0


@dataclass
class SimConfig:
    process: str
    params: dict = field(default_factory=dict)
    t: float = 1.0
    steps: int = 4
    paths: int = 100_000
    seed: int = 42
    # fraction of the horizon where the conditional check samples X_s
    s_fraction: float = 0.5

    def __post_init__(self):
        if self.paths < 1:
            raise ValueError("path count must be at least 1")
        if self.steps < 1:
            raise ValueError("step count must be at least 1")
        if self.process in WALKS:
            if float(self.t) != int(self.t):
                raise ValueError("random walks need an integer horizon")
            self.steps = int(self.t)

    def float_params(self) -> dict:
        return {k: float(rat(v) if not isinstance(v, float) else v) for k, v in self.params.items()}


@dataclass
class Ensemble:
    """Values of ``X`` at the checkpoint ``s`` and at the horizon ``t``."""

    s: float
    t: float
    x_s: np.ndarray
    x_t: np.ndarray


def _sampler(cfg: SimConfig, rng: np.random.Generator):
    p = cfg.float_params()
    name = cfg.process
    if name == "brownian":
        s2 = p["s"] ** 2 if "s" in p else p.get("s2", 1.0)
        return lambda dt, n: rng.normal(0.0, math.sqrt(s2 * dt), n)
    if name == "poisson":
        lam = p.get("lambda", p.get("lam"))
        return lambda dt, n: rng.poisson(lam * dt, n).astype(float)
    if name == "gamma":
        lam = p.get("lambda", p.get("lam", 1.0))
        return lambda dt, n: rng.gamma(lam * dt, 1.0, n)
    if name == "pascal":
        q = 1.0 - p["p"]
        return lambda dt, n: rng.negative_binomial(dt, q, n).astype(float)
    if name == "uniform_walk":
        return lambda dt, n: rng.random(n)
    if name == "bernoulli_half_walk":
        return lambda dt, n: rng.binomial(1, 0.5, n).astype(float)
    if name == "bernoulli_walk":
        return lambda dt, n: rng.binomial(1, p["p"], n).astype(float)
    raise levy.BadParameter(f"unknown process {name!r}")


def simulate(cfg: SimConfig) -> Ensemble:
    rng = np.random.default_rng(cfg.seed)
    draw = _sampler(cfg, rng)
    horizon = float(cfg.t)
    dt = horizon / cfg.steps
    s_step = max(1, min(cfg.steps - 1, round(cfg.s_fraction * cfg.steps))) if cfg.steps > 1 else 0
    x = np.zeros(cfg.paths)
    x_s = x.copy()
    for k in range(1, cfg.steps + 1):
        x = x + draw(dt, cfg.paths)
        if k == s_step:
            x_s = x.copy()
    return Ensemble(s_step * dt, horizon, x_s, x)


def _zscore(sample: np.ndarray) -> tuple:
    mean = float(sample.mean())
    se = float(sample.std(ddof=1) / math.sqrt(sample.size)) if sample.size > 1 else math.inf
    if se == 0.0:
        return mean, se, 0.0 if abs(mean) < 1e-12 else math.inf
    return mean, se, mean / se


@dataclass
class MCRow:
    k: int
    mean: float
    se: float
    z: float
    cond_mean: float
    cond_z: float
    slope_z: float

    @property
    def passed(self) -> bool:
        return all(abs(v) <= SE_TOLERANCE for v in (self.z, self.cond_z, self.slope_z))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "mean": self.mean,
            "se": self.se,
            "z": self.z,
            "cond_mean": self.cond_mean,
            "cond_z": self.cond_z,
            "slope_z": self.slope_z,
            "passed": self.passed,
        }


@dataclass
class MCReport:
    config: SimConfig
    rows: list
    mean_z: float
    seconds: float
    reruns: int = 0

    @property
    def passed(self) -> bool:
        return abs(self.mean_z) <= SE_TOLERANCE and all(r.passed for r in self.rows)

    def to_json(self) -> dict:
        c = self.config
        return {
            "process": c.process,
            "params": {k: str(v) for k, v in c.params.items()},
            "t": c.t,
            "paths": c.paths,
            "steps": c.steps,
            "seed": c.seed,
            "mean_z": self.mean_z,
            "reruns": self.reruns,
            "seconds": round(self.seconds, 3),
            "passed": self.passed,
            "rows": [r.to_json() for r in self.rows],
        }


def _run(cfg: SimConfig, K: int) -> MCReport:
    start = time.perf_counter()
    order = max(K, 2)
    proc = levy.named_process(cfg.process, cfg.params, order=order)
    tvar = "t"
    Q = tsh_polys(proc, K, t=tvar)
    ens = simulate(cfg)
    mean1 = float(proc.at(1).moments[1].constant_value()) * ens.t
    _, _, mean_z = _zscore(ens.x_t - mean1)
    centred_s = ens.x_s - ens.x_s.mean()
    rows = []
    for k in range(1, K + 1):
        at_t = Q[k].evaluate({"x": ens.x_t, tvar: ens.t})
        at_s = Q[k].evaluate({"x": ens.x_s, tvar: ens.s})
        mean, se, z = _zscore(np.asarray(at_t, dtype=float))
        resid = np.asarray(at_t - at_s, dtype=float)
        cond_mean, _, cond_z = _zscore(resid)
        _, _, slope_z = _zscore(resid * centred_s)
        rows.append(MCRow(k, mean, se, z, cond_mean, cond_z, slope_z))
    return MCReport(cfg, rows, mean_z, time.perf_counter() - start)


def martingale_check(cfg: SimConfig, K: int = 4, rerun: bool = True) -> MCReport:
    """Sample means of ``Q_k(X_t, t)`` and of ``Q_k(X_t, t) - Q_k(X_s, s)`` near 0.

    The conditional part also checks that the residual is uncorrelated with
    ``X_s`` (zero regression slope).  A failure is re-run once with twice the
    paths before it is reported.
    """
    report = _run(cfg, K)
    if not report.passed and rerun:
        doubled = SimConfig(cfg.process, cfg.params, cfg.t, cfg.steps, cfg.paths * 2,
                            cfg.seed + 1, cfg.s_fraction)
        seconds = report.seconds
        report = _run(doubled, K)
        report.seconds += seconds
        report.reruns = 1
    return report
