"""Euler simulation of stable-noise SDEs with closed-form degenerate oracles.

Two models share one explicit Euler-Maruyama stepper with left-point
coefficient evaluation:

  OU    X[k+1] = X[k] - lam * X[k] * dt + mu * dL[k]
  GLM   X[k+1] = X[k] * (1 + lam * dt + mu * dB[k] + mu * dL[k])

where dB[k] = sqrt(dt) * N[k] and dL[k] = dt**(1/alpha) * S[k] for standard
normal N and standard symmetric stable S.  One volatility knob mu scales
both the Brownian and the jump term of the GLM.

Noise is drawn up front per path: OU consumes n jump increments; GLM
consumes n Brownian normals first, then n unit-scale jump increments (none
when jumps are suppressed).  Heavy tails make float overflow a legitimate
outcome: non-finite values are propagated unclamped and flagged on the
trajectory.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .noise_stats import NoiseSpec, increments
from .stable_rng import StableParams, validate
from .streams import RngStream

__all__ = [
    "ModelKind",
    "ModelSpec",
    "GridSpec",
    "Trajectory",
    "simulate",
    "ou_exact_deterministic",
    "glm_exact_no_jump",
]


class ModelKind(enum.Enum):
    OU = "ou"
    GLM = "glm"


@dataclass(frozen=True)
class ModelSpec:
    """Which SDE to run and its coefficients.

    ``lam`` is the OU mean-reversion rate or the GLM drift, ``mu`` the one
    volatility knob, ``alpha`` the stability index of the driving noise and
    ``x0`` the initial value.  ``with_jumps=False`` suppresses the GLM jump
    stream (amplitude zero, nothing drawn) for Brownian-only runs.
    """

    kind: ModelKind
    lam: float
    mu: float
    alpha: float
    x0: float
    with_jumps: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam > 0.0):
            raise ValueError(f"lam={self.lam!r} must be a positive real")
        if not (math.isfinite(self.mu) and self.mu >= 0.0):
            raise ValueError(f"mu={self.mu!r} must be a non-negative real")
        validate(StableParams(alpha=self.alpha))
        if not math.isfinite(self.x0):
            raise ValueError(f"x0={self.x0!r} must be finite")


@dataclass(frozen=True)
class GridSpec:
    """Uniform time grid on [0, t_end] with n_steps steps."""

    t_end: float
    n_steps: int

    def __post_init__(self):
        if not (math.isfinite(self.t_end) and self.t_end > 0.0):
            raise ValueError(f"t_end={self.t_end!r} must be a positive real")
        if self.n_steps < 1:
            raise ValueError(f"n_steps={self.n_steps} must be a positive integer")

    @property
    def dt(self) -> float:
        return self.t_end / self.n_steps

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_end, self.n_steps + 1)


@dataclass(frozen=True)
class Trajectory:
    """One simulated sample path on a uniform grid.

    ``overflowed`` marks any non-finite value along the path.
    ``factor_breach_step`` records the first step index k, if any, whose GLM
    multiplicative factor was <= -1 (the transition X[k] -> X[k+1]); it is
    None for OU paths and for paths whose factors all stayed above -1.
    """

    times: np.ndarray
    values: np.ndarray
    model: ModelSpec
    stream_key: tuple[int, int]
    overflowed: bool
    factor_breach_step: int | None


def simulate(model: ModelSpec, grid: GridSpec, stream: RngStream) -> Trajectory:
    """Run the explicit Euler scheme for ``model`` on ``grid``.

    Reproducible: identical (model, grid, stream key) give a bit-identical
    trajectory within one build.  Paths are independent across distinct
    stream ids.
    """
    n = grid.n_steps
    dt = grid.dt
    lam_dt = model.lam * dt
    out = [0.0] * (n + 1)
    out[0] = x = float(model.x0)
    breach = None

    if model.kind is ModelKind.OU:
        shocks = increments(NoiseSpec(model.alpha, model.mu), dt, stream, n).tolist()
        keep = 1.0 - lam_dt
        for k in range(n):
            x = keep * x + shocks[k]
            out[k + 1] = x
    else:
        brownian = (model.mu * math.sqrt(dt)) * stream.normals(n)
        if model.with_jumps:
            jumps = model.mu * increments(NoiseSpec(model.alpha, 1.0), dt, stream, n)
        else:
            jumps = np.zeros(n)
        bw = brownian.tolist()
        jw = jumps.tolist()
        base = 1.0 + lam_dt
        for k in range(n):
            factor = base + bw[k] + jw[k]
            if breach is None and factor <= -1.0:
                breach = k
            x = factor * x
            out[k + 1] = x

    values = np.asarray(out)
    return Trajectory(
        times=grid.times(),
        values=values,
        model=model,
        stream_key=stream.key,
        overflowed=not bool(np.isfinite(values).all()),
        factor_breach_step=breach,
    )


def ou_exact_deterministic(lam: float, x0: float, t: float) -> float:
    """Noise-free OU endpoint exp(-lam * t) * x0."""
    if t < 0.0:
        raise ValueError(f"t={t!r} must be non-negative")
    return math.exp(-lam * t) * x0


def glm_exact_no_jump(lam: float, mu: float, x0: float, t: float, brownian_endpoint: float) -> float:
    """Jump-free GLM endpoint x0 * exp((lam - mu**2 / 2) * t + mu * B_t)."""
    if t < 0.0:
        raise ValueError(f"t={t!r} must be non-negative")
    return x0 * math.exp((lam - 0.5 * mu * mu) * t + mu * brownian_endpoint)
