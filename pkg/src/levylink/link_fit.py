"""First-jump records and the fitted linear link among (lambda, mu, alpha).

Pipeline: simulate a trajectory per parameter triple, record the time and
process value of its first jump, fit a degree-1 interpolant through five
such records in the four variables (lambda, mu, alpha, t), then substitute
the sample means of t and x to collapse the fit into one linear relation
among the three model parameters.

A "jump" is an increment larger than ``threshold_factor`` times the median
absolute increment of the path, a scale-free criterion (rescaling the whole
path leaves the detection unchanged).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import multinterp
from .sde_sim import GridSpec, ModelKind, ModelSpec, Trajectory, simulate
from .streams import RngStream

__all__ = [
    "SampleRow",
    "LinkEquation",
    "CollectResult",
    "detect_first_jump",
    "fit_link",
    "collect_rows",
]

LINK_VARIABLES = ("lambda", "mu", "alpha", "t")


@dataclass(frozen=True)
class SampleRow:
    """One first-jump record: parameters, jump time, process value."""

    lam: float
    mu: float
    alpha: float
    t: float
    x: float

    def __post_init__(self):
        for name in ("lam", "mu", "alpha", "t", "x"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name}={getattr(self, name)!r} must be finite")
        if not 0.0 < self.alpha <= 2.0:
            raise ValueError(f"alpha={self.alpha!r} must lie in (0, 2]")
        if self.t < 0.0:
            raise ValueError(f"t={self.t!r} must be non-negative")


@dataclass(frozen=True)
class LinkEquation:
    """Degree-1 fit and its averaged link form.

    ``coefficients`` are (b1..b5) for (lambda, mu, alpha, t, constant);
    ``rhs`` is x_bar - b5 - b4 * t_bar, giving the link
    b1*lambda + b2*mu + b3*alpha = rhs.
    """

    coefficients: tuple[float, float, float, float, float]
    t_bar: float
    x_bar: float
    rhs: float

    def equation_text(self) -> str:
        b1, b2, b3, _, _ = self.coefficients
        terms = " + ".join(f"({b:.6g})*{v}" for b, v in zip((b1, b2, b3), LINK_VARIABLES))
        return f"{terms} = {self.rhs:.6g}"


@dataclass(frozen=True)
class CollectResult:
    """Rows collected from simulations plus the triples that showed no jump."""

    rows: list[SampleRow]
    excluded: list[tuple[float, float, float]] = field(default_factory=list)


def detect_first_jump(traj: Trajectory, threshold_factor: float = 10.0):
    """Earliest (time, value) whose increment qualifies as a jump, else None.

    Grid point k >= 1 qualifies when |X[k] - X[k-1]| exceeds
    ``threshold_factor`` times the median absolute increment of the whole
    path (median over finite increments; an infinite increment therefore
    always qualifies).  If the median is zero the threshold degenerates and
    any strictly positive increment counts.
    """
    if not (math.isfinite(threshold_factor) and threshold_factor > 0.0):
        raise ValueError(f"threshold_factor={threshold_factor!r} must be a positive real")
    values = np.asarray(traj.values, dtype=float)
    if values.size < 2:
        raise ValueError("trajectory needs at least two points")
    # inf - inf inside an overflowed path is an expected NaN, not an error.
    with np.errstate(invalid="ignore"):
        diffs = np.abs(np.diff(values))
    finite = diffs[np.isfinite(diffs)]
    median = float(np.median(finite)) if finite.size else 0.0
    threshold = threshold_factor * median if median > 0.0 else 0.0
    hits = np.flatnonzero(diffs > threshold)
    if hits.size == 0:
        return None
    k = int(hits[0]) + 1
    return float(traj.times[k]), float(values[k])


def fit_link(rows: Sequence[SampleRow]) -> LinkEquation:
    """Fit the degree-1 link through exactly five first-jump records."""
    if len(rows) != 5:
        raise ValueError(f"link fit needs exactly 5 rows, got {len(rows)}")
    nodes = [(r.lam, r.mu, r.alpha, r.t) for r in rows]
    responses = [r.x for r in rows]
    interp = multinterp.fit(nodes, responses, n=1, m=4)

    index = {e: i for i, e in enumerate(interp.exponents)}
    coeff = interp.coefficients
    b1 = float(coeff[index[(1, 0, 0, 0)]])
    b2 = float(coeff[index[(0, 1, 0, 0)]])
    b3 = float(coeff[index[(0, 0, 1, 0)]])
    b4 = float(coeff[index[(0, 0, 0, 1)]])
    b5 = float(coeff[index[(0, 0, 0, 0)]])

    t_bar = float(np.mean([r.t for r in rows]))
    x_bar = float(np.mean([r.x for r in rows]))
    rhs = x_bar - b5 - b4 * t_bar
    return LinkEquation(coefficients=(b1, b2, b3, b4, b5), t_bar=t_bar, x_bar=x_bar, rhs=rhs)


def collect_rows(
    param_grid: Iterable[tuple[float, float, float]],
    model_kind: ModelKind,
    grid: GridSpec,
    threshold_factor: float,
    stream: RngStream,
    x0: float = 1.0,
) -> CollectResult:
    """One SampleRow per (lambda, mu, alpha) triple whose path shows a jump.

    Triple i simulates on the substream ``stream_id + i``.  Triples with no
    qualifying jump, and the rare paths whose first jump lands on a
    non-finite value, go to the exclusion list instead.
    """
    triples = list(param_grid)
    if not triples:
        raise ValueError("parameter grid must be nonempty")
    rows: list[SampleRow] = []
    excluded: list[tuple[float, float, float]] = []
    for i, (lam, mu, alpha) in enumerate(triples):
        model = ModelSpec(kind=model_kind, lam=lam, mu=mu, alpha=alpha, x0=x0)
        traj = simulate(model, grid, stream.substream(i))
        hit = detect_first_jump(traj, threshold_factor)
        if hit is None or not math.isfinite(hit[1]):
            excluded.append((lam, mu, alpha))
        else:
            rows.append(SampleRow(lam=lam, mu=mu, alpha=alpha, t=hit[0], x=hit[1]))
    return CollectResult(rows=rows, excluded=excluded)
