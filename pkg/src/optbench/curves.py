"""Convergence curves and group-level post-processing.

A curve is the sequence of (stop value, solver time, metrics) points
recorded for one solver on one problem variant.  After all curves of a
(objective variant, dataset variant) group are collected, the group
optimum is estimated as the best sampled objective value and each point
is annotated with its suboptimality relative to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import BenchError
from .runkey import RunKey

TERMINAL_REASONS = ("converged", "max_stop_value", "timeout", "diverged", "error")

# Suboptimality floor so that exact optima survive log-scale plotting.
SUBOPT_FLOOR = 1e-300


@dataclass(frozen=True)
class CurvePoint:
    stop_value: int | float
    time_s: float
    metrics: dict[str, float]

    def __post_init__(self):
        if self.time_s < 0:
            raise ValueError("time_s must be non-negative")
        if "objective_value" not in self.metrics:
            raise ValueError('metrics must contain "objective_value"')


@dataclass(frozen=True)
class Curve:
    key: RunKey
    points: list[CurvePoint]
    terminal_reason: str

    def __post_init__(self):
        if self.terminal_reason not in TERMINAL_REASONS:
            raise ValueError(f"unknown terminal reason {self.terminal_reason!r}")


@dataclass(frozen=True)
class OptimumEstimate:
    """Best sampled objective value within a group and, when the winning
    iterate was produced in this process, the iterate itself."""

    f_star: float
    theta_star: np.ndarray | None
    source_key: RunKey
    stop_value: int | float = 0


@dataclass
class ThetaArchive:
    """In-memory map from (run digest, point index) to the stored iterate.

    Iterates are kept only long enough to estimate the group optimum and
    are never persisted; curves resumed from the store have no entry.
    """

    thetas: dict[tuple[str, int], np.ndarray] = field(default_factory=dict)

    def put(self, key: RunKey, index: int, theta: np.ndarray) -> None:
        self.thetas[(key.digest, index)] = theta

    def get(self, key: RunKey, index: int) -> np.ndarray | None:
        return self.thetas.get((key.digest, index))


def estimate_optimum(curves: list[Curve], theta_archive: ThetaArchive | None = None) -> OptimumEstimate:
    """Best objective value (and its iterate, when available) over a group.

    All curves must belong to the same (objective variant, dataset
    variant) group.  Ties are broken by the first point encountered in
    deterministic iteration order (curves in list order, points in
    curve order).
    """
    if not curves:
        raise BenchError("cannot estimate an optimum from an empty group")
    best_value = math.inf
    best_key = None
    best_stop: int | float = 0
    best_index = -1
    for curve in curves:
        for index, point in enumerate(curve.points):
            value = point.metrics["objective_value"]
            if math.isfinite(value) and value < best_value:
                best_value = value
                best_key = curve.key
                best_stop = point.stop_value
                best_index = index
    if best_key is None:
        raise BenchError("all points diverged; no optimum available")
    theta = theta_archive.get(best_key, best_index) if theta_archive is not None else None
    return OptimumEstimate(f_star=best_value, theta_star=theta, source_key=best_key, stop_value=best_stop)


def annotate_suboptimality(curves: list[Curve], optimum: OptimumEstimate) -> list[Curve]:
    """Add the ``suboptimality`` metric f(theta) - f_star to every point.

    Values are clamped below at 1e-300 so exact optima remain plottable
    on a log scale; diverged points keep suboptimality +inf.
    """
    annotated = []
    for curve in curves:
        points = []
        for point in curve.points:
            value = point.metrics["objective_value"]
            gap = value - optimum.f_star
            if math.isfinite(gap):
                gap = max(gap, SUBOPT_FLOOR)
            metrics = dict(point.metrics)
            metrics["suboptimality"] = gap
            points.append(replace(point, metrics=metrics))
        annotated.append(replace(curve, points=points))
    return annotated
