"""Stopping-value schedules that drive sampled solver runs.

A solver's run length is controlled by a stopping value: an iteration
count (growing schedule), a tolerance (shrinking schedule), or a single
closed-form run.  ``schedule_next`` inspects the points sampled so far
and either yields the next stopping value or declares the run finished
with a terminal reason.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError

ITERATION = "iteration"
TOLERANCE = "tolerance"
RUN_ONCE = "run_once"

# Relative best-objective improvement below this over the trailing window
# means the curve has flattened and the schedule stops.
CONVERGENCE_RTOL = 1e-10
CONVERGENCE_WINDOW = 5


@dataclass(frozen=True)
class StoppingStrategy:
    kind: str
    growth: float = 1.5
    tol_start: float = 1e-1
    tol_floor: float = 1e-15

    def __post_init__(self):
        if self.kind not in (ITERATION, TOLERANCE, RUN_ONCE):
            raise ConfigError(f"unknown stopping strategy kind {self.kind!r}")
        if self.growth <= 0:
            raise ConfigError("growth must be positive")
        if self.tol_start <= 0 or self.tol_floor <= 0:
            raise ConfigError("tolerances must be positive")


@dataclass(frozen=True)
class RunBudget:
    max_run_time_s: float = 100.0
    max_points: int = 50


def iteration_schedule(growth: float, n: int) -> list[int]:
    """First ``n`` iteration stop values: 1 then max(prev+1, round(growth*prev)).

    With the default growth 1.5 this yields 1, 2, 3, 4, 6, 9, 14, 21, ...
    Strictly increasing positive integers by construction.
    """
    values: list[int] = []
    value = 1
    for _ in range(n):
        values.append(value)
        value = max(value + 1, round(growth * value))
    return values


def tolerance_schedule(strategy: StoppingStrategy, n: int) -> list[float]:
    """First ``n`` tolerance stop values: tol_start * growth**-k, floored.

    The schedule is strictly decreasing and stops early once the floor
    is reached.
    """
    values: list[float] = []
    for k in range(n):
        value = strategy.tol_start * strategy.growth ** (-k)
        if value <= strategy.tol_floor:
            values.append(strategy.tol_floor)
            break
        values.append(value)
    return values


def _best_objective(points, upto: int) -> float:
    return min(p.metrics["objective_value"] for p in points[:upto])


def schedule_next(strategy: StoppingStrategy, history, budget: RunBudget):
    """Decide the next stop value, or a terminal reason, from the history.

    ``history`` is the ordered list of CurvePoints sampled so far (their
    ``metrics`` must carry ``objective_value``).  Returns a pair
    ``(next_value, reason)`` where exactly one element is not None.
    Terminal reasons: ``diverged`` on any non-finite objective,
    ``converged`` when the best objective improved by less than 1e-10
    relative over the last 5 sampled points, ``timeout`` when cumulated
    solver time exceeds the budget, ``max_stop_value`` when the point
    cap or the schedule's natural end is reached.
    """
    k = len(history)
    for point in history:
        if not math.isfinite(point.metrics["objective_value"]):
            return None, "diverged"
    if k > CONVERGENCE_WINDOW:
        prev_best = _best_objective(history, k - CONVERGENCE_WINDOW)
        cur_best = _best_objective(history, k)
        scale = max(abs(prev_best), abs(cur_best), 1e-300)
        if (prev_best - cur_best) / scale < CONVERGENCE_RTOL:
            return None, "converged"
    if sum(point.time_s for point in history) > budget.max_run_time_s:
        return None, "timeout"
    if k >= budget.max_points:
        return None, "max_stop_value"

    if strategy.kind == RUN_ONCE:
        if k == 0:
            return 1, None
        return None, "max_stop_value"
    if strategy.kind == ITERATION:
        return iteration_schedule(strategy.growth, k + 1)[-1], None
    # tolerance: strictly decreasing, stop after the floor was emitted
    values = tolerance_schedule(strategy, k + 1)
    if len(values) <= k:
        return None, "max_stop_value"
    return values[k], None
