"""Objective definitions, smooth gradients, lambda_max, and metrics.

Six problem kinds are supported: ridge and l2-logistic (smooth), lasso
and l1-logistic (l1-penalized), MCP (non-convex penalty) and 1-D total
variation (analysis penalty, l2 or Huber fit).  Regularization may be
given directly or as a fraction of the kind's lambda_max, the smallest
strength making the all-zeros vector optimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import expit

from ..errors import ConfigError
from .penalties import huber, mcp_penalty, mcp_stationarity
from .tv import diff_apply

KINDS = ("ridge", "lasso", "logreg_l2", "logreg_l1", "mcp", "tv1d")
SMOOTH_KINDS = ("ridge", "logreg_l2")
L1_KINDS = ("lasso", "logreg_l1")
SUPPORT_KINDS = ("lasso", "logreg_l1", "mcp")


@dataclass(frozen=True)
class ObjectiveSpec:
    kind: str
    lam: float | None = None
    lambda_frac: float | None = None
    gamma: float = 3.0
    mu: float = 1.0
    fit: str = "l2"
    fit_intercept: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown objective kind {self.kind!r}")
        if self.lam is None and self.lambda_frac is None:
            raise ConfigError("either lambda or lambda_frac must be given")
        if self.lam is not None and self.lam < 0:
            raise ConfigError("lambda must be non-negative")
        if self.lambda_frac is not None and self.kind not in ("lasso", "logreg_l1", "mcp"):
            raise ConfigError(f"lambda_frac is undefined for kind {self.kind!r}")
        if self.kind == "mcp" and self.gamma <= 1:
            raise ConfigError("mcp needs gamma > 1")
        if self.fit not in ("l2", "huber"):
            raise ConfigError(f"unknown fit {self.fit!r}")
        if self.fit == "huber" and self.mu <= 0:
            raise ConfigError("huber fit needs mu > 0")
        if self.fit_intercept and self.kind != "logreg_l2":
            raise ConfigError("fit_intercept is only supported for logreg_l2")


@dataclass(frozen=True)
class Iterate:
    theta: np.ndarray
    intercept: float | None = None


def lambda_max(X, y: np.ndarray, kind: str) -> float:
    """Smallest regularization strength with an all-zeros solution.

    ||X^T y||_inf for the lasso, halved for l1-logistic, divided by the
    sample count for MCP.
    """
    if kind not in ("lasso", "logreg_l1", "mcp"):
        raise ValueError(f"lambda_max is undefined for kind {kind!r}")
    correlation = float(np.max(np.abs(X.T @ y))) if X.shape[1] else 0.0
    if kind == "lasso":
        return correlation
    if kind == "logreg_l1":
        return correlation / 2.0
    return correlation / X.shape[0]


def resolve_spec(spec: ObjectiveSpec, dataset) -> ObjectiveSpec:
    """Fill in lambda from lambda_frac once the dataset is known."""
    if spec.lam is not None:
        return spec
    lam = spec.lambda_frac * lambda_max(dataset.X, dataset.y, spec.kind)
    return replace(spec, lam=lam)


def _margins(X, y, theta, intercept):
    z = X @ theta
    if intercept is not None:
        z = z + intercept
    return y * z


def _logistic_loss(margins: np.ndarray) -> float:
    return float(np.sum(np.logaddexp(0.0, -margins)))


def eval_objective(spec: ObjectiveSpec, dataset, iterate: Iterate) -> dict[str, float]:
    """All metrics for one iterate; always includes ``objective_value``.

    Extras depend on the kind: ``grad_norm`` for smooth problems,
    ``support_fraction`` (exact zero count) for sparsity-penalized ones,
    ``stationarity`` for MCP.  A non-finite objective is recorded as
    +inf so divergence is visible downstream.
    """
    if spec.lam is None:
        raise ConfigError("objective spec must be resolved before evaluation")
    theta = np.asarray(iterate.theta, dtype=np.float64)
    X, y = dataset.X, dataset.y
    n, p = X.shape
    if theta.shape != (p,):
        raise ValueError(f"iterate has shape {theta.shape}, expected ({p},)")
    lam = spec.lam
    metrics: dict[str, float] = {}

    if spec.kind == "ridge":
        residual = y - X @ theta
        value = 0.5 * float(residual @ residual) + 0.5 * lam * float(theta @ theta)
    elif spec.kind == "lasso":
        residual = y - X @ theta
        value = 0.5 * float(residual @ residual) + lam * float(np.abs(theta).sum())
    elif spec.kind == "logreg_l2":
        value = _logistic_loss(_margins(X, y, theta, iterate.intercept if spec.fit_intercept else None))
        value += 0.5 * lam * float(theta @ theta)
    elif spec.kind == "logreg_l1":
        value = _logistic_loss(_margins(X, y, theta, None)) + lam * float(np.abs(theta).sum())
    elif spec.kind == "mcp":
        residual = y - X @ theta
        value = float(residual @ residual) / (2.0 * n)
        value += float(np.sum(mcp_penalty(theta, lam, spec.gamma)))
    else:  # tv1d
        z = X @ theta
        if spec.fit == "l2":
            fit_value = 0.5 * float(np.sum((y - z) ** 2))
        else:
            fit_value = float(np.sum(huber(y - z, spec.mu)[0]))
        value = fit_value + lam * float(np.abs(diff_apply(theta)).sum())

    metrics["objective_value"] = value if math.isfinite(value) else math.inf

    if spec.kind in SMOOTH_KINDS:
        grad, grad_b = grad_smooth(spec, dataset, iterate)
        sq = float(grad @ grad)
        if grad_b is not None:
            sq += grad_b * grad_b
        metrics["grad_norm"] = math.sqrt(sq)
    if spec.kind in SUPPORT_KINDS:
        metrics["support_fraction"] = float(np.count_nonzero(theta)) / p
    if spec.kind == "mcp":
        grad, _ = grad_smooth(spec, dataset, iterate)
        metrics["stationarity"] = mcp_stationarity(theta, grad, lam, spec.gamma)
    return metrics


def grad_smooth(spec: ObjectiveSpec, dataset, iterate: Iterate):
    """Gradient of the smooth part, excluding l1/MCP/TV penalties.

    Returns (gradient, intercept_derivative); the second element is None
    unless the spec fits an intercept.
    """
    theta = np.asarray(iterate.theta, dtype=np.float64)
    X, y = dataset.X, dataset.y
    n = X.shape[0]
    if spec.kind == "ridge":
        return X.T @ (X @ theta - y) + spec.lam * theta, None
    if spec.kind == "lasso":
        return X.T @ (X @ theta - y), None
    if spec.kind in ("logreg_l2", "logreg_l1"):
        intercept = iterate.intercept if spec.fit_intercept else None
        margins = _margins(X, y, theta, intercept)
        weights = y * expit(-margins)
        grad = -(X.T @ weights)
        if spec.kind == "logreg_l2":
            grad = grad + spec.lam * theta
        grad_b = -float(weights.sum()) if spec.fit_intercept else None
        return grad, grad_b
    if spec.kind == "mcp":
        return X.T @ (X @ theta - y) / n, None
    # tv1d: gradient of F(y, X theta) with respect to theta
    z = X @ theta
    if spec.fit == "l2":
        dz = z - y
    else:
        dz = -huber(y - z, spec.mu)[1]
    return X.T @ dz, None


def smooth_lipschitz_factor(spec: ObjectiveSpec) -> float:
    """Curvature factor of the data-fit term relative to ||X||^2.

    1 for quadratic fits (ridge, lasso, mcp before its 1/n scaling, both
    TV fits), 1/4 for the logistic loss.
    """
    if spec.kind in ("logreg_l2", "logreg_l1"):
        return 0.25
    return 1.0
