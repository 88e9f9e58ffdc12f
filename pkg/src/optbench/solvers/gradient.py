"""Full-gradient descent, plain and Nesterov-accelerated.

Smooth objectives only (ridge, l2-logistic).  The step is 1/L with
L = ||X||^2 * fit curvature + lambda; an unregularized intercept is an
extra coordinate with a unit column, folded into L through the
augmented design.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import CompatibilityError
from ..problems import Iterate, smooth_lipschitz_factor
from .common import BoundProblem


def _lipschitz(problem: BoundProblem) -> float:
    spec = problem.spec
    base = problem.spectral_sq_with_ones if spec.fit_intercept else problem.spectral_sq
    return base * smooth_lipschitz_factor(spec) + spec.lam


def run_gradient(problem: BoundProblem, params: dict, n_iter: int, seed=None) -> Iterate:
    spec = problem.spec
    if spec.kind not in ("ridge", "logreg_l2"):
        raise CompatibilityError(f"gradient descent needs a smooth objective, got {spec.kind}")
    step = 1.0 / _lipschitz(problem)
    accelerate = params.get("acceleration", "none") == "nesterov"
    with_intercept = spec.fit_intercept

    theta = np.zeros(problem.p)
    b = 0.0
    if not accelerate:
        for _ in range(n_iter):
            grad, grad_b = problem.grad(theta, b if with_intercept else None)
            theta = theta - step * grad
            if with_intercept:
                b -= step * grad_b
        return Iterate(theta, b if with_intercept else None)

    # Nesterov momentum: t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2
    t = 1.0
    look = theta.copy()
    look_b = 0.0
    for _ in range(n_iter):
        grad, grad_b = problem.grad(look, look_b if with_intercept else None)
        theta_new = look - step * grad
        b_new = look_b - step * grad_b if with_intercept else 0.0
        t_new = (1.0 + math.sqrt(1.0 + 4.0 * t * t)) / 2.0
        beta = (t - 1.0) / t_new
        look = theta_new + beta * (theta_new - theta)
        if with_intercept:
            look_b = b_new + beta * (b_new - b)
        theta, b, t = theta_new, b_new, t_new
    return Iterate(theta, b if with_intercept else None)
