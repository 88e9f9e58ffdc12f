"""1-D total variation: exact prox, finite differences, synthesis lift.

The prox is computed by the direct taut-string algorithm: one forward
pass grows a candidate segment while the running sums stay inside a
tube of half-width tau, and emits the segment mean whenever the tube is
violated.  Exact up to floating point, O(p^2) worst case and O(p) in
practice.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from ..errors import DataError


def prox_tv1d(y_vec: np.ndarray, tau: float) -> np.ndarray:
    """Exact minimizer of 0.5 ||x - y||^2 + tau * sum |x_{i+1} - x_i|."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    y = np.asarray(y_vec, dtype=np.float64)
    if y.size == 0:
        raise ValueError("prox_tv1d needs a non-empty input")
    n = y.size
    if tau == 0.0 or n == 1:
        return y.copy()
    x = np.empty(n)
    k = k0 = km = kp = 0
    vmin = y[0] - tau
    vmax = y[0] + tau
    umin = tau
    umax = -tau
    while True:
        if k == n - 1:
            if umin < 0.0:
                x[k0:km + 1] = vmin
                k = k0 = km = km + 1
                vmin = y[k]
                umin = tau
                umax = y[k] + tau - vmax
                continue
            if umax > 0.0:
                x[k0:kp + 1] = vmax
                k = k0 = kp = kp + 1
                vmax = y[k]
                umax = -tau
                umin = y[k] - tau - vmin
                continue
            x[k0:n] = vmin + umin / (k - k0 + 1)
            return x
        if y[k + 1] + umin < vmin - tau:
            # lower tube violated: the segment must jump down after km
            x[k0:km + 1] = vmin
            k = k0 = km = kp = km + 1
            vmin = y[k]
            vmax = y[k] + 2.0 * tau
            umin = tau
            umax = -tau
        elif y[k + 1] + umax > vmax + tau:
            # upper tube violated: jump up after kp
            x[k0:kp + 1] = vmax
            k = k0 = km = kp = kp + 1
            vmin = y[k] - 2.0 * tau
            vmax = y[k]
            umin = tau
            umax = -tau
        else:
            k += 1
            umin += y[k] - vmin
            umax += y[k] - vmax
            if umin >= tau:
                vmin += (umin - tau) / (k - k0 + 1)
                umin = tau
                km = k
            if umax <= -tau:
                vmax += (umax + tau) / (k - k0 + 1)
                umax = -tau
                kp = k


def diff_apply(theta: np.ndarray) -> np.ndarray:
    """Finite differences (D theta)_k = theta_{k+1} - theta_k."""
    theta = np.asarray(theta, dtype=np.float64)
    if theta.size < 2:
        raise ValueError("diff_apply needs at least two coordinates")
    return np.diff(theta)


def diff_adjoint(u: np.ndarray) -> np.ndarray:
    """Adjoint of diff_apply: (D^T u)_i = u_{i-1} - u_i with boundary zeros."""
    u = np.asarray(u, dtype=np.float64)
    out = np.zeros(u.size + 1)
    out[:-1] -= u
    out[1:] += u
    return out


def synthesis_lift(c: float, z: np.ndarray) -> np.ndarray:
    """Invert diff_apply: theta_1 = c, theta_i = c + sum_{k<i} z_k."""
    z = np.asarray(z, dtype=np.float64)
    theta = np.empty(z.size + 1)
    theta[0] = c
    theta[1:] = c + np.cumsum(z)
    return theta


class SynthesisProblem:
    """TV-regularized least squares rewritten as a weighted lasso.

    Variables are (c, z) with theta = c * ones + cumulative sum of z, so
    the augmented design is [X 1 | X Lift] and only the z block carries
    the l1 weight.  Valid for the l2 data fit only.
    """

    def __init__(self, design: np.ndarray, lam: float):
        design = np.asarray(design, dtype=np.float64)
        n, p = design.shape
        # suffix column sums: (X Lift)_{. k} = sum of columns k+1 .. p-1
        suffix = np.cumsum(design[:, ::-1], axis=1)[:, ::-1]
        self.design = np.concatenate([suffix[:, :1], suffix[:, 1:]], axis=1)
        self.weights = np.full(p, lam)
        self.weights[0] = 0.0
        self.lam = lam
        self.p = p

    def map_back(self, v: np.ndarray) -> np.ndarray:
        return synthesis_lift(float(v[0]), v[1:])


def synthesis_problem(spec, dataset) -> SynthesisProblem:
    """Build the augmented weighted-lasso equivalent of an l2-fit TV problem."""
    if spec.kind != "tv1d":
        raise ValueError("synthesis formulation applies to tv1d only")
    if spec.fit != "l2":
        raise DataError("synthesis formulation supports the l2 data fit only")
    X = dataset.X.toarray() if sp.issparse(dataset.X) else dataset.X
    return SynthesisProblem(X, spec.lam)
