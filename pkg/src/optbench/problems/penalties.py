"""Scalar penalty primitives: soft threshold, MCP, Huber.

All functions accept scalars or numpy arrays and operate elementwise.
"""

from __future__ import annotations

import numpy as np


def soft_threshold(t, tau):
    """Proximal operator of tau |.| : sign(t) max(|t| - tau, 0)."""
    return np.sign(t) * np.maximum(np.abs(t) - tau, 0.0)


def mcp_penalty(t, lam: float, gamma: float):
    """Minimax concave penalty value, elementwise.

    lam |t| - t^2 / (2 gamma) inside |t| <= gamma lam, constant
    gamma lam^2 / 2 beyond; unbiased for large coefficients.
    """
    t = np.asarray(t, dtype=np.float64)
    abs_t = np.abs(t)
    inner = lam * abs_t - t * t / (2.0 * gamma)
    return np.where(abs_t <= gamma * lam, inner, 0.5 * gamma * lam * lam)


def prox_mcp(t, tau: float, lam: float, gamma: float):
    """Proximal operator of tau * mcp_penalty(., lam, gamma).

    Requires gamma > tau so the prox objective stays convex and the
    operator single-valued: zero up to tau*lam, a rescaled soft
    threshold up to gamma*lam, the identity beyond.
    """
    if tau <= 0:
        raise ValueError("tau must be positive")
    if gamma <= tau:
        raise ValueError(f"prox_mcp needs gamma > tau (gamma={gamma}, tau={tau})")
    t = np.asarray(t, dtype=np.float64)
    abs_t = np.abs(t)
    shrunk = np.sign(t) * np.maximum(abs_t - tau * lam, 0.0) / (1.0 - tau / gamma)
    out = np.where(abs_t > gamma * lam, t, shrunk)
    if out.ndim == 0:
        return float(out)
    return out


def mcp_subdiff_dist(theta: np.ndarray, g: np.ndarray, lam: float, gamma: float) -> np.ndarray:
    """Coordinate-wise distance from g to the Frechet subdifferential of MCP.

    The subdifferential at theta_j is [-lam, lam] at zero, the singleton
    lam sign(theta_j) - theta_j / gamma on 0 < |theta_j| <= gamma lam,
    and {0} beyond.
    """
    theta = np.asarray(theta, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    dist = np.empty_like(g)
    at_zero = theta == 0.0
    dist[at_zero] = np.maximum(np.abs(g[at_zero]) - lam, 0.0)
    inner = ~at_zero & (np.abs(theta) <= gamma * lam)
    dist[inner] = np.abs(g[inner] - (lam * np.sign(theta[inner]) - theta[inner] / gamma))
    outer = np.abs(theta) > gamma * lam
    dist[outer] = np.abs(g[outer])
    return dist


def mcp_stationarity(theta: np.ndarray, grad_smooth: np.ndarray, lam: float, gamma: float) -> float:
    """First-order stationarity violation for the MCP problem.

    Euclidean norm of the coordinate-wise distances between the negative
    smooth gradient and the penalty subdifferential; zero exactly at
    stationary points.
    """
    return float(np.linalg.norm(mcp_subdiff_dist(theta, -np.asarray(grad_smooth), lam, gamma)))


def huber(t, mu: float):
    """Huber value and derivative: quadratic core, linear tails.

    Returns (value, derivative) elementwise; value is t^2/2 for
    |t| <= mu and mu |t| - mu^2/2 beyond, so both branches meet at
    mu^2/2.
    """
    if mu <= 0:
        raise ValueError("mu must be positive")
    t = np.asarray(t, dtype=np.float64)
    small = np.abs(t) <= mu
    value = np.where(small, 0.5 * t * t, mu * np.abs(t) - 0.5 * mu * mu)
    deriv = np.where(small, t, mu * np.sign(t))
    if value.ndim == 0:
        return float(value), float(deriv)
    return value, deriv
