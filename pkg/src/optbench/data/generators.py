"""Simulated dataset generators.

All generators draw from ``numpy.random.default_rng(seed)`` with a fixed
draw order, so the same seed always yields a bitwise-identical dataset.
"""

from __future__ import annotations

import numpy as np

from ..errors import DataError
from .dataset import Dataset


def _ar1_design(rng: np.random.Generator, n: int, p: int, rho: float) -> np.ndarray:
    """Rows with Toeplitz correlation E[X_i X_j] = rho^|i-j|, unit variance.

    The AR(1) recursion x_1 = e_1, x_j = rho x_{j-1} + sqrt(1-rho^2) e_j
    realizes this covariance exactly in O(n p).
    """
    eps = rng.standard_normal((n, p))
    if rho == 0.0:
        return eps
    X = np.empty((n, p))
    X[:, 0] = eps[:, 0]
    scale = np.sqrt(1.0 - rho * rho)
    for j in range(1, p):
        X[:, j] = rho * X[:, j - 1] + scale * eps[:, j]
    return X


def _sparse_truth(rng: np.random.Generator, p: int, density: float) -> np.ndarray:
    k = int(round(density * p))
    if k <= 0:
        raise DataError(f"density {density} with p={p} leaves no signal coefficients")
    support = rng.choice(p, size=k, replace=False)
    theta = np.zeros(p)
    theta[support] = rng.standard_normal(k)
    return theta


def _scaled_noise(rng: np.random.Generator, signal: np.ndarray, snr: float) -> np.ndarray:
    noise = rng.standard_normal(signal.shape[0])
    signal_norm = np.linalg.norm(signal)
    if signal_norm == 0.0:
        raise DataError("generated signal is identically zero; cannot match snr")
    return noise * (signal_norm / (snr * np.linalg.norm(noise)))


def _check_gen_args(n: int, p: int, rho: float, density: float, snr: float) -> None:
    if n < 1 or p < 1:
        raise DataError("n and p must be at least 1")
    if not 0.0 <= rho < 1.0:
        raise DataError("rho must lie in [0, 1)")
    if not 0.0 < density <= 1.0:
        raise DataError("density must lie in (0, 1]")
    if snr <= 0:
        raise DataError("snr must be positive")


def gen_regression(n: int, p: int, rho: float = 0.6, density: float = 0.2,
                   snr: float = 3.0, seed: int = 0) -> Dataset:
    """Correlated-design sparse linear regression y = X theta_bar + noise.

    The noise is a standard-normal draw rescaled so that the realized
    ratio ||X theta_bar|| / ||noise|| equals ``snr`` exactly.
    """
    _check_gen_args(n, p, rho, density, snr)
    rng = np.random.default_rng(seed)
    X = _ar1_design(rng, n, p, rho)
    theta = _sparse_truth(rng, p, density)
    signal = X @ theta
    noise = _scaled_noise(rng, signal, snr)
    return Dataset(X=X, y=signal + noise, ground_truth=theta, name="regression",
                   params=dict(n=n, p=p, rho=rho, density=density, snr=snr, seed=seed))


def gen_classification(n: int, p: int, rho: float = 0.6, density: float = 0.2,
                       snr: float = 3.0, seed: int = 0) -> Dataset:
    """Binary labels sign(X theta_bar + noise) in {-1, +1}, sign(0) = +1."""
    _check_gen_args(n, p, rho, density, snr)
    rng = np.random.default_rng(seed)
    X = _ar1_design(rng, n, p, rho)
    theta = _sparse_truth(rng, p, density)
    signal = X @ theta
    noise = _scaled_noise(rng, signal, snr)
    y = np.where(signal + noise >= 0.0, 1.0, -1.0)
    if np.all(y == y[0]):
        raise DataError("degenerate classification: all labels identical")
    return Dataset(X=X, y=y, ground_truth=theta, name="classification",
                   params=dict(n=n, p=p, rho=rho, density=density, snr=snr, seed=seed))


def gen_blocks_tv(n: int, p: int, K: int = 5, noise_std: float = 0.1,
                  seed: int = 0) -> Dataset:
    """Piecewise-constant signal recovered through a Gaussian design.

    A K-sparse jump vector is integrated into a block signal theta_bar
    (so its finite-difference image has exactly K nonzeros), observed as
    y = X theta_bar + noise with i.i.d. standard-normal X.
    """
    if n < 1 or p < 2:
        raise DataError("need n >= 1 and p >= 2")
    if not 1 <= K <= p - 1:
        raise DataError(f"K must lie in [1, p-1], got {K}")
    if noise_std < 0:
        raise DataError("noise_std must be non-negative")
    rng = np.random.default_rng(seed)
    # jumps are placed after the first coordinate so every nonzero of z
    # is a nonzero of D theta_bar
    positions = rng.choice(p - 1, size=K, replace=False) + 1
    z = np.zeros(p)
    z[positions] = rng.standard_normal(K)
    theta = np.cumsum(z)
    X = rng.standard_normal((n, p))
    noise = noise_std * rng.standard_normal(n)
    return Dataset(X=X, y=X @ theta + noise, ground_truth=theta, name="blocks_tv",
                   params=dict(n=n, p=p, K=K, noise_std=noise_std, seed=seed))
