"""Column standardization and the largest squared singular value."""

from __future__ import annotations

import dataclasses

import numpy as np
import scipy.sparse as sp

from ..errors import DataError
from .dataset import Dataset


def standardize(dataset: Dataset) -> Dataset:
    """Scale every column to unit population standard deviation.

    Dense matrices are also centered to zero mean; sparse matrices are
    only scaled (centering would destroy sparsity).  Zero-variance
    columns pass through unchanged.
    """
    X = dataset.X
    if sp.issparse(X):
        n = X.shape[0]
        mean = np.asarray(X.mean(axis=0)).ravel()
        mean_sq = np.asarray(X.multiply(X).mean(axis=0)).ravel()
        std = np.sqrt(np.maximum(mean_sq - mean**2, 0.0))
        scale = np.where(std > 0.0, 1.0 / np.where(std > 0.0, std, 1.0), 1.0)
        X_new = X @ sp.diags(scale)
        X_new = sp.csr_matrix(X_new)
    else:
        mean = X.mean(axis=0)
        std = X.std(axis=0)  # population (1/n) convention
        keep = std == 0.0
        X_new = np.where(keep, X, (X - mean) / np.where(keep, 1.0, std))
    params = dict(dataset.params)
    params["standardize"] = True
    return dataclasses.replace(dataset, X=X_new, params=params)


def spectral_norm_sq(X) -> float:
    """Largest eigenvalue of X^T X via power iteration.

    Deterministic all-ones start, relative eigenvalue change tolerance
    1e-10, 1000 iteration cap.  Used as the Lipschitz scale for 1/L step
    sizes.
    """
    p = X.shape[1]
    v = np.full(p, 1.0 / np.sqrt(p))
    eig = 0.0
    XT = X.T if not sp.issparse(X) else sp.csc_matrix(X.T)
    for _ in range(1000):
        w = XT @ (X @ v)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            raise DataError("spectral norm of a zero matrix is undefined")
        new_eig = float(v @ w)
        v = w / norm
        if eig > 0.0 and abs(new_eig - eig) <= 1e-10 * abs(new_eig):
            return new_eig
        eig = new_eig
    return eig
