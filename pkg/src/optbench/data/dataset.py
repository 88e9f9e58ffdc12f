"""Dataset container shared by all problems and solvers.

The design matrix is either a dense float64 ndarray or a scipy CSR
matrix; everything downstream treats both through matvec-style access.
Instances are immutable after construction and safe to share across
concurrent runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from ..errors import DataError


def is_sparse(X) -> bool:
    return sp.issparse(X)


def as_dense(X) -> np.ndarray:
    return X.toarray() if sp.issparse(X) else np.asarray(X)


@dataclass(frozen=True)
class Dataset:
    X: object  # ndarray (n, p) or scipy.sparse CSR
    y: np.ndarray
    ground_truth: np.ndarray | None = None
    name: str = "dataset"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if sp.issparse(self.X):
            X = sp.csr_matrix(self.X)
            X.data = np.asarray(X.data, dtype=np.float64)
            X.sort_indices()
        else:
            X = np.asarray(self.X, dtype=np.float64)
            if X.ndim != 2:
                raise DataError("X must be a 2-d matrix")
            if not np.all(np.isfinite(X)):
                raise DataError("X must be finite")
        object.__setattr__(self, "X", X)
        y = np.asarray(self.y, dtype=np.float64)
        object.__setattr__(self, "y", y)
        if y.shape != (X.shape[0],):
            raise DataError(f"y has length {y.shape}, expected ({X.shape[0]},)")
        if self.ground_truth is not None:
            gt = np.asarray(self.ground_truth, dtype=np.float64)
            if gt.shape != (X.shape[1],):
                raise DataError("ground truth length must equal the feature count")
            object.__setattr__(self, "ground_truth", gt)

    @property
    def n_samples(self) -> int:
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        return self.X.shape[1]
