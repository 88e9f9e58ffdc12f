"""Shared solver workspace caching static per-problem quantities."""

from __future__ import annotations

from functools import cached_property

import numpy as np
import scipy.sparse as sp

from ..data.preprocess import spectral_norm_sq
from ..problems import Iterate, ObjectiveSpec, eval_objective, grad_smooth, resolve_spec


class BoundProblem:
    """A resolved objective bound to its dataset.

    Solvers are pure in (spec, dataset, stop value, seed); this object
    only memoizes quantities that depend on nothing else (spectral norm,
    column norms, sparse layout) so repeated fresh-start runs do not pay
    for them each time.
    """

    def __init__(self, spec: ObjectiveSpec, dataset):
        self.spec = resolve_spec(spec, dataset)
        self.dataset = dataset
        self.X = dataset.X
        self.y = dataset.y
        self.n, self.p = self.X.shape
        self.sparse = sp.issparse(self.X)

    @cached_property
    def spectral_sq(self) -> float:
        return spectral_norm_sq(self.X)

    @cached_property
    def spectral_sq_with_ones(self) -> float:
        """Largest squared singular value of [X | 1] for intercept models."""
        ones = np.ones((self.n, 1))
        if self.sparse:
            augmented = sp.hstack([self.X, sp.csr_matrix(ones)], format="csr")
        else:
            augmented = np.concatenate([self.X, ones], axis=1)
        return spectral_norm_sq(augmented)

    @cached_property
    def col_norms_sq(self) -> np.ndarray:
        if self.sparse:
            return np.asarray(self.X.multiply(self.X).sum(axis=0)).ravel()
        return np.einsum("ij,ij->j", self.X, self.X)

    @cached_property
    def row_norms_sq(self) -> np.ndarray:
        if self.sparse:
            return np.asarray(self.X.multiply(self.X).sum(axis=1)).ravel()
        return np.einsum("ij,ij->i", self.X, self.X)

    @cached_property
    def csc(self):
        return sp.csc_matrix(self.X) if self.sparse else None

    @cached_property
    def csr(self):
        return sp.csr_matrix(self.X) if self.sparse else None

    def column(self, j: int):
        """(indices, values) of column j for sparse X, or the dense column."""
        if not self.sparse:
            return None, self.X[:, j]
        mat = self.csc
        start, end = mat.indptr[j], mat.indptr[j + 1]
        return mat.indices[start:end], mat.data[start:end]

    def row(self, i: int):
        if not self.sparse:
            return None, self.X[i]
        mat = self.csr
        start, end = mat.indptr[i], mat.indptr[i + 1]
        return mat.indices[start:end], mat.data[start:end]

    def value(self, theta: np.ndarray, intercept: float | None = None) -> float:
        return eval_objective(self.spec, self.dataset, Iterate(theta, intercept))["objective_value"]

    def grad(self, theta: np.ndarray, intercept: float | None = None):
        return grad_smooth(self.spec, self.dataset, Iterate(theta, intercept))

    def metrics(self, iterate: Iterate) -> dict[str, float]:
        return eval_objective(self.spec, self.dataset, iterate)


def col_dot(col, vec: np.ndarray) -> float:
    """Dot product of a column (as returned by ``column``/``row``) with a vector."""
    indices, values = col
    if indices is None:
        return float(values @ vec)
    return float(values @ vec[indices])


def col_axpy(col, alpha: float, out: np.ndarray) -> None:
    """out += alpha * column, sparse-aware."""
    if alpha == 0.0:
        return
    indices, values = col
    if indices is None:
        out += alpha * values
    else:
        out[indices] += alpha * values
