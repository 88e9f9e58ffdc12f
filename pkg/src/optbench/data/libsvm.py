"""Reader and writer for the libsvm sparse text format.

One sample per line, ``<label> <index>:<value> ...`` with 1-based,
strictly increasing indices.  Anything after ``#`` is a comment; blank
lines are skipped.  The feature count of a loaded matrix is the largest
index seen in the file.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import scipy.sparse as sp

from ..errors import DataError
from .dataset import Dataset


def load_libsvm(path: str | Path) -> Dataset:
    path = Path(path)
    labels: list[float] = []
    indptr = [0]
    indices: list[int] = []
    values: list[float] = []
    max_index = 0
    with open(path) as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            try:
                labels.append(float(tokens[0]))
            except ValueError:
                raise DataError(f"{path.name}:{lineno}: unparsable label {tokens[0]!r}")
            previous = 0
            for token in tokens[1:]:
                idx_text, _, val_text = token.partition(":")
                try:
                    index = int(idx_text)
                    value = float(val_text)
                except ValueError:
                    raise DataError(f"{path.name}:{lineno}: unparsable token {token!r}")
                if index < 1:
                    raise DataError(f"{path.name}:{lineno}: index {index} is below 1")
                if index <= previous:
                    raise DataError(
                        f"{path.name}:{lineno}: indices must be strictly increasing "
                        f"({index} after {previous})"
                    )
                previous = index
                indices.append(index - 1)
                values.append(value)
            max_index = max(max_index, previous)
            indptr.append(len(indices))
    if not labels:
        raise DataError(f"{path.name}: no samples found")
    X = sp.csr_matrix(
        (np.array(values), np.array(indices, dtype=np.int64), np.array(indptr, dtype=np.int64)),
        shape=(len(labels), max_index),
    )
    return Dataset(X=X, y=np.array(labels), name="libsvm", params=dict(path=str(path)))


def dump_libsvm(dataset: Dataset, path: str | Path) -> None:
    """Write a dataset in libsvm format (1-based indices, repr floats)."""
    X = sp.csr_matrix(dataset.X) if sp.issparse(dataset.X) else sp.csr_matrix(np.asarray(dataset.X))
    X.sort_indices()
    with open(path, "w") as handle:
        for i in range(X.shape[0]):
            start, end = X.indptr[i], X.indptr[i + 1]
            pairs = " ".join(
                f"{j + 1}:{repr(float(v))}"
                for j, v in zip(X.indices[start:end], X.data[start:end])
            )
            label = repr(float(dataset.y[i]))
            handle.write(f"{label} {pairs}\n" if pairs else f"{label}\n")
