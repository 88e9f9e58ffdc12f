from .dataset import Dataset, as_dense, is_sparse
from .generators import gen_blocks_tv, gen_classification, gen_regression
from .libsvm import dump_libsvm, load_libsvm
from .preprocess import spectral_norm_sq, standardize

__all__ = [
    "Dataset",
    "as_dense",
    "is_sparse",
    "gen_regression",
    "gen_classification",
    "gen_blocks_tv",
    "load_libsvm",
    "dump_libsvm",
    "standardize",
    "spectral_norm_sq",
]
