"""Exception types shared across the package."""


class BenchError(Exception):
    """Base class for all optbench errors."""


class ConfigError(BenchError):
    """Invalid benchmark configuration (syntax, unknown ids, bad values)."""


class CompatibilityError(BenchError):
    """Solver paired with an objective it does not support."""


class DataError(BenchError):
    """Invalid dataset parameters or unparsable data file."""
