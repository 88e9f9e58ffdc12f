"""Parameter grids and their Cartesian expansion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ConfigError

Scalar = int | float | str | bool


@dataclass(frozen=True)
class ParameterGrid:
    """A map from parameter name to the list of values it sweeps over.

    Every entry list must be non-empty; the expansion is the Cartesian
    product over entries, so its size is the product of list lengths.
    """

    entries: dict[str, list[Scalar]] = field(default_factory=dict)

    def __post_init__(self):
        for name, values in self.entries.items():
            if not isinstance(values, list) or len(values) == 0:
                raise ConfigError(f"grid entry {name!r} must be a non-empty list")

    @property
    def size(self) -> int:
        n = 1
        for values in self.entries.values():
            n *= len(values)
        return n


def expand_grid(grid: ParameterGrid) -> list[dict[str, Scalar]]:
    """Expand a grid into the full list of flat name->value configs.

    The product is enumerated in lexicographic order of the sorted
    parameter names, with each entry list kept in its given order.  An
    empty grid expands to one empty config.
    """
    names = sorted(grid.entries)
    if not names:
        return [{}]
    for name in names:
        if len(grid.entries[name]) == 0:
            raise ConfigError(f"grid entry {name!r} is empty")
    configs = []
    for combo in itertools.product(*(grid.entries[name] for name in names)):
        configs.append(dict(zip(names, combo)))
    return configs


def canonical_params(params: dict[str, Scalar]) -> str:
    """Render a resolved config as ``k1=v1,k2=v2`` with sorted keys.

    Floats use shortest round-trip formatting (Python repr); this string
    is part of the CSV contract and of run-key hashing inputs.
    """
    parts = []
    for key in sorted(params):
        value = params[key]
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = repr(value)
        else:
            text = str(value)
        parts.append(f"{key}={text}")
    return ",".join(parts)
