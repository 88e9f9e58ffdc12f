"""Content-addressed identity of one benchmark run."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunKey:
    """SHA-256 digest over the resolved configuration of a single run.

    Identical resolved configs hash identically; parameter maps are
    key-sorted before hashing so insertion order never matters.
    """

    benchmark: str
    objective_id: str
    objective_params: dict
    dataset_id: str
    dataset_params: dict
    solver_id: str
    solver_params: dict
    rep: int

    def __post_init__(self):
        # freeze param dicts against accidental mutation after hashing
        object.__setattr__(self, "objective_params", dict(self.objective_params))
        object.__setattr__(self, "dataset_params", dict(self.dataset_params))
        object.__setattr__(self, "solver_params", dict(self.solver_params))

    @property
    def digest(self) -> str:
        payload = json.dumps(
            {
                "benchmark": self.benchmark,
                "objective": [self.objective_id, self.objective_params],
                "dataset": [self.dataset_id, self.dataset_params],
                "solver": [self.solver_id, self.solver_params],
                "rep": self.rep,
                "schema": SCHEMA_VERSION,
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()
