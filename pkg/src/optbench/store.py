"""Checkpoint store: one record file per run, keyed by content hash.

Records are line-delimited text so they stay inspectable and diffable.
Writes go to a temporary file in the same directory followed by an
atomic rename, so concurrent writers and interrupted runs never leave a
half-written record under a live key.
"""

from __future__ import annotations

import logging
import math
import os
import tempfile
from pathlib import Path

from .curves import Curve, CurvePoint, TERMINAL_REASONS
from .runkey import RunKey, SCHEMA_VERSION

log = logging.getLogger("optbench.store")


def _format_number(value: int | float) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans are not stored numbers")
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _parse_number(text: str) -> int | float:
    try:
        return int(text)
    except ValueError:
        return float(text)


class ResultStore:
    """Directory of per-run record files supporting resume semantics."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, key: RunKey) -> Path:
        return self.root / f"{key.digest}.curve"

    def __contains__(self, key: RunKey) -> bool:
        return self.get(key) is not None

    def put(self, key: RunKey, curve: Curve) -> None:
        lines = [f"schema {SCHEMA_VERSION}", f"terminal {curve.terminal_reason}"]
        for point in curve.points:
            cells = [
                "point",
                _format_number(point.stop_value),
                _format_number(float(point.time_s)),
            ]
            for name in sorted(point.metrics):
                value = point.metrics[name]
                if math.isnan(value):
                    text = "nan"
                elif value == math.inf:
                    text = "inf"
                elif value == -math.inf:
                    text = "-inf"
                else:
                    text = repr(float(value))
                cells.append(f"{name}={text}")
            lines.append(" ".join(cells))
        payload = "\n".join(lines) + "\n"
        fd, tmp_name = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(payload)
            os.replace(tmp_name, self._path(key))
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise

    def get(self, key: RunKey) -> Curve | None:
        """Return the stored curve, or None when absent or corrupt.

        Corrupt records are logged and treated as absent so the run is
        recomputed on resume.
        """
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return self._parse(path, key)
        except (ValueError, IndexError, KeyError) as exc:
            log.warning("corrupt record %s (%s); will recompute", path.name, exc)
            return None

    def _parse(self, path: Path, key: RunKey) -> Curve:
        lines = path.read_text().splitlines()
        if not lines or lines[0] != f"schema {SCHEMA_VERSION}":
            raise ValueError("bad schema line")
        if not lines[1].startswith("terminal "):
            raise ValueError("missing terminal line")
        reason = lines[1].split(" ", 1)[1]
        if reason not in TERMINAL_REASONS:
            raise ValueError(f"unknown terminal reason {reason!r}")
        points = []
        for line in lines[2:]:
            if not line:
                continue
            cells = line.split(" ")
            if cells[0] != "point" or len(cells) < 3:
                raise ValueError("malformed point line")
            stop_value = _parse_number(cells[1])
            time_s = float(cells[2])
            metrics = {}
            for cell in cells[3:]:
                name, _, text = cell.partition("=")
                if not name or not text:
                    raise ValueError("malformed metric cell")
                metrics[name] = float(text)
            points.append(CurvePoint(stop_value=stop_value, time_s=time_s, metrics=metrics))
        return Curve(key=key, points=points, terminal_reason=reason)
