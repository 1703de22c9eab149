"""Probability time series and deterministic delimited-text / JSON output.

All floating-point text output uses 17 significant digits so that equal
inputs produce byte-identical files and values round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .exceptions import InvalidInputError, ToleranceBreachError

__all__ = [
    "SCHEMA_VERSION",
    "TimeSeries",
    "format_float",
    "format_cell",
    "table_csv",
    "table_json",
    "max_discrepancy",
    "require_match",
]

SCHEMA_VERSION = 1

_PROBABILITY_SLACK = 1e-9


def format_float(x) -> str:
    """Render a float with 17 significant digits (exact round-trip)."""
    return f"{float(x):.17g}"


def format_cell(x) -> str:
    """Render a table cell: integers verbatim, floats via ``format_float``."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format_float(x)


@dataclass
class TimeSeries:
    """Marked-vertex probability sampled on a strictly increasing time grid.

    ``label`` is the abscissa column name: ``"t"`` for continuous time,
    ``"step"`` for discrete steps.  ``metadata`` is free-form and lands
    in the JSON output only (CSV keeps its fixed two-column header).
    """

    label: str
    times: np.ndarray
    probabilities: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.label not in ("t", "step"):
            raise InvalidInputError(f"series label must be 't' or 'step', got {self.label!r}")
        times = np.asarray(self.times, dtype=np.int64 if self.label == "step" else np.float64)
        probs = np.asarray(self.probabilities, dtype=np.float64)
        if times.ndim != 1 or probs.shape != times.shape:
            raise InvalidInputError("times and probabilities must be 1-D arrays of equal length")
        if times.shape[0] == 0:
            raise InvalidInputError("series needs at least one sample")
        if times.shape[0] > 1 and not (np.diff(times) > 0).all():
            raise InvalidInputError("times must be strictly increasing")
        if float(probs.min()) < -_PROBABILITY_SLACK or float(probs.max()) > 1 + _PROBABILITY_SLACK:
            raise InvalidInputError("probabilities must lie in [0, 1]")
        self.times = times
        self.probabilities = probs

    def __len__(self) -> int:
        return int(self.times.shape[0])

    def peak(self) -> tuple[float, float]:
        """(time, probability) of the largest sampled probability."""
        i = int(np.argmax(self.probabilities))
        t = self.times[i]
        return (int(t) if self.label == "step" else float(t)), float(self.probabilities[i])

    def to_csv(self) -> str:
        """Two-column CSV with header ``<label>,probability``."""
        lines = [f"{self.label},probability"]
        for t, p in zip(self.times, self.probabilities):
            lines.append(f"{format_cell(t)},{format_float(p)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """Versioned JSON document carrying samples plus metadata."""
        doc = {
            "schema": SCHEMA_VERSION,
            "kind": "series",
            "label": self.label,
            "metadata": self.metadata,
            "samples": [
                [int(t) if self.label == "step" else float(t), float(p)]
                for t, p in zip(self.times, self.probabilities)
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def table_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Render a small table as CSV with the given header."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_cell(x) for x in row))
    return "\n".join(lines) + "\n"


def max_discrepancy(a, b) -> float:
    """Largest absolute elementwise gap between two equally shaped arrays."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise InvalidInputError(f"cannot compare shapes {a.shape} and {b.shape}")
    return float(np.abs(a - b).max())


def require_match(a, b, tol: float, what: str = "values") -> float:
    """Return ``max_discrepancy(a, b)``; raise ``ToleranceBreachError`` if it exceeds ``tol``."""
    gap = max_discrepancy(a, b)
    if gap > tol:
        raise ToleranceBreachError(f"{what} differ by {gap:.3e}, tolerance {tol:g}")
    return gap


def table_json(kind: str, header: Sequence[str], rows: Iterable[Sequence], metadata: dict | None = None) -> str:
    """Render a small table as a versioned JSON document."""
    doc = {
        "schema": SCHEMA_VERSION,
        "kind": kind,
        "metadata": metadata or {},
        "rows": [
            {name: (int(x) if isinstance(x, (int, np.integer)) else float(x)) for name, x in zip(header, row)}
            for row in rows
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
