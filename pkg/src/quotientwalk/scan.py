"""Locate probability peaks: coarse grid scan refined by golden-section search."""

from __future__ import annotations

import numpy as np

from .exceptions import InvalidInputError

__all__ = ["golden_section_max", "grid_peak"]

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(fn, lo: float, hi: float, tol: float = 1e-6) -> tuple[float, float]:
    """Maximize a unimodal scalar function on ``[lo, hi]``.

    Shrinks the bracket until it is narrower than ``tol`` and returns
    ``(argmax, max)`` at the bracket midpoint.
    """
    a, b = float(lo), float(hi)
    if not b > a:
        raise InvalidInputError(f"need lo < hi, got [{lo}, {hi}]")
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = float(fn(c)), float(fn(d))
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = float(fn(c))
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = float(fn(d))
    mid = 0.5 * (a + b)
    return mid, float(fn(mid))


def grid_peak(fn, tmax: float, samples: int = 257, tol: float = 1e-6) -> tuple[float, float]:
    """Find the global peak of ``fn`` on ``[0, tmax]``.

    Evaluates a uniform grid, then refines around the best grid point
    with golden-section search down to abscissa tolerance ``tol``.  The
    grid must be fine enough to land within one cell of the true peak.
    """
    if tmax <= 0:
        raise InvalidInputError(f"need tmax > 0, got {tmax}")
    if samples < 3:
        raise InvalidInputError(f"need at least 3 grid samples, got {samples}")
    ts = np.linspace(0.0, float(tmax), samples)
    values = np.array([float(fn(t)) for t in ts])
    i = int(np.argmax(values))
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, samples - 1)]
    return golden_section_max(fn, lo, hi, tol)
