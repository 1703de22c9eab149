"""Tests for the peak-locating helpers."""

import numpy as np
import pytest

from quotientwalk.exceptions import InvalidInputError
from quotientwalk.scan import golden_section_max, grid_peak


def test_golden_section_finds_parabola_vertex():
    # abscissa accuracy near a smooth peak is limited to ~sqrt(eps) by
    # floating-point comparisons, so expect ~1e-7, not the bracket tol
    t, v = golden_section_max(lambda x: 1.0 - (x - 2.5) ** 2, 0.0, 5.0, tol=1e-9)
    assert abs(t - 2.5) < 1e-7
    assert abs(v - 1.0) < 1e-12


def test_golden_section_finds_sine_peak():
    t, v = golden_section_max(np.sin, 0.0, np.pi, tol=1e-10)
    assert abs(t - np.pi / 2.0) < 1e-7
    assert abs(v - 1.0) < 1e-12


def test_golden_section_handles_edge_maximum():
    t, v = golden_section_max(lambda x: x, 0.0, 1.0, tol=1e-9)
    assert abs(t - 1.0) < 1e-6
    assert abs(v - 1.0) < 1e-6


def test_golden_section_rejects_bad_bracket():
    with pytest.raises(InvalidInputError):
        golden_section_max(np.sin, 1.0, 1.0)
    with pytest.raises(InvalidInputError):
        golden_section_max(np.sin, 2.0, 1.0)


def test_grid_peak_locates_global_maximum_among_local_ones():
    # two bumps; the taller one sits near t = 7
    def fn(t):
        return 0.6 * np.exp(-((t - 2.0) ** 2)) + 0.9 * np.exp(-((t - 7.0) ** 2) / 0.5)

    t, v = grid_peak(fn, 10.0, samples=101, tol=1e-8)
    assert abs(t - 7.0) < 1e-6
    assert abs(v - fn(7.0)) < 1e-10


def test_grid_peak_matches_cosine_squared_analysis():
    omega = 0.37

    def fn(t):
        return float(np.sin(omega * t) ** 2)

    expected_t = np.pi / (2.0 * omega)
    t, v = grid_peak(fn, 2.0 * expected_t, samples=257, tol=1e-9)
    assert abs(t - expected_t) < 1e-6
    assert abs(v - 1.0) < 1e-10


def test_grid_peak_handles_peak_at_origin():
    t, v = grid_peak(lambda x: np.exp(-x), 5.0, samples=64, tol=1e-9)
    assert abs(t) < 1e-6
    assert abs(v - 1.0) < 1e-6


def test_grid_peak_rejects_bad_arguments():
    with pytest.raises(InvalidInputError):
        grid_peak(np.sin, 0.0)
    with pytest.raises(InvalidInputError):
        grid_peak(np.sin, 1.0, samples=2)
