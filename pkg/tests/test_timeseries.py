"""Tests for the time-series container and delimited output helpers."""

import json

import numpy as np
import pytest

from quotientwalk.exceptions import InvalidInputError, ToleranceBreachError
from quotientwalk.timeseries import (
    SCHEMA_VERSION,
    TimeSeries,
    format_float,
    max_discrepancy,
    require_match,
    table_csv,
    table_json,
)


def small_series():
    return TimeSeries("t", np.array([0.0, 0.5]), np.array([0.25, 0.75]), {"walk": "demo"})


def test_float_formatting_round_trips():
    for value in (0.0, 1.0, 0.1, 1.0 / 3.0, np.pi, 1e-17, 123456.789):
        assert float(format_float(value)) == value
    assert format_float(0.5) == "0.5"
    assert format_float(2.0) == "2"


def test_csv_golden_output():
    assert small_series().to_csv() == "t,probability\n0,0.25\n0.5,0.75\n"


def test_csv_header_follows_label():
    s = TimeSeries("step", np.array([0.0, 1.0, 2.0]), np.array([0.5, 0.5, 0.5]))
    lines = s.to_csv().splitlines()
    assert lines[0] == "step,probability"
    assert lines[1:] == ["0,0.5", "1,0.5", "2,0.5"]


def test_csv_values_parse_back_exactly():
    rng = np.random.default_rng(5)
    times = np.cumsum(rng.uniform(0.01, 1.0, size=40))
    probs = rng.uniform(0.0, 1.0, size=40)
    s = TimeSeries("t", times, probs)
    rows = [line.split(",") for line in s.to_csv().splitlines()[1:]]
    parsed_t = np.array([float(r[0]) for r in rows])
    parsed_p = np.array([float(r[1]) for r in rows])
    assert np.array_equal(parsed_t, times)
    assert np.array_equal(parsed_p, probs)


def test_json_schema_and_round_trip():
    s = small_series()
    doc = json.loads(s.to_json())
    assert doc["schema"] == SCHEMA_VERSION
    assert doc["kind"] == "series"
    assert doc["label"] == "t"
    assert doc["metadata"] == {"walk": "demo"}
    assert doc["samples"] == [[0.0, 0.25], [0.5, 0.75]]


def test_json_step_series_uses_integer_abscissa():
    s = TimeSeries("step", np.array([0, 1]), np.array([0.5, 0.25]))
    doc = json.loads(s.to_json())
    assert doc["samples"] == [[0, 0.5], [1, 0.25]]
    assert all(isinstance(pair[0], int) for pair in doc["samples"])


def test_json_is_deterministic():
    a = small_series().to_json()
    b = small_series().to_json()
    assert a == b
    # keys are emitted in sorted order
    doc = json.loads(a)
    assert list(doc) == sorted(doc)


def test_peak_returns_argmax_pair():
    s = TimeSeries("t", np.array([0.0, 1.0, 2.0, 3.0]), np.array([0.1, 0.9, 0.4, 0.9]))
    t_star, p_star = s.peak()
    assert t_star == 1.0
    assert p_star == 0.9


def test_validation_rejects_malformed_series():
    with pytest.raises(InvalidInputError):
        TimeSeries("t", np.array([0.0, 0.0]), np.array([0.5, 0.5]))
    with pytest.raises(InvalidInputError):
        TimeSeries("t", np.array([1.0, 0.0]), np.array([0.5, 0.5]))
    with pytest.raises(InvalidInputError):
        TimeSeries("t", np.array([0.0]), np.array([1.5]))
    with pytest.raises(InvalidInputError):
        TimeSeries("t", np.array([0.0]), np.array([-0.5]))
    with pytest.raises(InvalidInputError):
        TimeSeries("t", np.array([]), np.array([]))
    with pytest.raises(InvalidInputError):
        TimeSeries("t", np.array([0.0, 1.0]), np.array([0.5]))
    with pytest.raises(InvalidInputError):
        TimeSeries("other", np.array([0.0]), np.array([0.5]))


def test_validation_tolerates_tiny_probability_overshoot():
    s = TimeSeries("t", np.array([0.0]), np.array([1.0 + 1e-10]))
    assert s.probabilities[0] <= 1.0 + 1e-9


def test_max_discrepancy_and_require_match():
    a = np.array([0.25, 0.75])
    b = np.array([0.25, 0.75 + 2e-6])
    gap = max_discrepancy(a, b)
    assert abs(gap - 2e-6) < 1e-12
    assert require_match(a, b, 1e-5, "walk comparison") == gap
    with pytest.raises(ToleranceBreachError, match="walk comparison"):
        require_match(a, b, 1e-7, "walk comparison")
    with pytest.raises(InvalidInputError):
        max_discrepancy(a, np.array([0.5]))


def test_table_csv_golden():
    out = table_csv(("N", "J", "T_star", "P_star"), [(16, 2, 6.5, 0.9375)])
    assert out == "N,J,T_star,P_star\n16,2,6.5,0.9375\n"


def test_table_csv_preserves_integer_cells():
    out = table_csv(("n", "distance"), [(100, 0.5), (1000, 0.0625)])
    assert out.splitlines() == ["n,distance", "100,0.5", "1000,0.0625"]


def test_table_json_schema():
    doc = json.loads(
        table_json("scan", ("N", "T_star"), [(16, 6.0), (64, 12.5)], {"walk": "ctqw"})
    )
    assert doc["schema"] == SCHEMA_VERSION
    assert doc["kind"] == "scan"
    assert doc["rows"] == [{"N": 16, "T_star": 6.0}, {"N": 64, "T_star": 12.5}]
    assert doc["metadata"] == {"walk": "ctqw"}
    empty_meta = json.loads(table_json("konno", ("n", "distance"), [(100, 0.0625)]))
    assert empty_meta["metadata"] == {}
    assert empty_meta["rows"] == [{"n": 100, "distance": 0.0625}]
