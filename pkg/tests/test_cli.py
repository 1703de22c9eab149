"""End-to-end tests of the command line interface.

``main`` is invoked in process so the tests can assert on exit codes,
stdout/stderr text, and files written by ``--out`` / ``--plot``.
"""

import json

import numpy as np
import pytest

import quotientwalk.cli as cli
from quotientwalk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_partition_demo_graph_json(capsys):
    code, out, err = run(capsys, "partition", "--family", "demo")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["blocks"] == [[0], [1, 4], [2, 3]]
    assert doc["quotient_degrees"] == [[0, 2, 0], [1, 0, 2], [0, 2, 1]]


def test_partition_marked_flag_moves_the_singleton(capsys):
    code, out, _ = run(capsys, "partition", "--family", "cycle", "--n", "5", "--marked", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["blocks"][0] == [2]


def test_partition_out_file(capsys, tmp_path):
    target = tmp_path / "partition.json"
    code, out, _ = run(capsys, "partition", "--family", "complete", "--n", "6", "--out", str(target))
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["blocks"] == [[0], [1, 2, 3, 4, 5]]
    assert doc["quotient_degrees"] == [[0, 5], [1, 4]]


def test_ctqw_csv_header_and_first_row(capsys):
    code, out, err = run(
        capsys, "ctqw", "--family", "complete", "--n", "8", "--tmax", "4", "--samples", "5"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,probability"
    assert len(lines) == 6
    t0, p0 = lines[1].split(",")
    assert float(t0) == 0.0
    assert abs(float(p0) - 1.0 / 8.0) < 1e-15


def test_ctqw_mode_both_reports_gap_and_exits_zero(capsys):
    code, out, err = run(
        capsys,
        "ctqw", "--family", "complete", "--n", "8", "--tmax", "4",
        "--samples", "21", "--mode", "both", "--format", "json",
    )
    assert code == 0
    assert "mode both: max |full - reduced| = " in err
    assert "BREACH" not in err
    doc = json.loads(out)
    assert doc["metadata"]["mode"] == "both"
    assert doc["metadata"]["max_discrepancy"] <= cli.CTQW_MATCH_TOL
    assert doc["metadata"]["match_tolerance"] == cli.CTQW_MATCH_TOL


def test_ctqw_mode_both_breach_exits_four(capsys, monkeypatch):
    real = cli.reduced_ctqw_series

    def skewed(p, gamma, times):
        return np.clip(real(p, gamma, times) + 1e-6, 0.0, 1.0)

    monkeypatch.setattr(cli, "reduced_ctqw_series", skewed)
    code, out, err = run(
        capsys,
        "ctqw", "--family", "complete", "--n", "8", "--tmax", "2",
        "--samples", "11", "--mode", "both",
    )
    assert code == 4
    assert "BREACH" in err
    # the report is still written so the discrepancy can be inspected
    assert out.splitlines()[0] == "t,probability"


def test_ctqw_reduced_mode_metadata(capsys):
    code, out, _ = run(
        capsys,
        "ctqw", "--family", "hypercube", "--n", "3", "--tmax", "5",
        "--samples", "11", "--mode", "reduced", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["metadata"]["mode"] == "reduced"
    assert doc["metadata"]["blocks"] == 4
    assert doc["metadata"]["gamma"] == pytest.approx(1.0 / 3.0)


def test_ctqw_gamma_defaults_to_inverse_degree(capsys):
    code, out, _ = run(
        capsys,
        "ctqw", "--family", "cycle", "--n", "6", "--tmax", "1",
        "--samples", "3", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["metadata"]["gamma"] == 0.5


def test_ctqw_irregular_graph_needs_explicit_gamma(capsys, tmp_path):
    path = tmp_path / "path3.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    code, _, err = run(capsys, "ctqw", "--edge-list", str(path), "--tmax", "2")
    assert code == 1
    assert "gamma" in err
    code2, out, _ = run(
        capsys, "ctqw", "--edge-list", str(path), "--tmax", "2", "--gamma", "0.4", "--samples", "4"
    )
    assert code2 == 0
    assert out.splitlines()[0] == "t,probability"


def test_dtqw_csv_step_series(capsys):
    code, out, _ = run(capsys, "dtqw", "--family", "complete", "--n", "8", "--steps", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "step,probability"
    assert len(lines) == 8
    assert lines[1].split(",")[0] == "0"
    assert abs(float(lines[1].split(",")[1]) - 1.0 / 8.0) < 1e-15


def test_dtqw_mode_both_matches_within_tolerance(capsys):
    code, out, err = run(
        capsys,
        "dtqw", "--family", "hypercube", "--n", "4", "--steps", "20",
        "--mode", "both", "--format", "json",
    )
    assert code == 0
    assert "BREACH" not in err
    doc = json.loads(out)
    assert doc["metadata"]["max_discrepancy"] <= cli.DTQW_MATCH_TOL


def test_dtqw_reduced_equals_full_output(capsys):
    _, full_out, _ = run(
        capsys, "dtqw", "--family", "complete", "--n", "16", "--steps", "12", "--mode", "full"
    )
    _, reduced_out, _ = run(
        capsys, "dtqw", "--family", "complete", "--n", "16", "--steps", "12", "--mode", "reduced"
    )
    full_rows = [line.split(",")[1] for line in full_out.splitlines()[1:]]
    red_rows = [line.split(",")[1] for line in reduced_out.splitlines()[1:]]
    gaps = [abs(float(a) - float(b)) for a, b in zip(full_rows, red_rows)]
    assert max(gaps) < 1e-10


def test_scan_ctqw_complete_family(capsys):
    code, out, _ = run(
        capsys, "scan", "--family", "complete", "--sizes", "16", "64", "--walk", "ctqw"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "N,J,T_star,P_star"
    rows = [line.split(",") for line in lines[1:]]
    assert [r[0] for r in rows] == ["16", "64"]
    assert [r[1] for r in rows] == ["2", "2"]
    for n_str, _, t_str, p_str in rows:
        n = int(n_str)
        expected_t = ((n - 2) * np.pi / 2.0) / np.sqrt(n - 1.0)
        assert abs(float(t_str) - expected_t) / expected_t < 1e-5
        assert abs(float(p_str) - (1.0 - 1.0 / n)) < 1e-6


def test_scan_dtqw_reports_integer_steps(capsys):
    code, out, _ = run(
        capsys, "scan", "--family", "complete", "--sizes", "8", "--walk", "dtqw", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "scan"
    assert doc["metadata"] == {"family": "complete", "walk": "dtqw"}
    row = doc["rows"][0]
    assert row["N"] == 8
    assert row["J"] == 3
    assert isinstance(row["T_star"], int)
    assert 0.0 < row["P_star"] <= 1.0


def test_scan_random_regular_is_seed_deterministic(capsys):
    args = ("scan", "--family", "random-regular", "--sizes", "20", "--d", "3", "--seed", "5")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    _, other_seed, _ = run(capsys, "scan", "--family", "random-regular",
                           "--sizes", "20", "--d", "3", "--seed", "6")
    assert other_seed.splitlines()[0] == "N,J,T_star,P_star"


def test_konno_demo_table(capsys):
    code, out, _ = run(capsys, "konno-demo", "--steps", "50", "120", "50")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,distance"
    # duplicates collapse, order is preserved
    assert [line.split(",")[0] for line in lines[1:]] == ["50", "120"]
    for line in lines[1:]:
        assert 0.0 < float(line.split(",")[1]) < 0.2


def test_konno_demo_rejects_short_walks(capsys):
    code, _, err = run(capsys, "konno-demo", "--steps", "5")
    assert code == 1
    assert ">= 10" in err


def test_reports_are_byte_identical_across_runs(capsys):
    for args in (
        ("partition", "--family", "demo"),
        ("ctqw", "--family", "complete", "--n", "6", "--tmax", "3", "--samples", "7",
         "--format", "json"),
        ("dtqw", "--family", "demo", "--steps", "9"),
        ("konno-demo", "--steps", "40", "--format", "json"),
    ):
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


def test_plot_files_are_written(capsys, tmp_path):
    series_png = tmp_path / "series.png"
    code, _, _ = run(
        capsys,
        "dtqw", "--family", "complete", "--n", "8", "--steps", "10",
        "--mode", "both", "--out", str(tmp_path / "series.csv"), "--plot", str(series_png),
    )
    assert code == 0
    assert series_png.stat().st_size > 0

    scan_png = tmp_path / "scan.png"
    code, _, _ = run(
        capsys,
        "scan", "--family", "complete", "--sizes", "8", "16",
        "--out", str(tmp_path / "scan.csv"), "--plot", str(scan_png),
    )
    assert code == 0
    assert scan_png.stat().st_size > 0

    konno_png = tmp_path / "konno.png"
    code, _, _ = run(
        capsys, "konno-demo", "--steps", "60", "--out", str(tmp_path / "konno.csv"),
        "--plot", str(konno_png),
    )
    assert code == 0
    assert konno_png.stat().st_size > 0


def test_edge_list_round_trip_through_cli(capsys, tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n0 3\n")
    code, out, _ = run(capsys, "partition", "--edge-list", str(path))
    assert code == 0
    assert json.loads(out)["blocks"] == [[0], [1, 3], [2]]


def test_parse_error_reports_line_number(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n0 x\n")
    code, _, err = run(capsys, "partition", "--edge-list", str(path))
    assert code == 2
    assert "line 2" in err


def test_missing_file_is_an_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "partition", "--edge-list", str(tmp_path / "nope.txt"))
    assert code == 2
    assert "i/o error" in err


def test_usage_errors_exit_one(capsys):
    # argparse-detected: missing required option
    code, _, _ = run(capsys, "ctqw", "--family", "complete", "--n", "4")
    assert code == 1
    # semantic: family needs a size
    code, _, err = run(capsys, "ctqw", "--family", "complete", "--tmax", "2")
    assert code == 1
    assert "--n" in err
    # semantic: marked vertex out of range
    code, _, err = run(capsys, "dtqw", "--family", "complete", "--n", "4",
                       "--steps", "3", "--marked", "9")
    assert code == 1
    assert "--marked" in err
    # unknown subcommand
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1


def test_disconnected_graph_is_a_precondition_failure(capsys, tmp_path):
    path = tmp_path / "two_edges.txt"
    path.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(capsys, "dtqw", "--edge-list", str(path), "--steps", "4")
    assert code == 3
    assert "connected" in err
    code, _, _ = run(capsys, "ctqw", "--edge-list", str(path), "--tmax", "2", "--gamma", "1")
    assert code == 3


def test_random_regular_parity_error_is_precondition(capsys):
    code, _, err = run(
        capsys, "dtqw", "--family", "random-regular", "--n", "5", "--d", "3", "--steps", "2"
    )
    assert code == 3


def test_version_flag(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert "quotientwalk" in out
