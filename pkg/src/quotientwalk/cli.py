"""Command line interface.

Subcommands
-----------
``partition``
    Coarsest equitable partition around the marked vertex, as JSON.
``ctqw`` / ``dtqw``
    Marked-vertex probability series for the continuous- or
    discrete-time search walk, in full space, reduced space, or both
    (with a cross-check).
``scan``
    Peak probability and peak time across a family of instance sizes,
    computed in the reduced space.
``konno-demo``
    Kolmogorov distance of the rescaled 1-D Hadamard walk from its
    limit law for a list of walk lengths.

Every report command writes CSV (default) or versioned JSON to stdout
or ``--out``, and can additionally render a figure with ``--plot PATH``.

Exit codes: 0 success, 1 usage error, 2 input parse error,
3 precondition failure, 4 full/reduced discrepancy above tolerance.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .ctqw import ctqw_search_series
from .dtqw import dtqw_search_series, kolmogorov_distance_to_limit
from .exceptions import (
    ContractViolationError,
    EdgeListParseError,
    InvalidInputError,
    InvalidSizeError,
    RetryExhaustedError,
)
from .graphs import (
    Graph,
    apex_join,
    complete_graph,
    cycle_graph,
    demo_graph,
    hypercube_graph,
    random_regular_graph,
    read_edge_list,
    torus_grid,
)
from .linalg import hermitian_eigendecompose
from .partition import coarsest_equitable_partition, partition_to_json, validate_equitable
from .reduction import (
    apex_search_peak_time,
    reduced_ctqw_series,
    reduced_dtqw_search_series,
    reduced_hamiltonian,
    reduced_uniform_ctqw,
)
from .scan import grid_peak
from .timeseries import TimeSeries, max_discrepancy, table_csv, table_json

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_TOLERANCE = 4

#: Largest tolerated |full - reduced| probability gap in ``--mode both``.
CTQW_MATCH_TOL = 1e-9
DTQW_MATCH_TOL = 1e-10

FAMILIES = (
    "complete",
    "cycle",
    "hypercube",
    "torus",
    "random-regular",
    "apex-cycle",
    "apex-regular",
    "demo",
)


class _UsageError(Exception):
    """Semantic flag problem detected after parsing (maps to exit 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_graph_args(sub: argparse.ArgumentParser) -> None:
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--edge-list", metavar="PATH", help="read the graph from an edge-list file")
    source.add_argument("--family", choices=FAMILIES, help="build a named graph family")
    sub.add_argument("--n", type=int, help="family size (hypercube: dimension; torus: rows)")
    sub.add_argument("--d", type=int, help="degree (regular families) or torus columns")
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized families (default 0)")
    sub.add_argument("--marked", type=int, default=0, help="marked vertex (default 0)")


def _add_output_args(sub: argparse.ArgumentParser, with_plot: bool = True) -> None:
    sub.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    sub.add_argument("--format", choices=("csv", "json"), default="csv", help="report format")
    if with_plot:
        sub.add_argument("--plot", metavar="PATH", help="also render a figure to this image file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quotientwalk", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_part = subs.add_parser("partition", help="coarsest equitable partition as JSON")
    _add_graph_args(p_part)
    p_part.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p_part.set_defaults(handler=run_partition)

    p_ctqw = subs.add_parser("ctqw", help="continuous-time search probability series")
    _add_graph_args(p_ctqw)
    p_ctqw.add_argument("--gamma", type=float, help="hopping rate (defaults per family: complete 1/(N-2), regular 1/degree)")
    p_ctqw.add_argument("--tmax", type=float, required=True, help="end of the time grid")
    p_ctqw.add_argument("--samples", type=int, default=201, help="number of grid times (default 201)")
    p_ctqw.add_argument("--mode", choices=("full", "reduced", "both"), default="full")
    _add_output_args(p_ctqw)
    p_ctqw.set_defaults(handler=run_ctqw)

    p_dtqw = subs.add_parser("dtqw", help="discrete-time search probability series")
    _add_graph_args(p_dtqw)
    p_dtqw.add_argument("--steps", type=int, required=True, help="number of walk steps")
    p_dtqw.add_argument("--mode", choices=("full", "reduced", "both"), default="full")
    _add_output_args(p_dtqw)
    p_dtqw.set_defaults(handler=run_dtqw)

    p_scan = subs.add_parser("scan", help="peak time/probability across instance sizes")
    p_scan.add_argument("--family", choices=tuple(f for f in FAMILIES if f != "demo"), required=True)
    p_scan.add_argument("--sizes", type=int, nargs="+", required=True, metavar="N",
                        help="instance sizes (hypercube: dimensions)")
    p_scan.add_argument("--walk", choices=("ctqw", "dtqw"), default="ctqw")
    p_scan.add_argument("--d", type=int, help="degree for regular families")
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--gamma", type=float, help="hopping rate override (default: per-size rule)")
    _add_output_args(p_scan)
    p_scan.set_defaults(handler=run_scan)

    p_konno = subs.add_parser("konno-demo", help="distance of the 1-D Hadamard walk from its limit law")
    p_konno.add_argument("--steps", type=int, nargs="+", default=[100, 300, 1000], metavar="N",
                         help="walk lengths, each >= 10 (default: 100 300 1000)")
    _add_output_args(p_konno)
    p_konno.set_defaults(handler=run_konno)
    return parser


def _build_family(args) -> Graph:
    fam = args.family

    def need_n(minimum: int) -> int:
        if args.n is None:
            raise _UsageError(f"--family {fam} requires --n")
        if args.n < minimum:
            raise _UsageError(f"--family {fam} requires --n >= {minimum}, got {args.n}")
        return args.n

    def need_d() -> int:
        if args.d is None:
            raise _UsageError(f"--family {fam} requires --d")
        return args.d

    if fam == "complete":
        return complete_graph(need_n(2))
    if fam == "cycle":
        return cycle_graph(need_n(3))
    if fam == "hypercube":
        return hypercube_graph(need_n(1))
    if fam == "torus":
        return torus_grid(need_n(3), need_d())
    if fam == "random-regular":
        return random_regular_graph(need_n(1), need_d(), args.seed)
    if fam == "apex-cycle":
        return apex_join(cycle_graph(need_n(4) - 1))
    if fam == "apex-regular":
        return apex_join(random_regular_graph(need_n(2) - 1, need_d(), args.seed))
    if fam == "demo":
        return demo_graph()
    raise _UsageError(f"unknown family {fam!r}")


def _load_graph(args) -> Graph:
    if args.edge_list:
        text = Path(args.edge_list).read_text()
        return read_edge_list(text)
    return _build_family(args)


def _check_marked(args, g: Graph) -> int:
    if not 0 <= args.marked < g.n:
        raise _UsageError(f"--marked {args.marked} outside 0..{g.n - 1}")
    return args.marked


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _resolve_gamma(args, g: Graph) -> float:
    if args.gamma is not None:
        return float(args.gamma)
    if _is_complete(g) and g.n > 2:
        return 1.0 / (g.n - 2)
    degree = g.regular_degree()
    if degree is not None and degree > 0:
        return 1.0 / degree
    raise _UsageError("gamma has no default for this graph; pass --gamma")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _graph_descriptor(args, g: Graph) -> dict:
    if args.edge_list:
        return {"source": "edge-list", "path": str(args.edge_list), "n": g.n, "m": g.m}
    desc = {"source": "family", "family": args.family, "n": g.n, "m": g.m}
    if args.family in ("random-regular", "apex-regular"):
        desc["seed"] = args.seed
    return desc


def run_partition(args) -> int:
    g = _load_graph(args)
    marked = _check_marked(args, g)
    p = coarsest_equitable_partition(g, marked)
    report = validate_equitable(g, p.blocks)
    if not report.valid or not np.array_equal(report.quotient_degrees, p.quotient_degrees):
        print(f"quotientwalk: partition self-check failed: {report.message}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(partition_to_json(p), args.out)
    return EXIT_OK


def _series_output(series: TimeSeries, args) -> None:
    _emit(series.to_csv() if args.format == "csv" else series.to_json(), args.out)


def run_ctqw(args) -> int:
    g = _load_graph(args)
    marked = _check_marked(args, g)
    if not g.is_connected():
        raise InvalidInputError("search needs a connected graph")
    gamma = _resolve_gamma(args, g)
    if args.samples < 1:
        raise _UsageError(f"--samples must be >= 1, got {args.samples}")
    if args.tmax < 0 or (args.samples > 1 and args.tmax <= 0):
        raise _UsageError(f"--tmax must be positive, got {args.tmax}")
    times = np.linspace(0.0, args.tmax, args.samples)

    full = reduced = None
    if args.mode in ("full", "both"):
        full = ctqw_search_series(g, marked, gamma, times)
        full.metadata["graph"] = _graph_descriptor(args, g)
    if args.mode in ("reduced", "both"):
        p = coarsest_equitable_partition(g, marked)
        probs = reduced_ctqw_series(p, gamma, times)
        reduced = TimeSeries(
            label="t",
            times=times,
            probabilities=probs,
            metadata={
                "walk": "ctqw",
                "mode": "reduced",
                "n": g.n,
                "marked": marked,
                "gamma": gamma,
                "blocks": p.num_blocks,
                "graph": _graph_descriptor(args, g),
            },
        )

    exit_code = EXIT_OK
    if args.mode == "both":
        gap = max_discrepancy(full.probabilities, reduced.probabilities)
        full.metadata["mode"] = "both"
        full.metadata["max_discrepancy"] = gap
        full.metadata["match_tolerance"] = CTQW_MATCH_TOL
        note = f"mode both: max |full - reduced| = {gap:.3e} (tolerance {CTQW_MATCH_TOL:g})"
        if gap > CTQW_MATCH_TOL:
            note += " BREACH"
            exit_code = EXIT_TOLERANCE
        print(note, file=sys.stderr)
    series = full if full is not None else reduced
    _series_output(series, args)
    if args.plot:
        from .plotting import save_series_plot

        if args.mode == "both":
            save_series_plot([full, reduced], ["full space", "reduced space"], args.plot,
                             title="Continuous-time search")
        else:
            save_series_plot([series], [args.mode], args.plot, title="Continuous-time search")
    return exit_code


def run_dtqw(args) -> int:
    g = _load_graph(args)
    marked = _check_marked(args, g)
    if not g.is_connected():
        raise InvalidInputError("search needs a connected graph")
    if args.steps < 0:
        raise _UsageError(f"--steps must be >= 0, got {args.steps}")

    full = reduced = None
    if args.mode in ("full", "both"):
        full = dtqw_search_series(g, args.steps, marked)
        full.metadata["graph"] = _graph_descriptor(args, g)
    if args.mode in ("reduced", "both"):
        reduced = reduced_dtqw_search_series(g, args.steps, marked)
        reduced.metadata["graph"] = _graph_descriptor(args, g)

    exit_code = EXIT_OK
    if args.mode == "both":
        gap = max_discrepancy(full.probabilities, reduced.probabilities)
        full.metadata["mode"] = "both"
        full.metadata["max_discrepancy"] = gap
        full.metadata["match_tolerance"] = DTQW_MATCH_TOL
        note = f"mode both: max |full - reduced| = {gap:.3e} (tolerance {DTQW_MATCH_TOL:g})"
        if gap > DTQW_MATCH_TOL:
            note += " BREACH"
            exit_code = EXIT_TOLERANCE
        print(note, file=sys.stderr)
    series = full if full is not None else reduced
    _series_output(series, args)
    if args.plot:
        from .plotting import save_series_plot

        if args.mode == "both":
            save_series_plot([full, reduced], ["full space", "reduced space"], args.plot,
                             title="Discrete-time search")
        else:
            save_series_plot([series], [args.mode], args.plot, title="Discrete-time search")
    return exit_code


def _scan_graph(args, size: int) -> Graph:
    fam = args.family
    if fam == "complete":
        return complete_graph(size)
    if fam == "cycle":
        return cycle_graph(size)
    if fam == "hypercube":
        return hypercube_graph(size)
    if fam == "torus":
        if args.d is None:
            raise _UsageError("--family torus requires --d (columns)")
        return torus_grid(size, args.d)
    if fam == "random-regular":
        if args.d is None:
            raise _UsageError("--family random-regular requires --d")
        return random_regular_graph(size, args.d, args.seed)
    if fam == "apex-cycle":
        if size < 4:
            raise _UsageError(f"--family apex-cycle needs sizes >= 4, got {size}")
        return apex_join(cycle_graph(size - 1))
    if fam == "apex-regular":
        if args.d is None:
            raise _UsageError("--family apex-regular requires --d")
        return apex_join(random_regular_graph(size - 1, args.d, args.seed))
    raise _UsageError(f"family {fam!r} is not scannable")


def _scan_window(args, g: Graph) -> float:
    """Time window guaranteed to contain the first probability peak.

    When gamma follows the default rule, the apex-over-regular families
    (including complete graphs) have exactly periodic reduced dynamics,
    so one full period suffices; otherwise fall back to a generous
    square-root-of-size window.
    """
    if args.gamma is None:
        if args.family == "complete" and g.n >= 3:
            return 2.0 * apex_search_peak_time(g.n, g.n - 2)
        if args.family == "apex-cycle":
            return 2.0 * apex_search_peak_time(g.n, 2)
        if args.family == "apex-regular":
            return 2.0 * apex_search_peak_time(g.n, args.d)
    return max(10.0, 2.0 * np.pi * np.sqrt(g.n))


def run_scan(args) -> int:
    rows: list[tuple] = []
    for size in args.sizes:
        g = _scan_graph(args, size)
        if not g.is_connected():
            raise InvalidInputError(f"scan size {size}: search needs a connected graph")
        p = coarsest_equitable_partition(g, 0)
        if args.walk == "ctqw":
            gamma = _resolve_gamma(args, g)
            ham = reduced_hamiltonian(p, gamma)
            eig = hermitian_eigendecompose(ham.matrix)
            coeff = eig.eigenvectors.conj().T @ reduced_uniform_ctqw(p)
            marked_row = eig.eigenvectors[0, :] * coeff

            def probability(t: float) -> float:
                amp = np.exp(1j * t * eig.eigenvalues) @ marked_row
                return float(np.abs(amp) ** 2)

            t_star, p_star = grid_peak(probability, _scan_window(args, g))
            rows.append((g.n, p.num_blocks, t_star, p_star))
        else:
            steps = max(30, int(np.ceil(4.0 * np.sqrt(g.n))))
            series = reduced_dtqw_search_series(g, steps, 0)
            t_star, p_star = series.peak()
            rows.append((g.n, series.metadata["pairs"], int(t_star), p_star))

    header = ("N", "J", "T_star", "P_star")
    meta = {"family": args.family, "walk": args.walk}
    _emit(
        table_csv(header, rows) if args.format == "csv" else table_json("scan", header, rows, meta),
        args.out,
    )
    if args.plot:
        from .plotting import save_scan_plot

        save_scan_plot(rows, args.plot,
                       time_label="peak time" if args.walk == "ctqw" else "peak step")
    return EXIT_OK


def run_konno(args) -> int:
    lengths: list[int] = []
    for n in args.steps:
        if n < 10:
            raise _UsageError(f"walk lengths must be >= 10, got {n}")
        if n not in lengths:
            lengths.append(n)
    rows = [(n, kolmogorov_distance_to_limit(n)) for n in lengths]
    header = ("n", "distance")
    _emit(
        table_csv(header, rows) if args.format == "csv" else table_json("konno", header, rows),
        args.out,
    )
    if args.plot:
        from .plotting import save_line_walk_plot

        save_line_walk_plot(max(lengths), args.plot)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"quotientwalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListParseError as exc:
        print(f"quotientwalk: edge-list parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"quotientwalk: i/o error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidInputError, InvalidSizeError, RetryExhaustedError, ContractViolationError) as exc:
        print(f"quotientwalk: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
