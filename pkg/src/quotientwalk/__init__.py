"""Quantum-walk search on graphs with exact equitable-partition reduction.

The package simulates coined discrete-time and continuous-time quantum
walks searching for a marked vertex, and — when the graph has an
equitable partition isolating that vertex — runs the identical dynamics
in a space of dimension "number of blocks" (or adjacent block pairs)
instead of "number of vertices" (or arcs).  The reduction is exact, not
approximate, and the test suite verifies full and reduced runs against
each other and against closed forms.

Submodules: ``graphs``, ``partition``, ``dtqw``, ``ctqw``,
``reduction``, ``linalg``, ``timeseries``, ``scan``, ``plotting``,
``cli``.
"""

from .exceptions import (
    ContractViolationError,
    EdgeListParseError,
    InvalidInputError,
    InvalidSizeError,
    QuotientWalkError,
    RetryExhaustedError,
    ToleranceBreachError,
)
from .graphs import (
    ArcSpace,
    Graph,
    apex_join,
    arc_space,
    complete_graph,
    cycle_graph,
    demo_graph,
    hypercube_graph,
    random_regular_graph,
    read_edge_list,
    swap_vertices,
    torus_grid,
    write_edge_list,
)
from .linalg import (
    HermitianEigen,
    hermitian_eigendecompose,
    is_unitary,
    matrix_exp_series,
    unitary_exp,
)
from .partition import (
    EquitablePartition,
    PartitionReport,
    coarsest_equitable_partition,
    partition_to_json,
    quotient_adjacency,
    validate_equitable,
)
from .dtqw import (
    CoinSpec,
    DTQWState,
    coin_matrix,
    dtqw_evolve,
    dtqw_search_series,
    dtqw_step,
    dtqw_unitary_matrix,
    hadamard_walk_line,
    kolmogorov_distance_to_limit,
    konno_cdf,
    konno_density,
    search_coin_spec,
    uniform_arc_state,
)
from .ctqw import (
    SearchHamiltonian,
    ctqw_evolve,
    ctqw_search_series,
    search_hamiltonian,
    uniform_vertex_state,
)
from .reduction import (
    ReducedArcBasis,
    ReducedDTQWOperator,
    ReducedHamiltonian,
    apex_search_peak_time,
    apex_search_probability,
    lift_dtqw,
    lift_vertex_state,
    project_dtqw,
    project_vertex_state,
    reduced_arc_basis,
    reduced_ctqw_probability,
    reduced_ctqw_series,
    reduced_dtqw_operator,
    reduced_dtqw_search_series,
    reduced_hamiltonian,
    reduced_uniform_ctqw,
    reduced_uniform_dtqw,
    search_block_coins,
)
from .timeseries import TimeSeries, max_discrepancy, require_match

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # exceptions
    "QuotientWalkError",
    "ContractViolationError",
    "InvalidSizeError",
    "InvalidInputError",
    "EdgeListParseError",
    "RetryExhaustedError",
    "ToleranceBreachError",
    # graphs
    "Graph",
    "ArcSpace",
    "arc_space",
    "complete_graph",
    "cycle_graph",
    "hypercube_graph",
    "torus_grid",
    "random_regular_graph",
    "apex_join",
    "demo_graph",
    "swap_vertices",
    "read_edge_list",
    "write_edge_list",
    # linear algebra
    "HermitianEigen",
    "hermitian_eigendecompose",
    "unitary_exp",
    "matrix_exp_series",
    "is_unitary",
    # partitions
    "EquitablePartition",
    "PartitionReport",
    "coarsest_equitable_partition",
    "validate_equitable",
    "quotient_adjacency",
    "partition_to_json",
    # discrete-time walk
    "CoinSpec",
    "DTQWState",
    "coin_matrix",
    "search_coin_spec",
    "uniform_arc_state",
    "dtqw_step",
    "dtqw_evolve",
    "dtqw_unitary_matrix",
    "dtqw_search_series",
    "hadamard_walk_line",
    "konno_density",
    "konno_cdf",
    "kolmogorov_distance_to_limit",
    # continuous-time walk
    "SearchHamiltonian",
    "search_hamiltonian",
    "uniform_vertex_state",
    "ctqw_evolve",
    "ctqw_search_series",
    # reduction
    "ReducedArcBasis",
    "ReducedDTQWOperator",
    "ReducedHamiltonian",
    "reduced_arc_basis",
    "search_block_coins",
    "reduced_dtqw_operator",
    "reduced_uniform_dtqw",
    "lift_dtqw",
    "project_dtqw",
    "reduced_dtqw_search_series",
    "reduced_hamiltonian",
    "reduced_uniform_ctqw",
    "lift_vertex_state",
    "project_vertex_state",
    "reduced_ctqw_series",
    "reduced_ctqw_probability",
    "apex_search_probability",
    "apex_search_peak_time",
    # series
    "TimeSeries",
    "max_discrepancy",
    "require_match",
]
