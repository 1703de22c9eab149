"""Exact invariant-subspace reduction of both walks over an equitable partition.

When coins (or the search generator) are constant on the blocks of an
equitable partition, the span of the block-pair uniform states is
invariant under the dynamics, so the walk can be simulated in a space
whose dimension is the number of adjacent block pairs (discrete time)
or the number of blocks (continuous time) instead of the number of arcs
or vertices.  The reduced evolutions here reproduce the full-space ones
exactly, which the test suite checks by lifting and projecting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import ContractViolationError, InvalidInputError
from .graphs import ArcSpace, Graph
from .linalg import UNITARY_TOL, hermitian_eigendecompose, is_unitary
from .partition import EquitablePartition, coarsest_equitable_partition, quotient_adjacency
from .dtqw import UNIMODULAR_TOL, DTQWState
from .timeseries import TimeSeries

__all__ = [
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
]


@dataclass(frozen=True, eq=False)
class ReducedArcBasis:
    """Ordered block pairs ``(j, k)`` carrying at least one arc from block j to block k.

    Each pair labels the uniform superposition over its arcs; those
    states are orthonormal and span the invariant subspace of the
    discrete-time walk.  Pairs with no arcs are dropped.
    """

    partition: EquitablePartition
    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.pairs)}

    @cached_property
    def marked_positions(self) -> np.ndarray:
        """Positions of the pairs leaving the marked block."""
        return np.array([i for i, (j, _) in enumerate(self.pairs) if j == 0], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.pairs)


def reduced_arc_basis(p: EquitablePartition) -> ReducedArcBasis:
    """Enumerate the adjacent block pairs of a partition in row-major order."""
    dd = p.quotient_degrees
    pairs = tuple(
        (j, k)
        for j in range(p.num_blocks)
        for k in range(p.num_blocks)
        if dd[j, k] > 0
    )
    return ReducedArcBasis(partition=p, pairs=pairs)


@dataclass(frozen=True, eq=False)
class ReducedDTQWOperator:
    """One step of the discrete-time walk restricted to the block-pair basis."""

    basis: ReducedArcBasis
    matrix: np.ndarray


def search_block_coins(num_blocks: int) -> list[tuple[complex, complex]]:
    """Block coins for search: ``-I`` on the marked block, Grover elsewhere."""
    if num_blocks < 1:
        raise InvalidInputError("need at least one block")
    return [(-1.0 + 0j, -1.0 + 0j)] + [(1.0 + 0j, -1.0 + 0j)] * (num_blocks - 1)


def reduced_dtqw_operator(p: EquitablePartition, block_coins) -> ReducedDTQWOperator:
    """Build the reduced one-step operator for block-constant Grover-type coins.

    The coin's action on the pair state ``(j, k)`` mixes it across the
    pairs ``(j, k')`` with weight ``sqrt(d[j,k] * d[j,k'])`` times
    ``(lam_sym - lam_perp) / degree(j)`` plus ``lam_perp`` on the pair
    itself; the flip-flop shift then transposes each pair.  The result
    is unitary on the pair basis.
    """
    block_coins = [(complex(a), complex(b)) for a, b in block_coins]
    if len(block_coins) != p.num_blocks:
        raise InvalidInputError(
            f"need one coin pair per block: got {len(block_coins)} for {p.num_blocks} blocks"
        )
    flat = np.array([x for pair in block_coins for x in pair], dtype=np.complex128)
    if float(np.abs(np.abs(flat) - 1.0).max()) > UNIMODULAR_TOL:
        raise ContractViolationError("block coin eigenvalues must be unimodular")
    dd = p.quotient_degrees
    degrees = p.block_degrees()
    if (degrees == 0).any():
        isolated = int(np.flatnonzero(degrees == 0)[0])
        raise InvalidInputError(f"block {isolated} has no incident arcs")
    basis = reduced_arc_basis(p)
    index = basis.index
    dim = len(basis)
    u = np.zeros((dim, dim), dtype=np.complex128)
    sqrt_dd = np.sqrt(dd.astype(np.float64))
    for col, (j, k) in enumerate(basis.pairs):
        lam_sym, lam_perp = block_coins[j]
        u[index[(k, j)], col] += lam_perp
        mix = (lam_sym - lam_perp) / degrees[j]
        for k2 in range(p.num_blocks):
            if dd[j, k2] > 0:
                u[index[(k2, j)], col] += mix * sqrt_dd[j, k] * sqrt_dd[j, k2]
    if not is_unitary(u, UNITARY_TOL):
        raise ContractViolationError("reduced step operator failed the unitarity check")
    return ReducedDTQWOperator(basis=basis, matrix=u)


def reduced_uniform_dtqw(p: EquitablePartition, g: Graph) -> np.ndarray:
    """The uniform arc state expressed in the block-pair basis.

    Coefficient ``sqrt(n_j * d[j,k] / (2m))`` on pair ``(j, k)``; unit
    norm because the pair arc counts add up to ``2m``.
    """
    if 2 * g.m != int((p.block_sizes * p.block_degrees()).sum()):
        raise InvalidInputError("partition does not match the graph's arc count")
    basis = reduced_arc_basis(p)
    sizes = p.block_sizes
    dd = p.quotient_degrees
    coeff = np.array(
        [np.sqrt(sizes[j] * dd[j, k] / (2.0 * g.m)) for j, k in basis.pairs],
        dtype=np.complex128,
    )
    return coeff


def _pair_layout(p: EquitablePartition, space: ArcSpace) -> tuple[np.ndarray, np.ndarray]:
    """Per-arc pair position and per-pair normalization ``sqrt(n_j * d[j,k])``."""
    basis = reduced_arc_basis(p)
    num = p.num_blocks
    table = np.full(num * num, -1, dtype=np.int64)
    for i, (j, k) in enumerate(basis.pairs):
        table[j * num + k] = i
    block_of = p.block_of
    pair_of_arc = table[block_of[space.sources] * num + block_of[space.targets]]
    if (pair_of_arc < 0).any():
        raise InvalidInputError("arc space contains arcs outside the partition's pair basis")
    sizes = p.block_sizes
    dd = p.quotient_degrees
    norms = np.array([np.sqrt(sizes[j] * dd[j, k]) for j, k in basis.pairs])
    return pair_of_arc, norms


def lift_dtqw(p: EquitablePartition, space: ArcSpace, reduced: np.ndarray) -> DTQWState:
    """Expand block-pair coefficients into the full arc space.

    Spreads each pair's coefficient uniformly over its arcs; preserves
    norm, so a unit reduced vector lifts to a valid state.
    """
    reduced = np.asarray(reduced, dtype=np.complex128)
    pair_of_arc, norms = _pair_layout(p, space)
    if reduced.shape != norms.shape:
        raise InvalidInputError(
            f"reduced vector of shape {reduced.shape} does not match {norms.shape[0]} pairs"
        )
    amp = reduced[pair_of_arc] / norms[pair_of_arc]
    return DTQWState(space, amp)


def project_dtqw(p: EquitablePartition, state: DTQWState) -> np.ndarray:
    """Project an arc state onto the block-pair basis (adjoint of ``lift_dtqw``)."""
    pair_of_arc, norms = _pair_layout(p, state.space)
    amp = state.amplitudes
    dim = norms.shape[0]
    sums = (
        np.bincount(pair_of_arc, weights=amp.real, minlength=dim)
        + 1j * np.bincount(pair_of_arc, weights=amp.imag, minlength=dim)
    )
    return sums / norms


def reduced_dtqw_search_series(g: Graph, steps: int, marked: int = 0) -> TimeSeries:
    """Marked-vertex probability of the search walk, simulated in the reduced space.

    Builds the coarsest equitable partition around the marked vertex,
    the reduced step operator for the search coins, and iterates from
    the reduced uniform state.  Matches the full-space series exactly.
    """
    if steps < 0:
        raise InvalidInputError(f"steps must be >= 0, got {steps}")
    if not g.is_connected():
        raise InvalidInputError("search needs a connected graph")
    p = coarsest_equitable_partition(g, marked)
    op = reduced_dtqw_operator(p, search_block_coins(p.num_blocks))
    vec = reduced_uniform_dtqw(p, g)
    marked_pos = op.basis.marked_positions
    probs = [float((np.abs(vec[marked_pos]) ** 2).sum())]
    for _ in range(steps):
        vec = op.matrix @ vec
        probs.append(float((np.abs(vec[marked_pos]) ** 2).sum()))
    return TimeSeries(
        label="step",
        times=np.arange(steps + 1),
        probabilities=np.array(probs),
        metadata={
            "walk": "dtqw",
            "mode": "reduced",
            "n": g.n,
            "marked": marked,
            "blocks": p.num_blocks,
            "pairs": len(op.basis),
        },
    )


@dataclass(frozen=True, eq=False)
class ReducedHamiltonian:
    """Search generator restricted to the block basis."""

    matrix: np.ndarray
    gamma: float
    block_sizes: np.ndarray


def reduced_hamiltonian(p: EquitablePartition, gamma: float) -> ReducedHamiltonian:
    """Reduced search generator: marked-block projector plus ``gamma`` times the symmetrized quotient."""
    h = float(gamma) * quotient_adjacency(p)
    h[0, 0] += 1.0
    return ReducedHamiltonian(matrix=h, gamma=float(gamma), block_sizes=p.block_sizes.copy())


def reduced_uniform_ctqw(p: EquitablePartition) -> np.ndarray:
    """The uniform vertex state in the block basis: ``sqrt(n_j / N)`` per block."""
    sizes = p.block_sizes.astype(np.float64)
    return np.sqrt(sizes / sizes.sum()).astype(np.complex128)


def lift_vertex_state(p: EquitablePartition, reduced: np.ndarray) -> np.ndarray:
    """Expand block coefficients into per-vertex amplitudes (norm-preserving)."""
    reduced = np.asarray(reduced, dtype=np.complex128)
    if reduced.shape != (p.num_blocks,):
        raise InvalidInputError(
            f"reduced vector of shape {reduced.shape} does not match {p.num_blocks} blocks"
        )
    scale = reduced / np.sqrt(p.block_sizes.astype(np.float64))
    return scale[p.block_of]


def project_vertex_state(p: EquitablePartition, amplitudes) -> np.ndarray:
    """Project per-vertex amplitudes onto the block basis (adjoint of ``lift_vertex_state``)."""
    amp = np.asarray(amplitudes, dtype=np.complex128)
    if amp.shape != (p.n_vertices,):
        raise InvalidInputError(
            f"amplitude vector of shape {amp.shape} does not match {p.n_vertices} vertices"
        )
    dim = p.num_blocks
    sums = (
        np.bincount(p.block_of, weights=amp.real, minlength=dim)
        + 1j * np.bincount(p.block_of, weights=amp.imag, minlength=dim)
    )
    return sums / np.sqrt(p.block_sizes.astype(np.float64))


def reduced_ctqw_series(p: EquitablePartition, gamma: float, times) -> np.ndarray:
    """Marked-vertex probability on a time grid, computed in the block basis."""
    times = np.asarray(times, dtype=np.float64)
    ham = reduced_hamiltonian(p, gamma)
    eig = hermitian_eigendecompose(ham.matrix)
    coeff = eig.eigenvectors.conj().T @ reduced_uniform_ctqw(p)
    marked_row = eig.eigenvectors[0, :] * coeff
    phases = np.exp(1j * np.outer(np.atleast_1d(times), eig.eigenvalues))
    return np.abs(phases @ marked_row) ** 2


def reduced_ctqw_probability(p: EquitablePartition, gamma: float, t: float) -> float:
    """Marked-vertex probability at a single time, via the block basis."""
    return float(reduced_ctqw_series(p, gamma, [float(t)])[0])


def apex_search_probability(n: int, d: int, t):
    """Closed-form marked-vertex probability for the apex-over-regular family.

    For the graph obtained by joining an apex vertex to every vertex of
    a ``d``-regular graph on ``n - 1`` vertices, searched at coupling
    ``1/d`` from the uniform start:

    ``P(t) = (1 - 1/n) - (1 - 2/n) * cos^2(sqrt(n-1) * t / d)``.

    Accepts scalar or array ``t``.
    """
    if n < 3:
        raise InvalidInputError(f"family needs n >= 3, got {n}")
    if not 1 <= d <= n - 2:
        raise InvalidInputError(f"base degree must satisfy 1 <= d <= n - 2, got {d}")
    t_arr = np.asarray(t, dtype=np.float64)
    value = (1.0 - 1.0 / n) - (1.0 - 2.0 / n) * np.cos(np.sqrt(n - 1.0) * t_arr / d) ** 2
    return float(value) if np.ndim(t) == 0 else value


def apex_search_peak_time(n: int, d: int) -> float:
    """First time the closed-form probability peaks: ``(d * pi / 2) / sqrt(n - 1)``."""
    if n < 3:
        raise InvalidInputError(f"family needs n >= 3, got {n}")
    if not 1 <= d <= n - 2:
        raise InvalidInputError(f"base degree must satisfy 1 <= d <= n - 2, got {d}")
    return (d * np.pi / 2.0) / np.sqrt(n - 1.0)
