"""Continuous-time quantum walk on graph vertices.

Dynamics are ``exp(i*t*M)`` for a Hermitian generator M.  For search,
the generator is the rank-one marked-vertex projector plus ``gamma``
times the adjacency matrix.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidInputError
from .graphs import Graph
from .linalg import HermitianEigen, hermitian_eigendecompose
from .timeseries import TimeSeries

__all__ = [
    "SearchHamiltonian",
    "search_hamiltonian",
    "uniform_vertex_state",
    "ctqw_evolve",
    "vertex_probability",
    "vertex_distribution",
    "ctqw_search_series",
]


@dataclass(frozen=True, eq=False)
class SearchHamiltonian:
    """Search generator ``|marked><marked| + gamma * A`` for a graph."""

    matrix: np.ndarray
    gamma: float
    marked: int


def search_hamiltonian(g: Graph, marked: int = 0, gamma: float = 1.0) -> SearchHamiltonian:
    """Assemble the search generator.

    Warns (rather than fails) on a disconnected graph: the plain
    continuous-time walk is still well defined there, but search can
    never reach across components.
    """
    if not 0 <= marked < g.n:
        raise InvalidInputError(f"marked vertex {marked} outside 0..{g.n - 1}")
    if not g.is_connected():
        warnings.warn(
            "graph is disconnected; search dynamics cannot mix across components",
            stacklevel=2,
        )
    h = float(gamma) * g.adjacency_matrix()
    h[marked, marked] += 1.0
    return SearchHamiltonian(matrix=h, gamma=float(gamma), marked=marked)


def uniform_vertex_state(n: int) -> np.ndarray:
    """Equal-amplitude state over ``n`` vertices."""
    if n < 1:
        raise InvalidInputError(f"state needs n >= 1 vertices, got {n}")
    return np.full(n, 1.0 / np.sqrt(n), dtype=np.complex128)


def ctqw_evolve(matrix, t: float, amplitudes, eig: HermitianEigen | None = None) -> np.ndarray:
    """Apply ``exp(i*t*M)`` to a vertex amplitude vector.

    Pass a precomputed ``eig`` to amortize the eigendecomposition over
    many times; ``matrix`` is ignored in that case.
    """
    if eig is None:
        eig = hermitian_eigendecompose(matrix)
    return eig.exp_apply(t, amplitudes)


def vertex_probability(amplitudes, v: int) -> float:
    """Probability of vertex ``v`` under a vertex amplitude vector."""
    return float(np.abs(np.asarray(amplitudes)[v]) ** 2)


def vertex_distribution(amplitudes) -> np.ndarray:
    """Probability of each vertex; sums to 1 for a unit state."""
    return np.abs(np.asarray(amplitudes, dtype=np.complex128)) ** 2


def ctqw_search_series(g: Graph, marked: int, gamma: float, times) -> TimeSeries:
    """Marked-vertex probability of the full-space search walk on a time grid.

    The walk starts in the uniform vertex state.  Requires a connected
    graph; the generator is eigendecomposed once and reused across the
    whole grid.
    """
    if not g.is_connected():
        raise InvalidInputError("search needs a connected graph")
    times = np.asarray(times, dtype=np.float64)
    ham = search_hamiltonian(g, marked, gamma)
    eig = hermitian_eigendecompose(ham.matrix)
    start = uniform_vertex_state(g.n)
    coeff = eig.eigenvectors.conj().T @ start
    marked_row = eig.eigenvectors[marked, :] * coeff
    phases = np.exp(1j * np.outer(times, eig.eigenvalues))
    probs = np.abs(phases @ marked_row) ** 2
    return TimeSeries(
        label="t",
        times=times,
        probabilities=probs,
        metadata={
            "walk": "ctqw",
            "mode": "full",
            "n": g.n,
            "marked": marked,
            "gamma": float(gamma),
        },
    )
