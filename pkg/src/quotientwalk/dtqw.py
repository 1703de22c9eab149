"""Coined discrete-time quantum walk on the directed arcs of a graph.

The walk state lives on arcs ``(j, k)``.  One step applies a per-vertex
coin to the amplitudes leaving each vertex, then the flip-flop shift
swaps every arc with its reversal.  Coins are Grover-type: each vertex's
coin has eigenvalue ``lam_sym`` on the local uniform superposition of
outgoing arcs and ``lam_perp`` on its orthogonal complement, both
unimodular.  The search coin is ``-I`` at the marked vertex (both
eigenvalues ``-1``) and the standard Grover coin (``+1``/``-1``)
elsewhere.

The module also contains the one-dimensional Hadamard walk together
with the arcsine-like limit density of its rescaled position, used to
demonstrate ballistic spreading.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ContractViolationError, InvalidInputError
from .graphs import ArcSpace, Graph
from .linalg import STATE_NORM_TOL
from .timeseries import TimeSeries

__all__ = [
    "UNIMODULAR_TOL",
    "CoinSpec",
    "DTQWState",
    "coin_matrix",
    "search_coin_spec",
    "uniform_arc_state",
    "shift",
    "apply_coin",
    "dtqw_step",
    "dtqw_evolve",
    "dtqw_unitary_matrix",
    "dtqw_search_series",
    "vertex_probability",
    "vertex_distribution",
    "hadamard_walk_line",
    "konno_density",
    "konno_cdf",
    "kolmogorov_distance_to_limit",
]

#: Maximum allowed deviation of a coin eigenvalue's modulus from 1.
UNIMODULAR_TOL = 1e-12


def _check_unimodular(values: np.ndarray, what: str) -> None:
    if values.size and float(np.abs(np.abs(values) - 1.0).max()) > UNIMODULAR_TOL:
        raise ContractViolationError(f"{what} must be unimodular (|value| = 1)")


@dataclass(frozen=True, eq=False)
class CoinSpec:
    """Per-vertex Grover-type coin eigenvalues.

    ``lam_sym[v]`` is the eigenvalue on vertex ``v``'s uniform outgoing
    superposition, ``lam_perp[v]`` the eigenvalue on its orthogonal
    complement.  Degree-1 vertices always act as the scalar
    ``lam_sym``; degree-0 vertices carry no arcs and their entries are
    inert.
    """

    lam_sym: np.ndarray
    lam_perp: np.ndarray

    def __post_init__(self):
        sym = np.asarray(self.lam_sym, dtype=np.complex128)
        perp = np.asarray(self.lam_perp, dtype=np.complex128)
        if sym.ndim != 1 or sym.shape != perp.shape:
            raise InvalidInputError("lam_sym and lam_perp must be 1-D arrays of equal length")
        _check_unimodular(sym, "coin eigenvalues")
        _check_unimodular(perp, "coin eigenvalues")
        object.__setattr__(self, "lam_sym", sym)
        object.__setattr__(self, "lam_perp", perp)

    @property
    def n(self) -> int:
        return int(self.lam_sym.shape[0])

    @classmethod
    def grover(cls, n: int) -> "CoinSpec":
        """The standard Grover diffusion coin at every vertex."""
        return cls(np.ones(n, dtype=np.complex128), -np.ones(n, dtype=np.complex128))

    @classmethod
    def constant(cls, n: int, lam_sym: complex, lam_perp: complex) -> "CoinSpec":
        """The same Grover-type coin at every vertex."""
        return cls(
            np.full(n, lam_sym, dtype=np.complex128),
            np.full(n, lam_perp, dtype=np.complex128),
        )

    @classmethod
    def from_block_coins(cls, partition, pairs) -> "CoinSpec":
        """Expand one ``(lam_sym, lam_perp)`` pair per partition block to all vertices."""
        pairs = list(pairs)
        if len(pairs) != partition.num_blocks:
            raise InvalidInputError(
                f"need one coin pair per block: got {len(pairs)} for {partition.num_blocks} blocks"
            )
        sym = np.empty(partition.n_vertices, dtype=np.complex128)
        perp = np.empty(partition.n_vertices, dtype=np.complex128)
        for block, (ls, lp) in zip(partition.blocks, pairs):
            sym[list(block)] = ls
            perp[list(block)] = lp
        return cls(sym, perp)

    def block_coins(self, partition) -> list[tuple[complex, complex]]:
        """Extract one coin pair per block; raises if some block mixes coins."""
        out = []
        for i, block in enumerate(partition.blocks):
            idx = list(block)
            sym = self.lam_sym[idx]
            perp = self.lam_perp[idx]
            if np.abs(sym - sym[0]).max() > UNIMODULAR_TOL or np.abs(perp - perp[0]).max() > UNIMODULAR_TOL:
                raise InvalidInputError(f"coin is not constant on block {i}")
            out.append((complex(sym[0]), complex(perp[0])))
        return out


def coin_matrix(degree: int, lam_sym: complex, lam_perp: complex) -> np.ndarray:
    """Dense ``degree x degree`` Grover-type coin.

    Equals ``(lam_sym - lam_perp)/degree`` times the all-ones matrix
    plus ``lam_perp`` times the identity; unitary whenever both
    eigenvalues are unimodular.
    """
    if degree < 1:
        raise InvalidInputError(f"coin needs degree >= 1, got {degree}")
    _check_unimodular(np.array([lam_sym, lam_perp], dtype=np.complex128), "coin eigenvalues")
    mix = (complex(lam_sym) - complex(lam_perp)) / degree
    return np.full((degree, degree), mix, dtype=np.complex128) + complex(lam_perp) * np.eye(degree)


@dataclass(frozen=True, eq=False)
class DTQWState:
    """Unit-norm complex amplitudes over the arcs of a graph."""

    space: ArcSpace
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=np.complex128)
        if amp.shape != (self.space.size,):
            raise InvalidInputError(
                f"amplitude vector of shape {amp.shape} does not match {self.space.size} arcs"
            )
        if not np.isfinite(amp.view(np.float64)).all():
            raise ContractViolationError("state contains non-finite amplitudes")
        norm_sq = float(np.vdot(amp, amp).real)
        if abs(norm_sq - 1.0) > STATE_NORM_TOL:
            raise ContractViolationError(f"state squared norm {norm_sq!r} deviates from 1")
        object.__setattr__(self, "amplitudes", amp)


def uniform_arc_state(g: Graph | ArcSpace) -> DTQWState:
    """Equal-amplitude state over all arcs (the standard search start)."""
    space = g if isinstance(g, ArcSpace) else ArcSpace(g)
    if space.size == 0:
        raise InvalidInputError("edgeless graph has no arcs to put amplitude on")
    amp = np.full(space.size, 1.0 / np.sqrt(space.size), dtype=np.complex128)
    return DTQWState(space, amp)


def shift(state: DTQWState) -> DTQWState:
    """Flip-flop shift: send the amplitude on each arc to its reversal."""
    return DTQWState(state.space, state.amplitudes[state.space.reverse])


def _coin_arrays(space: ArcSpace, spec: CoinSpec) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex mixing weight (lam_sym - lam_perp)/degree and lam_perp, zero-padded at degree 0."""
    g = space.graph
    if spec.n != g.n:
        raise InvalidInputError(f"coin spec for {spec.n} vertices does not match graph on {g.n}")
    degs = g.degrees
    nonzero = degs > 0
    mix = np.zeros(g.n, dtype=np.complex128)
    mix[nonzero] = (spec.lam_sym[nonzero] - spec.lam_perp[nonzero]) / degs[nonzero]
    return mix, spec.lam_perp


def apply_coin(state: DTQWState, spec: CoinSpec) -> DTQWState:
    """Apply the direct-sum coin: each vertex's coin acts on its outgoing arcs."""
    space = state.space
    mix, perp = _coin_arrays(space, spec)
    amp = state.amplitudes
    nonzero = space.graph.degrees > 0
    sums = np.zeros(space.graph.n, dtype=np.complex128)
    starts = space.out_start[:-1][nonzero]
    if starts.size:
        sums[nonzero] = np.add.reduceat(amp, starts)
    src = space.sources
    return DTQWState(space, mix[src] * sums[src] + perp[src] * amp)


def dtqw_step(state: DTQWState, spec: CoinSpec) -> DTQWState:
    """One walk step: coin, then flip-flop shift."""
    return shift(apply_coin(state, spec))


def dtqw_evolve(state: DTQWState, spec: CoinSpec, steps: int) -> list[DTQWState]:
    """States after 0..steps walk steps (``steps + 1`` snapshots)."""
    if steps < 0:
        raise InvalidInputError(f"steps must be >= 0, got {steps}")
    out = [state]
    for _ in range(steps):
        state = dtqw_step(state, spec)
        out.append(state)
    return out


def dtqw_unitary_matrix(g: Graph, spec: CoinSpec) -> np.ndarray:
    """Assemble the one-step evolution as a dense matrix (small graphs only)."""
    space = ArcSpace(g)
    if space.size == 0:
        raise InvalidInputError("edgeless graph has no arc space")
    u = np.zeros((space.size, space.size), dtype=np.complex128)
    for i in range(space.size):
        basis = np.zeros(space.size, dtype=np.complex128)
        basis[i] = 1.0
        u[:, i] = dtqw_step(DTQWState(space, basis), spec).amplitudes
    return u


def vertex_probability(state: DTQWState, v: int) -> float:
    """Probability of finding the walker at vertex ``v`` (its outgoing arcs)."""
    sl = state.space.out_slice(v)
    chunk = state.amplitudes[sl]
    return float(np.vdot(chunk, chunk).real)


def vertex_distribution(state: DTQWState) -> np.ndarray:
    """Probability of each vertex; sums to 1."""
    space = state.space
    weights = np.abs(state.amplitudes) ** 2
    return np.bincount(space.sources, weights=weights, minlength=space.graph.n)


def search_coin_spec(g: Graph, marked: int = 0) -> CoinSpec:
    """Search coins: ``-I`` at the marked vertex, the Grover coin elsewhere.

    Requires a connected graph; on a disconnected one the walk could
    never move amplitude toward the target.
    """
    if not 0 <= marked < g.n:
        raise InvalidInputError(f"marked vertex {marked} outside 0..{g.n - 1}")
    if not g.is_connected():
        raise InvalidInputError("search needs a connected graph")
    spec = CoinSpec.grover(g.n)
    sym = spec.lam_sym.copy()
    sym[marked] = -1.0
    return CoinSpec(sym, spec.lam_perp)


def dtqw_search_series(g: Graph, steps: int, marked: int = 0) -> TimeSeries:
    """Marked-vertex probability after each of 0..steps full-space search steps."""
    if steps < 0:
        raise InvalidInputError(f"steps must be >= 0, got {steps}")
    spec = search_coin_spec(g, marked)
    state = uniform_arc_state(g)
    probs = [vertex_probability(state, marked)]
    for _ in range(steps):
        state = dtqw_step(state, spec)
        probs.append(vertex_probability(state, marked))
    return TimeSeries(
        label="step",
        times=np.arange(steps + 1),
        probabilities=np.array(probs),
        metadata={
            "walk": "dtqw",
            "mode": "full",
            "n": g.n,
            "arcs": 2 * g.m,
            "marked": marked,
        },
    )


def hadamard_walk_line(steps: int) -> np.ndarray:
    """Exact position distribution of the symmetric 1-D Hadamard walk.

    The walker starts at the origin with coin state ``(1, i)/sqrt(2)``,
    which keeps the distribution symmetric.  Returns probabilities for
    positions ``-steps..steps`` (length ``2*steps + 1``); odd-parity
    positions carry zero mass.
    """
    if steps < 1:
        raise InvalidInputError(f"walk needs steps >= 1, got {steps}")
    size = 2 * steps + 1
    left = np.zeros(size, dtype=np.complex128)
    right = np.zeros(size, dtype=np.complex128)
    origin = steps
    left[origin] = 1.0 / np.sqrt(2.0)
    right[origin] = 1j / np.sqrt(2.0)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    zero = np.zeros(1, dtype=np.complex128)
    for _ in range(steps):
        new_left = inv_sqrt2 * (left + right)
        new_right = inv_sqrt2 * (left - right)
        left = np.concatenate([new_left[1:], zero])
        right = np.concatenate([zero, new_right[:-1]])
    return np.abs(left) ** 2 + np.abs(right) ** 2


_SUPPORT_EDGE = 1.0 / np.sqrt(2.0)


def konno_density(x):
    """Limit density of the rescaled Hadamard-walk position.

    ``f(x) = 1 / (pi (1 - x^2) sqrt(1 - 2 x^2))`` on ``|x| < 1/sqrt(2)``
    and zero outside; integrates to 1.  Accepts scalars or arrays.
    """
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = np.zeros_like(arr)
    inside = np.abs(arr) < _SUPPORT_EDGE
    xi = arr[inside]
    out[inside] = 1.0 / (np.pi * (1.0 - xi**2) * np.sqrt(1.0 - 2.0 * xi**2))
    return float(out[0]) if np.isscalar(x) or np.ndim(x) == 0 else out


def konno_cdf(x):
    """Distribution function of ``konno_density`` in closed form.

    ``F(x) = 1/2 + arctan(x / sqrt(1 - 2 x^2)) / pi`` inside the
    support, clamped to 0 and 1 outside.  Accepts scalars or arrays.
    """
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = np.where(arr <= -_SUPPORT_EDGE, 0.0, 1.0)
    inside = np.abs(arr) < _SUPPORT_EDGE
    xi = arr[inside]
    out[inside] = 0.5 + np.arctan(xi / np.sqrt(1.0 - 2.0 * xi**2)) / np.pi
    return float(out[0]) if np.isscalar(x) or np.ndim(x) == 0 else out


def kolmogorov_distance_to_limit(steps: int) -> float:
    """Kolmogorov distance between the rescaled walk position and its limit law.

    Runs the exact ``steps``-step Hadamard walk, rescales position by
    ``1/steps``, and returns ``sup_x |P(X/steps <= x) - F(x)|`` against
    the closed-form limit distribution function.
    """
    probs = hadamard_walk_line(steps)
    positions = np.arange(-steps, steps + 1, dtype=np.float64) / steps
    cum = np.cumsum(probs)
    limit = konno_cdf(positions)
    below = cum - probs  # CDF just left of each atom
    return float(np.maximum(np.abs(cum - limit), np.abs(below - limit)).max())
