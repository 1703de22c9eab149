"""Equitable vertex partitions with the marked vertex isolated.

A partition of the vertices into blocks ``B_0, ..., B_{J-1}`` is
equitable when every vertex in block ``j`` has the same number
``d[j, k]`` of neighbors in block ``k``; diagonal entries count
neighbors inside the vertex's own block.  Block 0 is always the
singleton containing the marked vertex.  The coarsest such partition is
computed by iterated color refinement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import InvalidInputError
from .graphs import Graph

__all__ = [
    "EquitablePartition",
    "PartitionReport",
    "coarsest_equitable_partition",
    "validate_equitable",
    "quotient_adjacency",
    "partition_to_json",
]


@dataclass(frozen=True, eq=False)
class EquitablePartition:
    """Ordered vertex blocks plus the integer quotient degree matrix.

    ``quotient_degrees[j, k]`` is the number of neighbors every vertex
    of block ``j`` has in block ``k``.  Blocks are sorted internally;
    block 0 is the marked singleton.
    """

    blocks: tuple[tuple[int, ...], ...]
    quotient_degrees: np.ndarray

    def __post_init__(self):
        blocks = tuple(tuple(int(v) for v in sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        dd = np.asarray(self.quotient_degrees, dtype=np.int64)
        object.__setattr__(self, "quotient_degrees", dd)
        j = len(blocks)
        if j == 0:
            raise InvalidInputError("partition needs at least one block")
        if dd.shape != (j, j):
            raise InvalidInputError(
                f"quotient degree matrix shape {dd.shape} does not match {j} blocks"
            )
        if len(blocks[0]) != 1:
            raise InvalidInputError("block 0 must be the marked singleton")
        if dd[0, 0] != 0:
            raise InvalidInputError("the marked singleton cannot have neighbors inside itself")
        if (dd < 0).any():
            raise InvalidInputError("quotient degrees must be nonnegative")
        everything = [v for b in blocks for v in b]
        if len(set(everything)) != len(everything):
            raise InvalidInputError("blocks overlap")
        if sorted(everything) != list(range(len(everything))):
            raise InvalidInputError("blocks must cover the contiguous vertex range 0..n-1")
        sizes = np.array([len(b) for b in blocks], dtype=np.int64)
        weighted = sizes[:, None] * dd
        if not np.array_equal(weighted, weighted.T):
            raise InvalidInputError(
                "block sizes and quotient degrees violate arc-count symmetry n_j*d_jk = n_k*d_kj"
            )

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_sizes(self) -> np.ndarray:
        return np.array([len(b) for b in self.blocks], dtype=np.int64)

    @cached_property
    def n_vertices(self) -> int:
        return int(self.block_sizes.sum())

    @cached_property
    def block_of(self) -> np.ndarray:
        """Map each vertex to the index of its block."""
        out = np.empty(self.n_vertices, dtype=np.int64)
        for i, block in enumerate(self.blocks):
            out[list(block)] = i
        return out

    @property
    def marked(self) -> int:
        """The marked vertex (sole member of block 0)."""
        return self.blocks[0][0]

    def block_degrees(self) -> np.ndarray:
        """Common vertex degree within each block (row sums of the quotient degrees)."""
        return self.quotient_degrees.sum(axis=1)


def _arc_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    if g.m == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy()
    e = np.array(g.edges, dtype=np.int64)
    return np.concatenate([e[:, 0], e[:, 1]]), np.concatenate([e[:, 1], e[:, 0]])


def _refinement_round(
    n: int, u_arr: np.ndarray, v_arr: np.ndarray, colors: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """One color-refinement round.

    Splits each color class by the vector of per-color neighbor counts.
    New color ids are assigned deterministically, ordered by (old color,
    smallest vertex id in the class), so the marked class keeps color 0.
    Returns the new coloring and the ``n x num_colors`` count matrix
    used to split (which equals the quotient degree table once the
    coloring is stable).
    """
    c = int(colors.max()) + 1
    counts = np.bincount(u_arr * c + colors[v_arr], minlength=n * c).reshape(n, c)
    signature = np.column_stack([colors, counts])
    uniq, inverse = np.unique(signature, axis=0, return_inverse=True)
    k = uniq.shape[0]
    first_vertex = np.full(k, n, dtype=np.int64)
    np.minimum.at(first_vertex, inverse, np.arange(n))
    order = np.lexsort((first_vertex, uniq[:, 0]))
    rank = np.empty(k, dtype=np.int64)
    rank[order] = np.arange(k)
    return rank[inverse], counts


def coarsest_equitable_partition(g: Graph, marked: int = 0) -> EquitablePartition:
    """Coarsest equitable partition of ``g`` that isolates the marked vertex.

    Starts from two color classes (the marked vertex versus everyone
    else) and refines until stable.  Colors only ever split, so the loop
    terminates after at most ``n`` rounds.
    """
    if not 0 <= marked < g.n:
        raise InvalidInputError(f"marked vertex {marked} outside 0..{g.n - 1}")
    u_arr, v_arr = _arc_arrays(g)
    colors = np.ones(g.n, dtype=np.int64)
    colors[marked] = 0
    while True:
        new_colors, counts = _refinement_round(g.n, u_arr, v_arr, colors)
        stable = int(new_colors.max()) == int(colors.max())
        colors = new_colors
        if stable:
            break
    num_blocks = int(colors.max()) + 1
    blocks = tuple(
        tuple(int(v) for v in np.flatnonzero(colors == b)) for b in range(num_blocks)
    )
    representatives = [b[0] for b in blocks]
    quotient_degrees = counts[representatives, :]
    return EquitablePartition(blocks=blocks, quotient_degrees=quotient_degrees)


@dataclass(frozen=True)
class PartitionReport:
    """Outcome of a brute-force equitability check.

    On failure ``violation`` names the first offending ``(vertex,
    block)`` pair found; on success ``quotient_degrees`` holds the
    verified degree table.
    """

    valid: bool
    message: str = ""
    violation: tuple[int, int] | None = None
    quotient_degrees: np.ndarray | None = None


def validate_equitable(g: Graph, blocks) -> PartitionReport:
    """Check a candidate block list against the equitability conditions, by brute force.

    Verifies that the blocks partition the vertex set, that block 0 is a
    singleton, and that within each block every vertex has identical
    per-block neighbor counts.  Never raises on a bad partition; the
    report says what failed.
    """
    blocks = [tuple(sorted(int(v) for v in b)) for b in blocks]
    if not blocks:
        return PartitionReport(False, "no blocks given")
    if any(len(b) == 0 for b in blocks):
        return PartitionReport(False, "empty block")
    everything = [v for b in blocks for v in b]
    if len(set(everything)) != len(everything):
        return PartitionReport(False, "blocks overlap")
    if sorted(everything) != list(range(g.n)):
        return PartitionReport(False, f"blocks do not cover exactly the vertices 0..{g.n - 1}")
    if len(blocks[0]) != 1:
        return PartitionReport(False, "block 0 must be the marked singleton")
    block_of = {}
    for i, block in enumerate(blocks):
        for v in block:
            block_of[v] = i
    j = len(blocks)
    dd = np.zeros((j, j), dtype=np.int64)
    for i, block in enumerate(blocks):
        reference: np.ndarray | None = None
        for v in block:
            counts = np.zeros(j, dtype=np.int64)
            for w in g.neighbors(v):
                counts[block_of[w]] += 1
            if reference is None:
                reference = counts
            elif not np.array_equal(counts, reference):
                k = int(np.flatnonzero(counts != reference)[0])
                return PartitionReport(
                    False,
                    f"vertex {v} has {counts[k]} neighbors in block {k}, expected {reference[k]}",
                    violation=(v, k),
                )
        dd[i, :] = reference
    return PartitionReport(True, "equitable", quotient_degrees=dd)


def quotient_adjacency(p: EquitablePartition) -> np.ndarray:
    """Symmetrized quotient matrix with entries ``sqrt(d[j,k] * d[k,j])``.

    This is the adjacency-like operator governing the reduced
    continuous-time dynamics; it is symmetric even though the raw
    quotient degree matrix is not.
    """
    dd = p.quotient_degrees.astype(np.float64)
    return np.sqrt(dd * dd.T)


def partition_to_json(p: EquitablePartition) -> str:
    """Serialize blocks and quotient degrees as deterministic JSON."""
    doc = {
        "schema": 1,
        "blocks": [list(b) for b in p.blocks],
        "quotient_degrees": [[int(x) for x in row] for row in p.quotient_degrees],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
