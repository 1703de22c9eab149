"""Simple undirected graphs, standard families, arc spaces, and edge-list I/O.

Vertices are the contiguous integers ``0..n-1``.  Throughout the package
the search target ("marked" vertex) is vertex 0 by convention;
``swap_vertices`` relabels a graph so an arbitrary target lands on 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import (
    EdgeListParseError,
    InvalidInputError,
    InvalidSizeError,
    RetryExhaustedError,
)

__all__ = [
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
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: a vertex count and a canonical sorted edge tuple.

    Edges are stored as ``(u, v)`` with ``u < v`` in lexicographic order,
    so two graphs compare equal iff they have identical vertex sets and
    edge sets.  Self-loops and duplicate (including reversed) edges are
    rejected.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSizeError(f"graph needs at least one vertex, got n={self.n}")
        seen: set[tuple[int, int]] = set()
        canon = []
        for edge in self.edges:
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInputError(f"edge {edge!r} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InvalidInputError(f"duplicate edge {pair}")
            seen.add(pair)
            canon.append(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        """Number of undirected edges."""
        return len(self.edges)

    @cached_property
    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        """Neighbors of each vertex, ascending."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(lst)) for lst in nbrs)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(lst) for lst in self.neighbor_lists], dtype=np.int64)

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.neighbor_lists[v]

    def regular_degree(self) -> int | None:
        """Common vertex degree if the graph is regular, else None."""
        degs = self.degrees
        if (degs == degs[0]).all():
            return int(degs[0])
        return None

    def is_connected(self) -> bool:
        """True iff every vertex is reachable from vertex 0."""
        if self.n == 1:
            return True
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.neighbor_lists[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return bool(seen.all())

    def adjacency_matrix(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix (zero diagonal)."""
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a


class ArcSpace:
    """Directed-arc basis of a graph: both orientations of every edge.

    Arcs are sorted lexicographically by ``(source, target)``, which
    makes the arcs leaving any one vertex a contiguous index range
    (``out_slice``).  ``reverse`` is the index permutation sending each
    arc to its reversal; it is an involution.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        arcs: list[tuple[int, int]] = []
        for u, v in graph.edges:
            arcs.append((u, v))
            arcs.append((v, u))
        arcs.sort()
        self.arcs: tuple[tuple[int, int], ...] = tuple(arcs)
        self.size = len(arcs)
        self.index: dict[tuple[int, int], int] = {arc: i for i, arc in enumerate(arcs)}
        self.sources = np.array([a[0] for a in arcs], dtype=np.int64)
        self.targets = np.array([a[1] for a in arcs], dtype=np.int64)
        counts = np.bincount(self.sources, minlength=graph.n) if arcs else np.zeros(graph.n, dtype=np.int64)
        self.out_start = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        self.reverse = np.array([self.index[(v, u)] for (u, v) in arcs], dtype=np.int64)

    def out_slice(self, v: int) -> slice:
        """Index slice of the arcs whose source is vertex ``v``."""
        return slice(int(self.out_start[v]), int(self.out_start[v + 1]))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"ArcSpace(n={self.graph.n}, arcs={self.size})"


def arc_space(g: Graph) -> ArcSpace:
    """Build the directed-arc basis of ``g``."""
    return ArcSpace(g)


def complete_graph(n: int) -> Graph:
    """Complete graph on ``n >= 2`` vertices."""
    if n < 2:
        raise InvalidSizeError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices."""
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def hypercube_graph(dim: int) -> Graph:
    """Hypercube of dimension ``dim >= 1`` on ``2**dim`` vertices.

    Vertices are bit strings; two vertices are adjacent iff they differ
    in exactly one bit.
    """
    if dim < 1:
        raise InvalidSizeError(f"hypercube needs dimension >= 1, got {dim}")
    n = 1 << dim
    edges = tuple(
        (v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)
    )
    return Graph(n, edges)


def torus_grid(rows: int, cols: int) -> Graph:
    """4-regular grid with wraparound in both directions; both sides >= 3."""
    if rows < 3 or cols < 3:
        raise InvalidSizeError(f"torus grid needs rows, cols >= 3, got {rows}x{cols}")

    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges: set[tuple[int, int]] = set()
    for r in range(rows):
        for c in range(cols):
            for other in (vid((r + 1) % rows, c), vid(r, (c + 1) % cols)):
                a, b = vid(r, c), other
                edges.add((a, b) if a < b else (b, a))
    return Graph(rows * cols, tuple(sorted(edges)))


def random_regular_graph(n: int, d: int, seed: int, max_tries: int = 1000) -> Graph:
    """Uniform-ish random simple ``d``-regular graph via the pairing model.

    Draws random perfect matchings on ``n*d`` stubs and rejects any
    outcome with self-loops or parallel edges.  Deterministic for a
    fixed ``seed``.

    Raises
    ------
    InvalidSizeError
        If ``d`` is not in ``0..n-1`` or ``n*d`` is odd.
    RetryExhaustedError
        If no simple graph appears within ``max_tries`` attempts.
    """
    if not 0 <= d < n:
        raise InvalidSizeError(f"regular degree must satisfy 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2:
        raise InvalidSizeError(f"n*d must be even, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        shuffled = rng.permutation(stubs)
        u, v = shuffled[0::2], shuffled[1::2]
        if (u == v).any():
            continue
        pairs = {(int(a), int(b)) if a < b else (int(b), int(a)) for a, b in zip(u, v)}
        if len(pairs) < u.shape[0]:
            continue
        return Graph(n, tuple(sorted(pairs)))
    raise RetryExhaustedError(
        f"no simple {d}-regular graph found in {max_tries} pairing attempts (n={n}, seed={seed})"
    )


def apex_join(base: Graph) -> Graph:
    """Join a new vertex 0 to every vertex of a regular base graph.

    The base's vertex ``i`` becomes ``i + 1``.  Raises
    ``InvalidInputError`` if the base is not regular.
    """
    if base.regular_degree() is None:
        raise InvalidInputError("apex_join needs a regular base graph")
    edges = [(0, v + 1) for v in range(base.n)]
    edges.extend((u + 1, v + 1) for u, v in base.edges)
    return Graph(base.n + 1, tuple(edges))


def demo_graph() -> Graph:
    """Five-vertex fixture whose coarsest marked partition has three blocks.

    With vertex 0 marked, the blocks are ``{0}``, ``{1, 4}``, ``{2, 3}``:
    a small irregular graph that still collapses under symmetry.
    """
    return Graph(5, ((0, 1), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)))


def swap_vertices(g: Graph, a: int, b: int) -> Graph:
    """Relabel ``g`` by the transposition of vertices ``a`` and ``b``."""
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise InvalidInputError(f"vertices {a}, {b} must lie in 0..{g.n - 1}")
    if a == b:
        return g

    def relabel(x: int) -> int:
        if x == a:
            return b
        if x == b:
            return a
        return x

    return Graph(g.n, tuple((relabel(u), relabel(v)) for u, v in g.edges))


def read_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Format: optional ``#`` comment lines and blank lines anywhere; the
    first data line is ``n m`` (vertex and edge counts); each further
    data line is one edge ``u v``.  Errors carry the offending line
    number.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected two whitespace-separated integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer token in {raw!r}") from None
        if header is None:
            if a < 1 or b < 0:
                raise EdgeListParseError(lineno, f"invalid 'n m' header: {raw!r}")
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise EdgeListParseError(lineno, f"more than the declared {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListParseError(lineno, f"edge endpoint out of range 0..{n - 1}: {raw!r}")
        if a == b:
            raise EdgeListParseError(lineno, f"self-loop {a} {b}")
        pair = (a, b) if a < b else (b, a)
        if pair in seen:
            raise EdgeListParseError(lineno, f"duplicate or reversed edge {a} {b}")
        seen.add(pair)
        edges.append(pair)
    if header is None:
        raise EdgeListParseError(0, "missing 'n m' header line")
    if len(edges) != header[1]:
        raise EdgeListParseError(0, f"declared {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def write_edge_list(g: Graph) -> str:
    """Serialize a Graph in the canonical edge-list format.

    ``read_edge_list(write_edge_list(g))`` reproduces ``g`` exactly.
    """
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
