"""Simple undirected graphs, distance matrices and strong-regularity detection."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import DisconnectedError, InputError


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    The adjacency relation is held as a dense symmetric boolean matrix with
    an empty diagonal. The array is read-only so instances can be shared.
    """

    __slots__ = ("_adj",)

    def __init__(self, adjacency):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] < 1:
            raise InputError(f"adjacency must be a non-empty square matrix, got shape {adj.shape}")
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise InputError("adjacency must have an empty diagonal (no loops)")
        adj.setflags(write=False)
        self._adj = adj

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        return self._adj.astype(dtype)

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    @property
    def num_edges(self) -> int:
        return int(np.triu(self._adj, 1).sum())

    def is_connected(self) -> bool:
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        frontier = seen.copy()
        while frontier.any():
            frontier = self._adj[frontier].any(axis=0) & ~seen
            seen |= frontier
        return bool(seen.all())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs graph distances of a connected graph."""

    n: int
    d: np.ndarray
    diameter: int

    def row_sums(self) -> np.ndarray:
        return self.d.sum(axis=1)


@dataclass(frozen=True)
class SrgParams:
    """Parameters ``(n, k, lambda, mu)`` of a strongly regular graph.

    ``lam`` is ``None`` when undetermined (empty graph: no adjacent pair) and
    ``mu`` is ``None`` when undetermined (complete graph: no non-adjacent pair).
    """

    n: int
    k: int
    lam: int | None
    mu: int | None

    @property
    def determined(self) -> bool:
        return self.lam is not None and self.mu is not None

    def as_tuple(self) -> tuple:
        return (self.n, self.k, self.lam, self.mu)

    def __str__(self):
        fmt = lambda v: "*" if v is None else str(v)  # noqa: E731
        return f"srg({self.n},{self.k},{fmt(self.lam)},{fmt(self.mu)})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from vertex pairs.

    Pairs are symmetrised and duplicates collapse. Out-of-range vertices and
    self-loops raise :class:`InputError`.
    """
    if int(n) != n or n < 1:
        raise InputError(f"vertex count must be a positive integer, got {n!r}")
    n = int(n)
    adj = np.zeros((n, n), dtype=bool)
    for pair in edges:
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise InputError(f"edge must be a vertex pair, got {pair!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    First non-comment line is ``n m``; then ``m`` lines ``u v`` with 0-based
    vertices. Everything after a ``#`` is ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {raw.strip()!r}")
        try:
            rows.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers, got {raw.strip()!r}") from None
    if not rows:
        raise InputError("empty edge list: missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if m < 0 or len(edges) != m:
        raise InputError(f"header announces {m} edges but {len(edges)} were given")
    return from_edge_list(n, edges)


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return Graph(adj)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs shortest path lengths by breadth-first search.

    Raises :class:`DisconnectedError` if some pair is unreachable.
    """
    dist = shortest_path(csr_matrix(g.adjacency), method="D", unweighted=True, directed=False)
    if np.isinf(dist).any():
        raise DisconnectedError(f"graph on {g.n} vertices is disconnected; distance is undefined")
    d = dist.astype(np.int64)
    d.setflags(write=False)
    return DistanceMatrix(n=g.n, d=d, diameter=int(d.max()))


def detect_srg(g: Graph) -> SrgParams | None:
    """Return the strongly regular parameters of ``g``, or ``None`` if it is not one.

    Complete graphs come back with ``mu=None`` and empty graphs with
    ``lam=None`` since the corresponding count is taken over no pairs.
    """
    degs = g.degrees()
    if not (degs == degs[0]).all():
        return None
    a = g.adjacency_matrix()
    common = a @ a
    off = ~np.eye(g.n, dtype=bool)
    adjacent = common[g.adjacency]
    nonadjacent = common[~g.adjacency & off]

    lam = mu = None
    if adjacent.size:
        if not (adjacent == adjacent[0]).all():
            return None
        lam = int(adjacent[0])
    if nonadjacent.size:
        if not (nonadjacent == nonadjacent[0]).all():
            return None
        mu = int(nonadjacent[0])
    return SrgParams(g.n, int(degs[0]), lam, mu)
