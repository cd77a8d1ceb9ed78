"""Bitset-backed simple graphs and unweighted shortest-path distances.

Vertices are the integers 0..n-1 and adjacency is stored as one Python int
per vertex, so neighborhood operations are single machine-word bit ops for
every order this toolkit supports (n <= 64).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 64


class DisconnectedGraphError(ValueError):
    """An operation that requires a connected graph received one that is not."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected labeled graph; ``rows[v]`` has bit u set iff uv is an edge.

    Adjacency is symmetric with a zero diagonal; both are enforced at
    construction time so every Graph in the system is structurally valid.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge uv added (no-op if present)."""
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge uv removed (no-op if absent)."""
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertex index out of range for order {n}: ({u}, {v})")
    if u == v:
        raise ValueError(f"self-loop ({u}, {v}) not allowed")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from unordered index pairs (duplicates allowed)."""
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def upper_triangle_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs (i, j), i < j, in column-major order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _bfs_levels(rows: tuple[int, ...], n: int, source: int) -> tuple[list[int], int]:
    """Hop counts from ``source`` (-1 where unreachable) and the reached-set mask."""
    dist = [-1] * n
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        m = frontier
        nxt = 0
        while m:
            low = m & -m
            v = low.bit_length() - 1
            dist[v] = d
            nxt |= rows[v]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist, seen


def is_connected(g: Graph) -> bool:
    """True iff a single BFS from vertex 0 reaches every vertex."""
    _, seen = _bfs_levels(g.rows, g.n, 0)
    return seen == (1 << g.n) - 1


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Exact unweighted shortest-path lengths from ``source`` to every vertex."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for order {g.n}")
    dist, seen = _bfs_levels(g.rows, g.n, source)
    if seen != (1 << g.n) - 1:
        unreachable = (~seen & ((1 << g.n) - 1) & -(~seen)).bit_length() - 1
        raise DisconnectedGraphError(
            f"vertex {unreachable} unreachable from {source}; graph is disconnected"
        )
    return np.array(dist, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric matrix of pairwise hop counts of a connected graph."""

    n: int
    d: np.ndarray

    def __post_init__(self):
        self.d.setflags(write=False)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs shortest-path matrix; raises on disconnected input."""
    rows = [bfs_distances(g, v) for v in range(g.n)]
    return DistanceMatrix(g.n, np.vstack(rows))
