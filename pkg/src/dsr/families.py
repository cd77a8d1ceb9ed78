"""Builders for the named graph families: complete graphs, a clique with an
attached vertex, and the two-clique bridge family with its flattening
transform.

Vertex numbering is fixed so spectral block patterns can be asserted
positionally: the first clique occupies 0..n1-1 with the hub at index 0,
the second clique occupies n1..n1+n2-1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graphs import Graph


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def kpq(p: int, q: int) -> Graph:
    """K_p plus one extra vertex (index p) joined to vertices 0..q-1.

    The result has order p+1 and edge connectivity q.
    """
    if q < 1 or q > p:
        raise ValueError(f"need 1 <= q <= p, got p={p}, q={q}")
    full = (1 << p) - 1
    attach = (1 << q) - 1
    rows = [full ^ (1 << v) for v in range(p)]
    for v in range(q):
        rows[v] |= 1 << p
    rows.append(attach)
    return Graph(p + 1, tuple(rows))


@dataclass(frozen=True)
class BridgeFamilyParams:
    """Parameters of a two-clique graph joined by r bridge edges.

    ``t`` of the bridge edges run from the hub (vertex number 1 of the first
    clique) to vertices 1..t of the second clique; the remaining r-t are
    ``cross_edges``, given as (i, j) pairs of within-clique vertex numbers
    counted from 1, with i >= 2 so none touches the hub.
    """

    n1: int
    n2: int
    r: int
    t: int
    cross_edges: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "cross_edges", tuple(tuple(e) for e in self.cross_edges))
        if self.r < 1:
            raise ValueError(f"need r >= 1, got {self.r}")
        if not 1 <= self.t <= self.r:
            raise ValueError(f"need 1 <= t <= r, got t={self.t}, r={self.r}")
        if min(self.n1, self.n2) < self.r + 2:
            raise ValueError(
                f"need min(n1, n2) >= r+2, got n1={self.n1}, n2={self.n2}, r={self.r}"
            )
        if len(self.cross_edges) != self.r - self.t:
            raise ValueError(
                f"need exactly r-t={self.r - self.t} cross edges, got {len(self.cross_edges)}"
            )
        seen = set()
        for i, j in self.cross_edges:
            if not 2 <= i <= self.n1:
                raise ValueError(f"cross edge first endpoint {i} not in 2..{self.n1}")
            if not 1 <= j <= self.n2:
                raise ValueError(f"cross edge second endpoint {j} not in 1..{self.n2}")
            if (i, j) in seen:
                raise ValueError(f"duplicate cross edge ({i}, {j})")
            seen.add((i, j))

    @property
    def order(self) -> int:
        return self.n1 + self.n2


def random_cross_edges(
    n1: int, n2: int, r: int, t: int, rng: random.Random | int
) -> tuple[tuple[int, int], ...]:
    """Seeded sample of r-t distinct non-hub bridge edges."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    space = [(i, j) for i in range(2, n1 + 1) for j in range(1, n2 + 1)]
    return tuple(sorted(rng.sample(space, r - t)))


def _clique_rows(offset: int, size: int, total: int) -> list[int]:
    block = ((1 << size) - 1) << offset
    rows = [0] * total
    for v in range(offset, offset + size):
        rows[v] = block ^ (1 << v)
    return rows


def bridge_graph(params: BridgeFamilyParams) -> Graph:
    """Two disjoint cliques joined by the r bridge edges described by ``params``."""
    n1, n2 = params.n1, params.n2
    n = params.order
    rows = [a | b for a, b in zip(_clique_rows(0, n1, n), _clique_rows(n1, n2, n))]
    for j in range(1, params.t + 1):
        v = n1 + j - 1
        rows[0] |= 1 << v
        rows[v] |= 1
    for i, j in params.cross_edges:
        u, v = i - 1, n1 + j - 1
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def bridge_graph_tilde(params: BridgeFamilyParams) -> Graph:
    """Flattened form of the bridge graph: the hub keeps degree r, everything
    else collapses to one big clique.

    The hub stays joined to its t bridge targets and to the last r-t vertices
    of its own clique; all remaining hub edges are dropped and every pair
    between the rest of the first clique and the whole second clique is
    joined.  The result is isomorphic to kpq(n1+n2-1, r) for every valid
    parameter set, independent of t and cross_edges.
    """
    n1, n2 = params.n1, params.n2
    r, t = params.r, params.t
    n = params.order
    big = ((1 << n) - 1) ^ 1  # everything except the hub
    rows = [0] * n
    for v in range(1, n):
        rows[v] = big ^ (1 << v)
    hub_mask = 0
    for j in range(1, t + 1):
        hub_mask |= 1 << (n1 + j - 1)
    for i in range(n1 - (r - t) + 1, n1 + 1):
        hub_mask |= 1 << (i - 1)
    rows[0] = hub_mask
    for v in range(1, n):
        if hub_mask >> v & 1:
            rows[v] |= 1
    return Graph(n, tuple(rows))


def tilde_level_groups(
    params: BridgeFamilyParams,
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Index groups (hub, non-neighbors, hub neighbors) of the flattened graph.

    The Perron vector of the flattened graph is constant on each group, with
    the hub largest and its neighbors smallest.
    """
    n1, n2 = params.n1, params.n2
    r, t = params.r, params.t
    near = tuple(range(n1 - (r - t), n1)) + tuple(range(n1, n1 + t))
    mid = tuple(range(1, n1 - (r - t))) + tuple(range(n1 + t, n1 + n2))
    return (0,), mid, near
