"""Graph isomorphism by iterated neighborhood refinement plus backtracking.

Exact for any pair of graphs; tuned for the small orders this toolkit works
at (exhaustive streams up to n = 8, constructed families up to n ~ 20).
Stable colorings are cached per graph so that enumeration streams can test
many candidates against the same representative cheaply.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, _bfs_levels, _bits


@lru_cache(maxsize=65536)
def distance_profiles(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Per-vertex sorted distance rows (-1 marks unreachable vertices)."""
    return tuple(
        tuple(sorted(_bfs_levels(g.rows, g.n, v)[0])) for v in range(g.n)
    )


@lru_cache(maxsize=65536)
def _stable_colors(g: Graph) -> tuple[int, ...]:
    """Vertex colors refined to stability, starting from distance profiles.

    Color ids are ranks of sorted signatures, so isomorphic graphs always
    receive identical color multisets; differing multisets certify
    non-isomorphism.
    """
    n = g.n
    profiles = distance_profiles(g)
    rank = {p: i for i, p in enumerate(sorted(set(profiles)))}
    colors = [rank[p] for p in profiles]
    ncolors = len(rank)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.rows[v]))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return tuple(colors)
        ncolors = len(rank)


def _match_order(g: Graph, colors: tuple[int, ...]) -> list[int]:
    """Vertex order for the backtracking: stay connected, rare colors first."""
    n = g.n
    class_size = [0] * (max(colors) + 1)
    for c in colors:
        class_size[c] += 1
    remaining = set(range(n))
    order = []
    placed_mask = 0
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -(g.rows[v] & placed_mask).bit_count(),
                class_size[colors[v]],
                -g.rows[v].bit_count(),
                v,
            ),
        )
        order.append(best)
        placed_mask |= 1 << best
        remaining.discard(best)
    return order


def isomorphic(g: Graph, h: Graph) -> bool:
    """True iff an edge-preserving bijection between g and h exists."""
    if g.n != h.n:
        return False
    if g.num_edges() != h.num_edges():
        return False
    colors_g = _stable_colors(g)
    colors_h = _stable_colors(h)
    if sorted(colors_g) != sorted(colors_h):
        return False
    n = g.n
    order = _match_order(g, colors_g)
    candidates: dict[int, list[int]] = {}
    for v in range(n):
        candidates.setdefault(colors_h[v], []).append(v)

    mapping = [-1] * n
    used = [False] * n

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        row_v = g.rows[v]
        for w in candidates.get(colors_g[v], ()):
            if used[w]:
                continue
            row_w = h.rows[w]
            ok = True
            for i in range(k):
                u = order[i]
                if (row_v >> u & 1) != (row_w >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(k + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return backtrack(0)
