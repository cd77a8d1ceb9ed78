"""Global edge connectivity with an explicit minimum-cut certificate.

The production path is the minimum-cut phase contraction scheme on unit
weights; ``brute_force_min_cut`` scans every bipartition and exists as an
independent oracle for tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DisconnectedGraphError, Graph, _bits, is_connected


@dataclass(frozen=True)
class CutCertificate:
    """A minimum edge cut: its size, crossing edges, and vertex bipartition."""

    size: int
    cut_edges: tuple[tuple[int, int], ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def _certificate(g: Graph, side_mask: int) -> CutCertificate:
    full = (1 << g.n) - 1
    if not (1 << 0) & side_mask:
        side_mask = full ^ side_mask  # side_a is the side holding vertex 0
    other = full ^ side_mask
    cut = []
    for u in _bits(side_mask):
        for v in _bits(g.rows[u] & other):
            cut.append((u, v) if u < v else (v, u))
    cut.sort()
    return CutCertificate(
        size=len(cut),
        cut_edges=tuple(cut),
        side_a=tuple(_bits(side_mask)),
        side_b=tuple(_bits(other)),
    )


def _require_cuttable(g: Graph) -> None:
    if g.n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected; no finite edge cut")


def edge_connectivity(g: Graph) -> CutCertificate:
    """Certified global minimum edge cut via repeated minimum-cut phases.

    Each phase grows a maximum-adjacency order (ties to the smallest index)
    and yields the cut isolating the vertices merged into the last-added
    node; the smallest phase cut, first found, is global.
    """
    _require_cuttable(g)
    n = g.n
    w = [[1 if g.rows[u] >> v & 1 else 0 for v in range(n)] for u in range(n)]
    merged = [1 << v for v in range(n)]  # original-vertex masks per supernode
    active = list(range(n))
    best_size = None
    best_mask = 0
    while len(active) > 1:
        start = active[0]
        key = {v: w[start][v] for v in active if v != start}
        added = [start]
        while key:
            top = max(key.values())
            z = min(v for v, k in key.items() if k == top)
            added.append(z)
            del key[z]
            wz = w[z]
            for v in key:
                key[v] += wz[v]
        t = added[-1]
        s = added[-2]
        phase_cut = sum(w[t][v] for v in active if v != t)
        if best_size is None or phase_cut < best_size:
            best_size = phase_cut
            best_mask = merged[t]
        for v in active:
            if v != s and v != t:
                w[s][v] += w[t][v]
                w[v][s] = w[s][v]
        merged[s] |= merged[t]
        active.remove(t)
    return _certificate(g, best_mask)


def brute_force_min_cut(g: Graph) -> CutCertificate:
    """Minimum cut by scanning all 2^(n-1)-1 bipartitions; test oracle, n <= 12."""
    _require_cuttable(g)
    if g.n > 12:
        raise ValueError(f"bipartition scan limited to n <= 12, got {g.n}")
    n = g.n
    full = (1 << n) - 1
    best_mask = 0
    best = None
    # masks over vertices 0..n-2, so the complement always holds vertex n-1
    for mask in range(1, 1 << (n - 1)):
        other = full ^ mask
        crossing = sum((g.rows[v] & other).bit_count() for v in _bits(mask))
        if best is None or crossing < best:
            best = crossing
            best_mask = mask
    return _certificate(g, best_mask)
