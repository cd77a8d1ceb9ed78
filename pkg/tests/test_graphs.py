import numpy as np
import pytest

from dsr import (
    DisconnectedGraphError,
    Graph,
    bfs_distances,
    complete_graph,
    distance_matrix,
    enumerate_connected,
    from_edge_list,
    is_connected,
    kpq,
)
from helpers import cycle_graph, path_graph


class TestFromEdgeList:
    def test_p3(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert [g.degree(v) for v in range(3)] == [1, 2, 1]

    def test_k4(self):
        g = from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert g.num_edges() == 6
        assert g == complete_graph(4)

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            from_edge_list(2, [(0, 0)])

    def test_index_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            from_edge_list(3, [(0, 3)])

    def test_duplicates_idempotent(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.num_edges() == 1

    def test_order_bounds(self):
        with pytest.raises(ValueError):
            Graph(0, ())
        with pytest.raises(ValueError):
            Graph(65, (0,) * 65)

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            Graph(2, (0b10, 0b00))

    def test_diagonal_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, (0b01, 0b00))


class TestBfsDistances:
    def test_p3_middle(self):
        assert bfs_distances(path_graph(3), 1).tolist() == [1, 0, 1]

    def test_k4_any_vertex(self):
        g = complete_graph(4)
        for v in range(4):
            row = bfs_distances(g, v)
            assert row[v] == 0
            assert all(row[u] == 1 for u in range(4) if u != v)

    def test_kpq_pendant(self):
        # pendant is the added vertex, index 3; the two far clique vertices sit at 2
        assert bfs_distances(kpq(3, 1), 3).tolist() == [1, 2, 2, 0]

    def test_disconnected_names_vertex(self):
        g = from_edge_list(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraphError, match="vertex 2"):
            bfs_distances(g, 0)


class TestDistanceMatrix:
    def test_p3(self):
        assert distance_matrix(path_graph(3)).d.tolist() == [
            [0, 1, 2],
            [1, 0, 1],
            [2, 1, 0],
        ]

    def test_complete(self):
        for n in (2, 4, 7):
            d = distance_matrix(complete_graph(n)).d
            assert (d == 1 - np.eye(n, dtype=np.int64)).all()

    def test_c5_rows_are_rotations(self):
        d = distance_matrix(cycle_graph(5)).d
        base = [0, 1, 2, 2, 1]
        for v in range(5):
            assert d[v].tolist() == [base[(u - v) % 5] for u in range(5)]

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            distance_matrix(from_edge_list(4, [(0, 1), (2, 3)]))

    def test_rows_match_bfs(self):
        g = kpq(4, 2)
        d = distance_matrix(g).d
        for v in range(g.n):
            assert (d[v] == bfs_distances(g, v)).all()

    def test_readonly(self):
        dm = distance_matrix(path_graph(3))
        with pytest.raises(ValueError):
            dm.d[0, 1] = 5


class TestIsConnected:
    def test_examples(self):
        assert is_connected(path_graph(3))
        assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
        assert is_connected(Graph(1, (0,)))


@pytest.mark.parametrize("n", range(2, 6))
def test_distance_invariants_over_stream(n):
    for g in enumerate_connected(n):
        d = distance_matrix(g).d
        assert (np.diag(d) == 0).all()
        assert (d == d.T).all()
        off = ~np.eye(n, dtype=bool)
        assert (d[off] >= 1).all()
        assert (d <= n - 1).all()
        # triangle inequality d[u,w] <= d[u,v] + d[v,w], all triples at once
        assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()
        for u in range(n):
            for v in range(n):
                if u != v:
                    assert (d[u, v] == 1) == g.has_edge(u, v)
