import random

import numpy as np
import pytest

from dsr import (
    BridgeFamilyParams,
    bridge_graph,
    bridge_graph_tilde,
    brute_force_min_cut,
    complete_graph,
    distance_matrix,
    edge_connectivity,
    from_edge_list,
    is_connected,
    isomorphic,
    kpq,
    random_cross_edges,
    tilde_level_groups,
)


class TestCompleteGraph:
    def test_k1(self):
        assert complete_graph(1).num_edges() == 0

    def test_k4(self):
        assert complete_graph(4).num_edges() == 6

    def test_k5_degrees(self):
        g = complete_graph(5)
        assert all(g.degree(v) == 4 for v in range(5))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            complete_graph(0)


class TestKpq:
    def test_triangle_plus_pendant(self):
        g = kpq(3, 1)
        assert sorted(g.degree(v) for v in range(4)) == [1, 2, 2, 3]

    def test_k43_degrees(self):
        g = kpq(4, 3)
        degs = sorted(g.degree(v) for v in range(5))
        assert degs[0] == 3
        assert all(d >= 3 for d in degs)

    def test_q_equals_p_is_complete(self):
        assert isomorphic(kpq(3, 3), complete_graph(4))

    def test_rejects_bad_q(self):
        with pytest.raises(ValueError):
            kpq(3, 4)
        with pytest.raises(ValueError):
            kpq(3, 0)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_edge_connectivity_sweep(self, n):
        for r in range(1, n - 1):
            assert edge_connectivity(kpq(n - 1, r)).size == r


class TestBridgeFamilyParams:
    def test_smallest_hub_only_instance_is_valid(self):
        # min(3,3) = 3 = r+2, inside the allowed regime
        g = bridge_graph(BridgeFamilyParams(3, 3, 1, 1))
        assert g.num_edges() == 7
        assert edge_connectivity(g).size == 1

    def test_rejects_small_cliques(self):
        with pytest.raises(ValueError, match="r\\+2"):
            BridgeFamilyParams(3, 3, 2, 2)

    def test_rejects_bad_t(self):
        with pytest.raises(ValueError):
            BridgeFamilyParams(4, 4, 2, 0)
        with pytest.raises(ValueError):
            BridgeFamilyParams(4, 4, 2, 3)

    def test_rejects_bad_r(self):
        with pytest.raises(ValueError):
            BridgeFamilyParams(4, 4, 0, 0)

    def test_cross_edge_count_enforced(self):
        with pytest.raises(ValueError, match="cross edges"):
            BridgeFamilyParams(4, 4, 2, 1)  # needs exactly one cross edge
        with pytest.raises(ValueError, match="cross edges"):
            BridgeFamilyParams(4, 4, 2, 2, ((2, 1),))

    def test_cross_edge_cannot_touch_hub(self):
        with pytest.raises(ValueError, match="first endpoint"):
            BridgeFamilyParams(4, 4, 2, 1, ((1, 1),))

    def test_cross_edge_range_checks(self):
        with pytest.raises(ValueError):
            BridgeFamilyParams(4, 4, 2, 1, ((5, 1),))
        with pytest.raises(ValueError):
            BridgeFamilyParams(4, 4, 2, 1, ((2, 5),))

    def test_duplicate_cross_edges_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            BridgeFamilyParams(5, 5, 3, 1, ((2, 1), (2, 1)))


class TestBridgeGraph:
    def test_4422_shape(self):
        p = BridgeFamilyParams(4, 4, 2, 2)
        g = bridge_graph(p)
        assert g.n == 8
        assert g.num_edges() == 14
        assert int(distance_matrix(g).d.max()) == 3
        cert = brute_force_min_cut(g)
        assert cert.size == 2
        assert cert.side_a == (0, 1, 2, 3) and cert.side_b == (4, 5, 6, 7)

    def test_mixed_bridge_accepted(self):
        # one hub edge and one non-hub edge, as in the two-level construction
        p = BridgeFamilyParams(4, 4, 2, 1, ((2, 1),))
        g = bridge_graph(p)
        assert g.has_edge(0, 4)  # hub edge u1-v1
        assert g.has_edge(1, 4)  # cross edge u2-v1
        assert edge_connectivity(g).size == 2

    def test_removing_bridge_edges_leaves_two_cliques(self):
        p = BridgeFamilyParams(5, 4, 2, 1, ((3, 2),))
        g = bridge_graph(p)
        cert = edge_connectivity(g)
        assert cert.size == p.r
        stripped = g
        for u, v in cert.cut_edges:
            stripped = stripped.without_edge(u, v)
        comp_a = from_edge_list(
            len(cert.side_a),
            [
                (cert.side_a.index(u), cert.side_a.index(v))
                for u, v in stripped.edges()
                if u in cert.side_a and v in cert.side_a
            ],
        )
        assert isomorphic(comp_a, complete_graph(p.n1))

    @pytest.mark.parametrize(
        "params",
        [
            BridgeFamilyParams(3, 3, 1, 1),
            BridgeFamilyParams(4, 4, 2, 2),
            BridgeFamilyParams(4, 5, 2, 1, ((3, 4),)),
            BridgeFamilyParams(6, 5, 3, 2, ((4, 2),)),
            BridgeFamilyParams(6, 6, 4, 1, ((2, 1), (3, 3), (6, 6))),
        ],
    )
    def test_connectivity_equals_r(self, params):
        g = bridge_graph(params)
        assert is_connected(g)
        assert edge_connectivity(g).size == params.r


class TestBridgeGraphTilde:
    def test_hub_only_case(self):
        p = BridgeFamilyParams(4, 4, 2, 2)
        t = bridge_graph_tilde(p)
        assert isomorphic(t, kpq(7, 2))
        assert t.degree(0) == 2
        assert sorted(t.neighbors(0)) == [4, 5]  # exactly the bridge targets

    def test_mixed_case(self):
        p = BridgeFamilyParams(4, 4, 2, 1, ((3, 2),))
        t = bridge_graph_tilde(p)
        assert isomorphic(t, kpq(7, 2))
        assert t.degree(0) == 2
        # one surviving clique neighbor (the last index) plus the hub target
        assert sorted(t.neighbors(0)) == [3, 4]

    def test_independent_of_cross_placement(self):
        rng = random.Random(5)
        p_base = None
        for _ in range(6):
            cross = random_cross_edges(6, 5, 3, 1, rng)
            p = BridgeFamilyParams(6, 5, 3, 1, cross)
            t = bridge_graph_tilde(p)
            assert t.degree(0) == 3
            assert isomorphic(t, kpq(10, 3))
            if p_base is None:
                p_base = t
            else:
                assert t == p_base  # literally identical, cross edges absorbed

    def test_level_groups_partition(self):
        p = BridgeFamilyParams(5, 4, 2, 1, ((4, 3),))
        hub, mid, near = tilde_level_groups(p)
        assert hub == (0,)
        assert sorted(hub + mid + near) == list(range(p.order))
        # near = surviving clique neighbor(s) of the hub plus its bridge targets
        assert near == (4, 5)


def test_random_cross_edges_seeded():
    a = random_cross_edges(6, 5, 3, 1, 42)
    b = random_cross_edges(6, 5, 3, 1, 42)
    assert a == b
    assert len(a) == 2
    assert all(2 <= i <= 6 and 1 <= j <= 5 for i, j in a)
