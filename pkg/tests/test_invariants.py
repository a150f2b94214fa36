"""Clique number and twin partitions against brute-force enumeration."""

from __future__ import annotations

import itertools

import pytest
from conftest import naive_clique, stream_upto

from locdim.enumeration import connected_graphs
from locdim.families import complete, complete_minus_bipartite, cycle, path
from locdim.graphs import DisconnectedError, build
from locdim.invariants import (
    clique_number,
    max_clique,
    twin_lower_bound,
    twin_partition,
)


class TestClique:
    def test_known_values(self):
        assert clique_number(complete(6)) == 6
        assert clique_number(cycle(5)) == 2
        assert clique_number(cycle(6)) == 2
        assert clique_number(path(1)) == 1
        assert clique_number(complete_minus_bipartite(9, 3, 2)) == 7

    def test_witness_is_a_clique(self):
        g = complete_minus_bipartite(9, 4, 3)
        size, witness = max_clique(g)
        assert size == 6
        assert len(witness) == size
        assert all(g.has_edge(u, v) for u, v in itertools.combinations(witness, 2))

    def test_matches_subset_search_small_orders(self):
        for g in stream_upto(6):
            assert max_clique(g) == naive_clique(g)

    def test_matches_subset_search_order_seven(self):
        for g in connected_graphs(7):
            size, witness = max_clique(g)
            nsize, nwitness = naive_clique(g)
            assert size == nsize
            assert witness == nwitness


class TestTwins:
    def test_complete_graph_is_one_class(self):
        tp = twin_partition(complete(5))
        assert tp.class_count == 1
        assert tp.classes == ((0, 1, 2, 3, 4),)

    def test_cycle_has_no_twins(self):
        tp = twin_partition(cycle(5))
        assert tp.class_count == 5
        assert tp.sizes() == (1, 1, 1, 1, 1)

    def test_block_structure(self):
        # removed-biclique blocks and the untouched rest are the classes
        tp = twin_partition(complete_minus_bipartite(9, 4, 3))
        assert tp.sizes() == (4, 3, 2)
        assert tp.classes == ((0, 1, 2, 3), (4, 5, 6), (7, 8))

    def test_path_classes(self):
        # P_3: the two leaves share the middle as closed neighborhood? No:
        # N[0]={0,1}, N[2]={1,2}, so all three are singletons
        assert twin_partition(path(3)).class_count == 3
        # K_2 is a single twin pair
        assert twin_partition(path(2)).classes == ((0, 1),)

    def test_twin_lower_bound_values(self):
        assert twin_lower_bound(complete(6)) == 5
        assert twin_lower_bound(cycle(5)) == 0
        assert twin_lower_bound(complete_minus_bipartite(9, 4, 3)) == 6

    def test_twin_lower_bound_rejects_disconnected(self):
        with pytest.raises(DisconnectedError):
            twin_lower_bound(build(4, [(0, 1), (2, 3)]))

    def test_partition_properties(self):
        for g in stream_upto(6):
            tp = twin_partition(g)
            seen = sorted(v for cls in tp.classes for v in cls)
            assert seen == list(range(g.n))
            for cls in tp.classes:
                for u, v in itertools.combinations(cls, 2):
                    assert g.has_edge(u, v)
                    assert g.adj[u] | (1 << u) == g.adj[v] | (1 << v)
            # classes are maximal: members of different classes differ
            reps = [cls[0] for cls in tp.classes]
            for u, v in itertools.combinations(reps, 2):
                assert g.adj[u] | (1 << u) != g.adj[v] | (1 << v)
