import random

import networkx as nx
import pytest

from palindromic.canon import canonical_code
from palindromic.errors import OrderTooLargeError
from palindromic.generate import (
    augment,
    chunked,
    enumerate_connected,
    enumerate_graphs,
    enumerate_trees,
    graph_level,
    ingest_stream,
    random_graph,
    random_tree,
    tree_code,
)
from palindromic.graph import Graph, is_connected, is_tree, path, relabel, star
from palindromic.graph6 import write_graph6
from palindromic.models import GraphSource, SurveyFilter

GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


class TestOrderlyGeneration:
    """Test isomorphism-free graph generation"""

    def test_children_of_single_vertex(self):
        children = augment((0,))
        assert sorted(children) == [(0, 0), (0b10, 0b01)]

    @pytest.mark.parametrize("n", sorted(GRAPH_COUNTS))
    def test_graph_counts(self, n):
        codes = [canonical_code(g) for g in enumerate_graphs(n)]
        assert len(codes) == GRAPH_COUNTS[n]
        assert len(set(codes)) == len(codes)

    @pytest.mark.parametrize("n", sorted(CONNECTED_COUNTS))
    def test_connected_counts(self, n):
        graphs = list(enumerate_connected(n))
        assert len(graphs) == CONNECTED_COUNTS[n]
        assert all(is_connected(g) for g in graphs)

    def test_matches_networkx_atlas(self):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 5]
        ours = list(enumerate_graphs(5))
        assert len(atlas) == len(ours)
        for g in ours:
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges())
            assert sum(1 for a in atlas if nx.is_isomorphic(a, h)) == 1

    def test_parallel_level_is_identical(self):
        assert graph_level(6, workers=2) == graph_level(6)

    def test_streamed_level_matches_graph_level(self):
        for n in range(1, 7):
            assert [g.dense for g in enumerate_graphs(n)] == graph_level(n)
        assert [g.dense for g in enumerate_graphs(6, workers=2)] == graph_level(6)

    def test_connected_stream_is_lazy(self):
        first = next(enumerate_connected(6))
        assert first.n == 6
        assert is_connected(first)

    def test_empty_order(self):
        assert graph_level(0) == [()]
        assert [g.n for g in enumerate_graphs(0)] == [0]

    def test_invalid_order(self):
        with pytest.raises(ValueError, match="Invalid order"):
            list(enumerate_connected(0))
        with pytest.raises(ValueError, match="Invalid order"):
            graph_level(-1)

    def test_order_cap(self):
        with pytest.raises(OrderTooLargeError):
            list(enumerate_graphs(11))

    def test_chunked(self):
        assert chunked([1, 2, 3, 4, 5], 2) == [[1, 2], [3, 4], [5]]

    @pytest.mark.slow
    def test_connected_order_7_and_8(self):
        assert sum(1 for _ in enumerate_connected(7)) == 853
        assert sum(1 for _ in enumerate_connected(8)) == 11117


class TestTrees:
    """Test tree generation"""

    @pytest.mark.parametrize("n", sorted(TREE_COUNTS))
    def test_tree_counts(self, n):
        trees = enumerate_trees(n)
        assert len(trees) == TREE_COUNTS[n]
        assert all(is_tree(t) for t in trees)
        assert len({canonical_code(t) for t in trees}) == len(trees)

    def test_tree_code_invariance(self):
        rng = random.Random(0)
        t = random_tree(15, rng)
        perm = list(range(15))
        rng.shuffle(perm)
        assert tree_code(relabel(t, perm)) == tree_code(t)

    def test_tree_code_distinguishes(self):
        assert tree_code(path(4)) != tree_code(star(3))

    def test_random_tree_is_tree(self):
        rng = random.Random(1)
        for n in (1, 2, 3, 10, 500):
            assert is_tree(random_tree(n, rng))

    def test_random_tree_is_seeded(self):
        assert random_tree(30, random.Random(5)) == random_tree(30, random.Random(5))

    def test_random_graph_extremes(self):
        assert random_graph(6, 0.0).edge_count == 0
        assert random_graph(6, 1.0).edge_count == 15

    def test_random_graph_invalid_probability(self):
        with pytest.raises(ValueError, match="Invalid edge probability"):
            random_graph(3, 1.5)


class TestGraphStream:
    """Test graph6 stream ingestion"""

    def test_filters_and_errors(self):
        survey_filter = SurveyFilter(order=4, source=GraphSource.STREAM)
        p4_relabeled = write_graph6(relabel(path(4), [2, 0, 3, 1]))
        lines = ["A_\n", "B!\n", "\n", "Ch\n", p4_relabeled + "\n", "C?\n"]
        stream = ingest_stream(lines, survey_filter, dedupe=True)
        graphs = list(stream)
        assert graphs == [path(4)]
        assert [e.line for e in stream.errors] == [2]

    def test_without_dedupe(self):
        survey_filter = SurveyFilter(order=4, source=GraphSource.STREAM)
        p4_relabeled = write_graph6(relabel(path(4), [2, 0, 3, 1]))
        assert len(list(ingest_stream(["Ch", p4_relabeled], survey_filter))) == 2

    def test_triangle_free(self):
        survey_filter = SurveyFilter(order=3, connected_only=False, triangle_free=True, source=GraphSource.STREAM)
        assert list(ingest_stream(["Bw", "Bg", "B?"], survey_filter)) == [path(3), Graph(3)]
