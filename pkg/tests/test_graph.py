import pickle
import random

import networkx as nx
import pytest

from palindromic.errors import InvalidGraphError, OrderTooLargeError, VertexOutOfRangeError
from palindromic.graph import (
    Graph,
    bipartition,
    complete,
    connected_components,
    cycle,
    disjoint_union,
    empty,
    hairs,
    induced_subgraph,
    is_bald,
    is_connected,
    is_forest,
    is_tree,
    is_triangle_free,
    path,
    relabel,
    star,
)
from palindromic.generate import random_graph


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestGraphConstruction:
    """Test Graph validation and views"""

    def test_edges_sorted(self):
        g = Graph(4, [(3, 2), (1, 0), (0, 2)])
        assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]
        assert g.adj == ((1, 2), (0,), (0, 3), (2,))
        assert g.edge_count == 3

    def test_has_edge(self):
        g = star(40)
        assert g.has_edge(0, 40) and g.has_edge(40, 0)
        assert not g.has_edge(1, 2)
        assert not g.has_edge(0, 0)
        rng = random.Random(5)
        h = random_graph(30, 0.5, rng)
        edges = set(h.edges())
        for u in range(30):
            for v in range(30):
                assert h.has_edge(u, v) == ((min(u, v), max(u, v)) in edges)

    def test_negative_order(self):
        with pytest.raises(ValueError, match="Invalid order"):
            Graph(-1)

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRangeError):
            Graph(2, [(0, 2)])

    def test_loop(self):
        with pytest.raises(InvalidGraphError, match="Loop"):
            Graph(2, [(1, 1)])

    def test_parallel_edge(self):
        with pytest.raises(InvalidGraphError, match="Parallel"):
            Graph(2, [(0, 1), (1, 0)])

    def test_dense_masks(self):
        assert path(3).dense == (0b010, 0b101, 0b010)

    def test_dense_order_cap(self):
        with pytest.raises(OrderTooLargeError):
            empty(65).dense

    def test_from_masks(self):
        assert Graph.from_masks((0b010, 0b101, 0b010)) == path(3)

    def test_adjacency_matrix(self):
        assert path(3).adjacency_matrix() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]

    def test_pickle_round_trip(self):
        g = cycle(5)
        copy = pickle.loads(pickle.dumps(g))
        assert copy == g
        assert copy.edge_count == 5
        assert copy.dense == g.dense


class TestGraphStructure:
    """Test connectivity, bipartiteness and shape predicates"""

    def test_components(self):
        g = Graph(5, [(0, 3), (1, 4)])
        assert connected_components(g) == [(0, 3), (1, 4), (2,)]
        assert not is_connected(g)
        assert not is_connected(empty(0))

    def test_components_match_networkx(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng.randint(1, 12), 0.2, rng)
            expected = sorted(tuple(sorted(c)) for c in nx.connected_components(to_networkx(g)))
            assert connected_components(g) == expected

    def test_bipartition_of_even_cycle(self):
        parts = bipartition(cycle(6))
        assert parts.is_bipartite
        assert parts.part_v == (0, 2, 4)
        assert parts.part_w == (1, 3, 5)

    def test_odd_cycle_witness(self):
        g = cycle(7)
        parts = bipartition(g)
        assert not parts.is_bipartite
        walk = parts.odd_cycle
        assert len(walk) % 2 == 1
        for u, v in zip(walk, walk[1:] + walk[:1]):
            assert g.has_edge(u, v)

    def test_bipartite_matches_networkx(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_graph(rng.randint(1, 10), 0.3, rng)
            assert bipartition(g).is_bipartite == nx.is_bipartite(to_networkx(g))

    def test_trees_and_forests(self):
        assert is_tree(path(1))
        assert is_tree(star(4))
        assert not is_tree(empty(0))
        assert not is_tree(cycle(4))
        assert is_forest(Graph(5, [(0, 1), (2, 3)]))
        assert not is_forest(cycle(3))

    def test_triangle_free(self):
        assert is_triangle_free(cycle(5))
        assert not is_triangle_free(complete(3))

    def test_hairs(self):
        assert hairs(star(3)) == frozenset({1, 2, 3})
        assert is_bald(cycle(4))
        assert not is_bald(path(3))


class TestGraphOperations:
    """Test subgraphs, relabeling and unions"""

    def test_induced_subgraph(self):
        sub = induced_subgraph(cycle(6), [0, 1, 2, 5])
        assert list(sub.edges()) == [(0, 1), (0, 3), (1, 2)]

    def test_induced_subgraph_out_of_range(self):
        with pytest.raises(VertexOutOfRangeError):
            induced_subgraph(path(3), [0, 3])

    def test_relabel(self):
        g = relabel(path(3), [2, 0, 1])
        assert list(g.edges()) == [(0, 1), (0, 2)]

    def test_relabel_invalid_permutation(self):
        with pytest.raises(ValueError, match="Invalid permutation"):
            relabel(path(3), [0, 0, 1])

    def test_disjoint_union(self):
        g = disjoint_union([path(2), path(3)])
        assert g.n == 5
        assert list(g.edges()) == [(0, 1), (2, 3), (3, 4)]

    def test_cycle_too_short(self):
        with pytest.raises(ValueError, match="Invalid cycle length"):
            cycle(2)
