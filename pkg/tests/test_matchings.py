import random

import pytest

from palindromic.errors import NotAForestError, NotATreeError, OrderTooLargeError
from palindromic.generate import random_tree
from palindromic.graph import Graph, complete, cycle, disjoint_union, path, star
from palindromic.matchings import (
    count_k_matchings,
    count_perfect_matchings,
    forest_coefficient_identity,
    is_perfect_matching,
    unique_perfect_matching,
)


class TestCountMatchings:
    """Test k-matching tallies"""

    def test_path(self):
        assert count_k_matchings(path(4)).m == (1, 3, 1)

    def test_cycle(self):
        assert count_k_matchings(cycle(4)).m == (1, 4, 2)

    def test_complete(self):
        assert count_k_matchings(complete(4)).m == (1, 6, 3)

    def test_star(self):
        assert count_k_matchings(star(5)).m == (1, 5, 0, 0)

    def test_forest(self):
        g = disjoint_union([path(2), path(3)])
        assert count_k_matchings(g).m == (1, 3, 2)

    def test_large_tree_has_no_cap(self):
        tally = count_k_matchings(path(300)).m
        assert tally[1] == 299
        assert tally[150] == 1

    def test_general_order_cap(self):
        with pytest.raises(OrderTooLargeError):
            count_k_matchings(complete(25))

    def test_forest_identity_on_random_trees(self):
        rng = random.Random(0)
        for _ in range(30):
            assert forest_coefficient_identity(random_tree(rng.randint(1, 30), rng))

    def test_forest_identity_beyond_dense_order(self):
        rng = random.Random(4)
        forest = disjoint_union([random_tree(40, rng), random_tree(90, rng), path(3)])
        assert forest.n == 133
        assert forest_coefficient_identity(forest)

    def test_forest_identity_rejects_cycles(self):
        with pytest.raises(NotAForestError):
            forest_coefficient_identity(cycle(5))


class TestPerfectMatchings:
    """Test perfect matching counts and certificates"""

    def test_counts(self):
        assert count_perfect_matchings(complete(4)) == 3
        assert count_perfect_matchings(complete(6)) == 15
        assert count_perfect_matchings(cycle(6)) == 2
        assert count_perfect_matchings(path(5)) == 0

    def test_unique_in_path(self):
        certificate = unique_perfect_matching(path(4))
        assert certificate.edges == ((0, 1), (2, 3))
        assert certificate.perfect and certificate.unique
        assert is_perfect_matching(path(4), certificate.edges)

    def test_star_has_none(self):
        assert unique_perfect_matching(star(3)) is None

    def test_odd_tree_has_none(self):
        assert unique_perfect_matching(path(5)) is None

    def test_single_vertex_has_none(self):
        assert unique_perfect_matching(Graph(1)) is None

    def test_random_trees_agree_with_count(self):
        rng = random.Random(1)
        for _ in range(50):
            t = random_tree(rng.choice([2, 4, 6, 8, 10, 12]), rng)
            certificate = unique_perfect_matching(t)
            assert (certificate is not None) == (count_perfect_matchings(t) == 1)

    def test_not_a_tree(self):
        with pytest.raises(NotATreeError):
            unique_perfect_matching(cycle(4))

    def test_is_perfect_matching(self):
        assert not is_perfect_matching(path(4), [(0, 1)])
        assert not is_perfect_matching(path(4), [(0, 2), (1, 3)])
        assert not is_perfect_matching(path(3), [(0, 1), (1, 2)])
