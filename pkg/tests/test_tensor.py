from fractions import Fraction
from itertools import combinations_with_replacement

import networkx as nx
import pytest

from palindromic.canon import canonical_code
from palindromic.errors import (
    FactorNotPalindromicError,
    NotBipartiteError,
    NotConnectedError,
    NotMonicError,
    OrderTooLargeError,
    SeedBipartiteError,
    SeedNotPalindromicError,
)
from palindromic.generate import enumerate_connected
from palindromic.graph import (
    Graph,
    bipartition,
    complete,
    connected_components,
    cycle,
    disjoint_union,
    hairs,
    induced_subgraph,
    is_bald,
    is_connected,
    path,
)
from palindromic.hairing import hair_k, is_hairing
from palindromic.models import SurveyFilter
from palindromic.poly import IntPolynomial, PalindromeKind, classify
from palindromic.spectral import char_poly
from palindromic.tensor import (
    bald_seed,
    bipartite_split,
    counterexample_graph,
    family_generator,
    hair_ratio,
    non_bipartite_bald_seed,
    product_charpoly,
    tensor_charpoly,
    tensor_power_family,
    tensor_product,
)
from palindromic.survey import run_survey


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def connected_pairs(max_order: int) -> list[tuple[Graph, Graph]]:
    graphs = [g for n in range(2, max_order + 1) for g in enumerate_connected(n)]
    return [(g1, g2) for g1 in graphs for g2 in graphs]


def symmetric_witnesses(max_order: int) -> list[IntPolynomial]:
    polys = []
    for n in range(2, max_order + 1):
        report = run_survey(SurveyFilter(order=n, connected_only=True))
        polys.extend(IntPolynomial.from_json(w.coefficients) for w in report.witnesses)
    return polys


def side_hairs(g: Graph) -> tuple[int, int]:
    parts = bipartition(g)
    pendant = hairs(g)
    return len(pendant & set(parts.part_v)), len(pendant & set(parts.part_w))


class TestTensorProduct:
    """Test the Kronecker product of graphs"""

    def test_matches_networkx(self):
        g1, g2 = path(3), cycle(4)
        product = tensor_product(g1, g2)
        expected = nx.tensor_product(to_networkx(g1), to_networkx(g2))
        assert product.n == 12
        assert nx.is_isomorphic(to_networkx(product), expected)

    def test_vertex_numbering(self):
        product = tensor_product(path(2), path(2))
        assert list(product.edges()) == [(0, 3), (1, 2)]

    def test_invalid_order(self):
        with pytest.raises(ValueError, match="Invalid order"):
            tensor_product(Graph(0), path(2))


class TestProductPolynomial:
    """Test polynomials whose roots are pairwise products"""

    def test_edge_squared(self):
        p = IntPolynomial([1, 0, -1])
        assert product_charpoly(p, p) == IntPolynomial([1, 0, -2, 0, 1])

    def test_matches_direct_product(self):
        for g1, g2 in ((path(3), cycle(5)), (complete(3), path(4)), (cycle(4), complete(4))):
            assert tensor_charpoly(g1, g2) == char_poly(tensor_product(g1, g2))

    def test_not_monic(self):
        with pytest.raises(NotMonicError):
            product_charpoly(IntPolynomial([2, 1]), IntPolynomial([1, 0]))


class TestBipartiteSplit:
    """Test the two components of a product of bipartite graphs"""

    def test_edge_by_edge(self):
        split = bipartite_split(path(2), path(2))
        assert split.even_pairs == ((0, 0), (1, 1))
        assert split.odd_pairs == ((0, 1), (1, 0))
        assert split.even_component == path(2)
        assert split.even_class.kind is PalindromeKind.ANTIPALINDROMIC

    def test_square_of_p4(self):
        split = bipartite_split(path(4), path(4))
        assert split.even_component.n == split.odd_component.n == 8
        assert canonical_code(split.even_component) == canonical_code(split.odd_component)
        assert split.even_class.kind is PalindromeKind.PALINDROMIC
        assert not is_hairing(split.even_component)

    def test_components_are_connected(self):
        split = bipartite_split(path(3), cycle(6))
        assert is_connected(split.even_component)
        assert is_connected(split.odd_component)
        assert split.even_component.n + split.odd_component.n == 18

    def test_non_bipartite_factor(self):
        with pytest.raises(NotBipartiteError):
            bipartite_split(complete(3), path(2))

    def test_disconnected_factor(self):
        with pytest.raises(NotConnectedError):
            bipartite_split(path(2), disjoint_union([path(2), path(2)]))

    def test_counterexample(self):
        g = counterexample_graph()
        assert not classify(char_poly(g)).is_symmetric
        product = product_charpoly(char_poly(g), char_poly(path(2)))
        assert classify(product).kind is PalindromeKind.PALINDROMIC


class TestFamilyGenerator:
    """Test bald palindromic families"""

    def test_hair_ratio(self):
        ratio = hair_ratio(path(4))
        assert str(ratio) == "2/4"
        assert ratio.value == Fraction(1, 2)

    def test_bald_seed(self):
        seed = bald_seed()
        assert is_bald(seed)
        assert classify(char_poly(seed)).kind is PalindromeKind.PALINDROMIC

    def test_members(self):
        factors = [hair_k(path(2), 1), hair_k(path(3), 1)]
        members = list(family_generator(bald_seed(), factors))
        assert [m.record.order for m in members] == [16, 24]
        for member in members:
            assert member.record.bald
            assert member.record.hairs == 0
            assert member.record.palindrome_class == "palindromic"
            assert classify(char_poly(member.graph)).kind is PalindromeKind.PALINDROMIC

    def test_limit(self):
        factors = [hair_k(path(2), 1), hair_k(path(3), 1)]
        assert len(list(family_generator(bald_seed(), factors, limit=1))) == 1

    def test_seed_not_palindromic(self):
        with pytest.raises(SeedNotPalindromicError):
            list(family_generator(path(2), [hair_k(path(2), 1)]))

    def test_factor_not_palindromic(self):
        with pytest.raises(FactorNotPalindromicError):
            list(family_generator(bald_seed(), [path(3)]))

    def test_seed_not_connected(self):
        with pytest.raises(NotConnectedError):
            list(family_generator(disjoint_union([path(4), path(4)]), [path(4)]))


class TestProductLaws:
    """Test hair, connectivity and spectrum laws of products over small graphs"""

    def test_hairs_multiply(self):
        for g1, g2 in connected_pairs(5):
            assert len(hairs(tensor_product(g1, g2))) == len(hairs(g1)) * len(hairs(g2))

    def test_connectivity(self):
        for g1, g2 in connected_pairs(5):
            components = connected_components(tensor_product(g1, g2))
            both_bipartite = bipartition(g1).is_bipartite and bipartition(g2).is_bipartite
            assert len(components) == (2 if both_bipartite else 1)

    def test_product_of_hairings_is_not_a_hairing(self):
        hairings = [hair_k(g, 1) for n in range(2, 5) for g in enumerate_connected(n)]
        for h1, h2 in combinations_with_replacement(hairings, 2):
            g = tensor_product(h1, h2)
            assert not is_hairing(g)
            for component in connected_components(g):
                assert not is_hairing(induced_subgraph(g, component))

    def test_hair_counts_by_component(self):
        hairings = [hair_k(g, 1) for n in range(2, 5) for g in enumerate_connected(n)]
        hairings = [h for h in hairings if bipartition(h).is_bipartite]
        for h1, h2 in combinations_with_replacement(hairings, 2):
            (a1, b1), (a2, b2) = side_hairs(h1), side_hairs(h2)
            split = bipartite_split(h1, h2)
            assert len(hairs(split.even_component)) == a1 * a2 + b1 * b2
            assert len(hairs(split.odd_component)) == a1 * b2 + b1 * a2
            assert split.even_component.n == split.odd_component.n

    def test_square_of_hairing_of_p3(self):
        h = hair_k(path(3), 1)
        assert sorted(side_hairs(h)) == [1, 2]
        split = bipartite_split(h, h)
        assert len(hairs(split.even_component)) == 5
        assert len(hairs(split.odd_component)) == 4
        assert split.even_component.n == split.odd_component.n == 18

    def test_product_charpoly_matches_direct(self):
        for g1, g2 in connected_pairs(4):
            assert product_charpoly(char_poly(g1), char_poly(g2)) == char_poly(tensor_product(g1, g2))

    def test_symmetric_factors_give_palindromic_product(self):
        polys = symmetric_witnesses(4)
        assert polys
        for p1, p2 in combinations_with_replacement(polys, 2):
            assert classify(product_charpoly(p1, p2)).kind is PalindromeKind.PALINDROMIC

    @pytest.mark.slow
    def test_symmetric_factors_to_order_6(self):
        for p1, p2 in combinations_with_replacement(symmetric_witnesses(6), 2):
            assert classify(product_charpoly(p1, p2)).kind is PalindromeKind.PALINDROMIC


class TestTensorPowers:
    """Test tensor powers of a non-bipartite bald seed"""

    def test_seed(self):
        seed = non_bipartite_bald_seed()
        assert seed.n == 8
        assert is_bald(seed)
        assert not bipartition(seed).is_bipartite
        assert classify(char_poly(seed)).kind is PalindromeKind.PALINDROMIC

    def test_seed_polynomial_is_mirrored(self):
        coefficients = [char_poly(non_bipartite_bald_seed()).coefficient(k) for k in range(9)]
        assert coefficients[:4] == [1, 0, -13, -4]
        assert coefficients == coefficients[::-1]

    def test_bipartite_seed(self):
        with pytest.raises(SeedBipartiteError, match="bipartite"):
            list(tensor_power_family(bald_seed(), 2))

    def test_too_many_factors(self):
        with pytest.raises(OrderTooLargeError):
            list(tensor_power_family(non_bipartite_bald_seed(), 3))

    def test_single_factor(self):
        with pytest.raises(ValueError, match="Invalid max_power"):
            list(tensor_power_family(non_bipartite_bald_seed(), 1))

    def test_seed_not_palindromic(self):
        with pytest.raises(SeedNotPalindromicError):
            list(tensor_power_family(complete(3), 2))

    def test_seed_not_connected(self):
        with pytest.raises(NotConnectedError):
            list(tensor_power_family(disjoint_union([complete(3), complete(3)]), 2))

    @pytest.mark.slow
    def test_square(self):
        members = list(tensor_power_family(non_bipartite_bald_seed(), 2))
        assert len(members) == 1
        member = members[0]
        assert member.record.order == 64
        assert member.record.bald and is_bald(member.graph)
        assert member.record.palindrome_class == "palindromic"
        assert is_connected(member.graph)
