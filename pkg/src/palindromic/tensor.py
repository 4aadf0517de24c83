import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import (
    EmissionFailedVerificationError,
    FactorNotPalindromicError,
    NotBipartiteError,
    NotConnectedError,
    NotMonicError,
    OrderTooLargeError,
    SeedBipartiteError,
    SeedNotPalindromicError,
    SpectralMismatchError,
)
from .graph import DENSE_ORDER_CAP, Graph, bipartition, hairs, induced_subgraph, is_connected, is_tree
from .graph6 import write_graph6
from .hairing import NotAHairing, dehair
from .models import FamilyRecord
from .poly import IntPolynomial, PalindromeClass, PalindromeKind, classify
from .spectral import berkowitz, char_poly, tree_char_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HairRatio:
    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        if self.denominator == 0:
            return Fraction(0)
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class TensorSplit:
    """The two components of a product of connected bipartite graphs

    even_pairs[i] is the factor pair (u, u') behind vertex i of even_component,
    likewise for the odd component. The even component holds V1xV2 and W1xW2
    and always contains the pair (0, 0).
    """

    even_component: Graph
    odd_component: Graph
    even_pairs: tuple[tuple[int, int], ...]
    odd_pairs: tuple[tuple[int, int], ...]
    even_class: Optional[PalindromeClass] = None
    odd_class: Optional[PalindromeClass] = None


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    record: FamilyRecord


def tensor_product(g1: Graph, g2: Graph) -> Graph:
    """Kronecker product; the pair (u, u') becomes vertex u * |V2| + u'

    Raises:
        ValueError: If either factor has no vertices
    """

    if g1.n < 1 or g2.n < 1:
        raise ValueError("Invalid order")

    width = g2.n
    adj = []
    for u in range(g1.n):
        for u2 in range(width):
            adj.append([v * width + v2 for v in g1.adj[u] for v2 in g2.adj[u2]])
    return Graph.from_adjacency(adj)


def _companion(p: IntPolynomial) -> list[list[int]]:
    d = p.degree
    matrix = [[0] * d for _ in range(d)]
    for i in range(1, d):
        matrix[i][i - 1] = 1
    for i in range(d):
        matrix[i][d - 1] = -p.coefficient(d - i)
    return matrix


def product_charpoly(p1: IntPolynomial, p2: IntPolynomial) -> IntPolynomial:
    """Monic polynomial whose roots are all products of a root of p1 and a root of p2

    Computed as the characteristic polynomial of the Kronecker product of the
    two companion matrices.

    Raises:
        NotMonicError: If either polynomial is not monic
    """

    if not p1.is_monic() or not p2.is_monic():
        raise NotMonicError("product_charpoly needs monic polynomials")

    c1, c2 = _companion(p1), _companion(p2)
    d2 = len(c2)
    kron = [
        [c1[i][j] * c2[k][l] for j in range(len(c1)) for l in range(d2)]
        for i in range(len(c1))
        for k in range(d2)
    ]
    return berkowitz(kron)


def tensor_charpoly(g1: Graph, g2: Graph) -> IntPolynomial:
    """Characteristic polynomial of g1 x g2 from the factor polynomials

    When the product has at most 64 vertices the result is checked against the
    direct computation.

    Raises:
        SpectralMismatchError: If the two computations disagree
    """

    product = product_charpoly(char_poly(g1), char_poly(g2))
    if g1.n * g2.n <= DENSE_ORDER_CAP:
        direct = char_poly(tensor_product(g1, g2))
        if direct != product:
            raise SpectralMismatchError(
                f"Product spectrum {product.render()} differs from direct {direct.render()}"
            )
    return product


def _require_connected_bipartite(g: Graph, name: str) -> tuple[frozenset[int], frozenset[int]]:
    if g.n < 2 or not is_connected(g):
        raise NotConnectedError(f"{name} must be connected with at least 2 vertices")
    parts = bipartition(g)
    if not parts.is_bipartite:
        raise NotBipartiteError(f"{name} is not bipartite, odd cycle {list(parts.odd_cycle)}")
    return frozenset(parts.part_v), frozenset(parts.part_w)


def _class_or_none(g: Graph) -> Optional[PalindromeClass]:
    if g.n > DENSE_ORDER_CAP:
        return None
    return classify(char_poly(g))


def bipartite_split(g1: Graph, g2: Graph) -> TensorSplit:
    """Split the product of two connected bipartite graphs into its two components

    Components up to 64 vertices have their polynomial classified.

    Raises:
        NotConnectedError: If a factor is disconnected or smaller than K2
        NotBipartiteError: If a factor has an odd cycle
    """

    v1, _ = _require_connected_bipartite(g1, "first factor")
    v2, _ = _require_connected_bipartite(g2, "second factor")

    product = tensor_product(g1, g2)
    width = g2.n
    even, odd = [], []
    for vertex in range(product.n):
        u, u2 = divmod(vertex, width)
        (even if (u in v1) == (u2 in v2) else odd).append(vertex)

    even_component = induced_subgraph(product, even)
    odd_component = induced_subgraph(product, odd)
    return TensorSplit(
        even_component=even_component,
        odd_component=odd_component,
        even_pairs=tuple(divmod(v, width) for v in even),
        odd_pairs=tuple(divmod(v, width) for v in odd),
        even_class=_class_or_none(even_component),
        odd_class=_class_or_none(odd_component),
    )


def hair_ratio(g: Graph) -> HairRatio:
    return HairRatio(numerator=len(hairs(g)), denominator=g.n)


def _factor_class(g: Graph) -> PalindromeClass:
    if is_tree(g):
        return classify(tree_char_poly(g))
    return classify(char_poly(g))


def family_generator(
    seed: Graph, trees: Iterable[Graph], limit: Optional[int] = None
) -> Iterator[FamilyMember]:
    """Palindromic graphs from products of a fixed seed with (anti)palindromic factors

    Every emission is the even component of seed x factor and is checked to be
    connected, bipartite, palindromic and not a hairing before it is yielded.
    A bald seed yields bald members.

    Args:
        seed (Graph): Connected bipartite palindromic graph
        trees (Iterable[Graph]): Connected bipartite (anti)palindromic factors, usually hairings of trees
        limit (Optional[int]): Stop after this many members (default: no limit)

    Raises:
        SeedNotPalindromicError: If the seed polynomial is not palindromic
        FactorNotPalindromicError: If a factor is neither palindromic nor antipalindromic
        EmissionFailedVerificationError: If a product component fails its checks
    """

    _require_connected_bipartite(seed, "seed")
    if _factor_class(seed).kind is not PalindromeKind.PALINDROMIC:
        raise SeedNotPalindromicError(f"Seed {write_graph6(seed)} is not palindromic")

    emitted = 0
    for factor in trees:
        if limit is not None and emitted >= limit:
            return

        _require_connected_bipartite(factor, "factor")
        if not _factor_class(factor).is_symmetric:
            raise FactorNotPalindromicError(
                f"Factor {write_graph6(factor)} is neither palindromic nor antipalindromic"
            )

        member = bipartite_split(seed, factor).even_component
        code = write_graph6(member)
        if not is_connected(member) or not bipartition(member).is_bipartite:
            raise EmissionFailedVerificationError(f"{code} is not connected and bipartite")
        member_class = classify(char_poly(member))
        if member_class.kind is not PalindromeKind.PALINDROMIC:
            raise EmissionFailedVerificationError(f"{code} is {member_class.label}")
        if not isinstance(dehair(member), NotAHairing):
            raise EmissionFailedVerificationError(f"{code} is a hairing")

        ratio = hair_ratio(member)
        logger.debug("Family member of order %d with hair ratio %s", member.n, ratio)
        yield FamilyMember(
            graph=member,
            record=FamilyRecord(
                graph6=code,
                order=member.n,
                palindrome_class=member_class.label,
                bald=ratio.numerator == 0,
                hairs=ratio.numerator,
                hair_ratio=str(ratio),
            ),
        )
        emitted += 1


def counterexample_graph() -> Graph:
    """Order-6 graph that is not (anti)palindromic although its product with K2 is palindromic

    Vertices a, b, c, A, B, C are 0..5.
    """

    return Graph(
        6,
        [(0, 3), (1, 4), (2, 5), (0, 1), (1, 2), (3, 4), (4, 5), (0, 4), (1, 3), (0, 5), (2, 3)],
    )


def bald_seed() -> Graph:
    """Bipartite bald palindromic graph of order 8: C8 with chords 0-3 and 4-7"""

    edges = [(i, (i + 1) % 8) for i in range(8)] + [(0, 3), (4, 7)]
    return Graph(8, edges)


def non_bipartite_bald_seed() -> Graph:
    """Bald palindromic graph of order 8 with triangles: C8 with chords 0-4, 2-4, 2-7, 0-6 and 3-6"""

    edges = [(i, (i + 1) % 8) for i in range(8)] + [(0, 4), (2, 4), (2, 7), (0, 6), (3, 6)]
    return Graph(8, edges)


def tensor_power_family(seed: Graph, max_power: int) -> Iterator[FamilyMember]:
    """Tensor powers seed x seed, seed x seed x seed, ... up to max_power factors

    An odd cycle in the seed keeps every power connected, and a bald seed gives
    bald powers. Each power is checked to be connected and palindromic before
    it is yielded.

    Raises:
        ValueError: If max_power < 2
        NotConnectedError: If the seed is disconnected or smaller than K2
        SeedBipartiteError: If the seed is bipartite
        SeedNotPalindromicError: If the seed polynomial is not palindromic
        OrderTooLargeError: If the largest power exceeds 64 vertices
        EmissionFailedVerificationError: If a power fails its checks
    """

    if max_power < 2:
        raise ValueError("Invalid max_power: needs at least 2 factors")
    if seed.n < 2 or not is_connected(seed):
        raise NotConnectedError("seed must be connected with at least 2 vertices")
    if bipartition(seed).is_bipartite:
        raise SeedBipartiteError(f"Seed {write_graph6(seed)} is bipartite, its powers are disconnected")
    if seed.n**max_power > DENSE_ORDER_CAP:
        raise OrderTooLargeError(seed.n**max_power, DENSE_ORDER_CAP, "tensor_power_family")
    if classify(char_poly(seed)).kind is not PalindromeKind.PALINDROMIC:
        raise SeedNotPalindromicError(f"Seed {write_graph6(seed)} is not palindromic")

    power = seed
    for factors in range(2, max_power + 1):
        power = tensor_product(power, seed)
        code = write_graph6(power)
        if not is_connected(power):
            raise EmissionFailedVerificationError(f"{code} is not connected")
        power_class = classify(char_poly(power))
        if power_class.kind is not PalindromeKind.PALINDROMIC:
            raise EmissionFailedVerificationError(f"{code} is {power_class.label}")

        ratio = hair_ratio(power)
        logger.debug("Tensor power with %d factors, order %d", factors, power.n)
        yield FamilyMember(
            graph=power,
            record=FamilyRecord(
                graph6=code,
                order=power.n,
                palindrome_class=power_class.label,
                bald=ratio.numerator == 0,
                hairs=ratio.numerator,
                hair_ratio=str(ratio),
            ),
        )
