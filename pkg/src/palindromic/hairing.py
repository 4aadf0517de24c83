from dataclasses import dataclass, field
from typing import Union

from .errors import NotBipartiteError, OrderTooLargeError
from .graph import Graph, bipartition, induced_subgraph
from .poly import PalindromeClass, PalindromeKind
from .spectral import determinant

SYMPLECTIC_ORDER_CAP = 32


@dataclass(frozen=True)
class HairCertificate:
    """Witness that a graph is the hairing of core_graph

    hair_of maps every core vertex to its unique pendant neighbor; core_graph is
    the subgraph induced on the core, renumbered in sorted order
    """

    core: tuple[int, ...]
    hair_of: dict[int, int] = field(hash=False)
    core_graph: Graph = field(hash=False)


@dataclass(frozen=True)
class NotAHairing:
    reason: str


@dataclass(frozen=True)
class SymplecticReport:
    block_ok: bool
    quasisymplectic_ok: bool
    inverse_ok: bool
    det_ok: bool
    determinant: int

    @property
    def all_ok(self) -> bool:
        return self.block_ok and self.quasisymplectic_ok and self.inverse_ok and self.det_ok


def hair_k(g: Graph, k: int) -> Graph:
    """Attach k pendant vertices to every vertex

    Vertex i keeps its index; its j-th hair (j = 1..k) is vertex j*n + i, so
    for k = 1 the adjacency matrix has the block form [[A, I], [I, 0]].

    Raises:
        ValueError: If k < 1
    """

    if k < 1:
        raise ValueError("Invalid hairing multiplicity")

    n = g.n
    adj = [list(g.adj[i]) + [j * n + i for j in range(1, k + 1)] for i in range(n)]
    for j in range(1, k + 1):
        adj.extend([i] for i in range(n))
    return Graph.from_adjacency(adj)


def dehair(g: Graph) -> Union[HairCertificate, NotAHairing]:
    """Recognize g as the hairing H(G) of some graph G in linear time

    Every degree-1 vertex is a hair of its neighbor, except in a K2 component
    where the lower index is taken as the core. Recognition fails when a core
    vertex owns two hairs or a vertex is neither a hair nor owns one.

    Returns:
        Union[HairCertificate, NotAHairing]: The core and hair bijection, or the obstruction
    """

    adj = g.adj
    hair_of: dict[int, int] = {}
    is_hair = [False] * g.n
    for v in range(g.n):
        degree = len(adj[v])
        if degree == 0:
            return NotAHairing(f"vertex {v} is isolated")
        if degree != 1:
            continue

        core = adj[v][0]
        if len(adj[core]) == 1 and v < core:
            # K2 component: v is the core, its partner is processed as the hair
            continue
        if core in hair_of:
            pendants = sum(1 for w in adj[core] if len(adj[w]) == 1)
            return NotAHairing(f"core vertex {core} has {pendants} pendant neighbors")
        hair_of[core] = v
        is_hair[v] = True

    for v in range(g.n):
        if not is_hair[v] and v not in hair_of:
            return NotAHairing(f"vertex {v} has no pendant neighbor")

    core = tuple(sorted(hair_of))
    return HairCertificate(
        core=core,
        hair_of={c: hair_of[c] for c in core},
        core_graph=induced_subgraph(g, core),
    )


def is_hairing(g: Graph) -> bool:
    return isinstance(dehair(g), HairCertificate)


def predict_class_of_hairing(g: Graph) -> PalindromeClass:
    """Class of H(g): palindromic for bipartite g of even order, antipalindromic
    for bipartite g of odd order, otherwise only absolutely palindromic"""

    if bipartition(g).is_bipartite:
        if g.n % 2 == 0:
            return PalindromeClass(PalindromeKind.PALINDROMIC, True)
        return PalindromeClass(PalindromeKind.ANTIPALINDROMIC, True)
    return PalindromeClass(PalindromeKind.NEITHER, True)


def hairing_bipartition_balance(g: Graph) -> bool:
    """Whether the two parts of H(g) have equal size

    Raises:
        NotBipartiteError: If g is not bipartite
    """

    if not bipartition(g).is_bipartite:
        raise NotBipartiteError("hairing_bipartition_balance needs a bipartite graph")
    parts = bipartition(hair_k(g, 1))
    return len(parts.part_v) == len(parts.part_w)


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    columns = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in columns] for row in a]


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def symplectic_check(g: Graph) -> SymplecticReport:
    """Check A'JA' = -J, A'(JA'J) = I and det(A') = (-1)^n for the hairing matrix

    A' = [[A, I], [I, 0]] is the adjacency matrix of H(g) in block order and
    J = [[0, I], [-I, 0]].

    Raises:
        OrderTooLargeError: If n > 32
    """

    n = g.n
    if n > SYMPLECTIC_ORDER_CAP:
        raise OrderTooLargeError(n, SYMPLECTIC_ORDER_CAP, "symplectic_check")

    a = g.adjacency_matrix()
    block = [a[i] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    block += [[1 if j == i else 0 for j in range(n)] + [0] * n for i in range(n)]
    hairing = hair_k(g, 1).adjacency_matrix()

    j_matrix = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        j_matrix[i][n + i] = 1
        j_matrix[n + i][i] = -1
    minus_j = [[-x for x in row] for row in j_matrix]

    quasisymplectic = _matmul(_matmul(hairing, j_matrix), hairing) == minus_j
    inverse = _matmul(j_matrix, _matmul(hairing, j_matrix))
    det = determinant(hairing)
    return SymplecticReport(
        block_ok=hairing == block,
        quasisymplectic_ok=quasisymplectic,
        inverse_ok=_matmul(hairing, inverse) == _identity(2 * n),
        det_ok=det == (-1) ** n,
        determinant=det,
    )
