from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import NotATreeError, OrderTooLargeError
from .graph import DENSE_ORDER_CAP, Graph, is_tree
from .matchings import count_k_matchings
from .poly import IntPolynomial

SACHS_ORDER_CAP = 12
DEFAULT_TOLERANCE = 1e-9


def berkowitz(matrix: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(xI - M) for a square integer matrix, without division

    Builds the polynomial of each trailing principal submatrix from the next
    smaller one through its Toeplitz matrix of -R A^j C products.
    """

    n = len(matrix)
    if n == 0:
        return IntPolynomial([1])

    rows = [[(j, x) for j, x in enumerate(row) if x] for row in matrix]
    vec = [1, -matrix[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        size = n - k
        column = [matrix[i][k] for i in range(k + 1, n)]
        head = [(j - k - 1, x) for j, x in rows[k] if j > k]
        block = [[(j - k - 1, x) for j, x in rows[i] if j > k] for i in range(k + 1, n)]

        diags = [1, -matrix[k][k]]
        current = column
        for step in range(size - 1):
            diags.append(-sum(x * current[j] for j, x in head))
            if step < size - 2:
                current = [sum(x * current[j] for j, x in row) for row in block]

        vec = [
            sum(diags[i - j] * vec[j] for j in range(max(0, i - size), min(i, size - 1) + 1))
            for i in range(size + 1)
        ]
    return IntPolynomial(vec)


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    # det(xI - M) at x = 0 is det(-M)
    n = len(matrix)
    return (-1) ** n * berkowitz(matrix).coefficient(n)


def char_poly(g: Graph) -> IntPolynomial:
    """det(xI - A) of the adjacency matrix

    Raises:
        OrderTooLargeError: If n > 64
    """

    if g.n > DENSE_ORDER_CAP:
        raise OrderTooLargeError(g.n, DENSE_ORDER_CAP, "char_poly")
    return berkowitz(g.adjacency_matrix())


@dataclass(frozen=True)
class SachsSubgraph:
    """Vertex-disjoint edges and cycles of a graph"""

    edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def i(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def c(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def r(self) -> int:
        return self.i - self.c

    @property
    def s(self) -> int:
        return len(self.cycles)

    @property
    def weight(self) -> int:
        """Contribution (-1)^r 2^s to (-1)^i a_i"""

        return (-1) ** self.r * 2**self.s


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cycles_through(masks: Sequence[int], v: int, available: int) -> Iterator[tuple[int, ...]]:
    """Simple cycles through v on v plus available, each reported once

    A cycle v, x1, ..., xk is reported only in the direction with x1 < xk
    """

    stack = [(v, (v,), 1 << v)]
    while stack:
        u, walk, used = stack.pop()
        for w in _bits(masks[u] & available & ~used):
            extended = walk + (w,)
            if len(extended) >= 3 and (masks[w] >> v) & 1 and extended[1] < w:
                yield extended
            stack.append((w, extended, used | (1 << w)))


def _check_sachs_order(g: Graph, operation: str) -> None:
    if g.n > SACHS_ORDER_CAP:
        raise OrderTooLargeError(g.n, SACHS_ORDER_CAP, operation)


def iter_sachs_subgraphs(g: Graph) -> Iterator[SachsSubgraph]:
    """Every Sachs subgraph of g, the empty one included

    The lowest uncovered vertex is either left out, matched along an edge, or
    made the smallest vertex of a cycle.

    Raises:
        OrderTooLargeError: If n > 12
    """

    _check_sachs_order(g, "iter_sachs_subgraphs")
    masks = g.dense

    def walk(mask, edges, cycles):
        if mask == 0:
            yield SachsSubgraph(edges=edges, cycles=cycles)
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        yield from walk(rest, edges, cycles)
        for u in _bits(masks[v] & rest):
            yield from walk(rest & ~(1 << u), edges + ((v, u),), cycles)
        for found in _cycles_through(masks, v, rest):
            covered = sum(1 << w for w in found)
            yield from walk(mask & ~covered, edges, cycles + (found,))

    yield from walk((1 << g.n) - 1, (), ())


def char_poly_sachs(g: Graph) -> IntPolynomial:
    """Characteristic polynomial from the Sachs coefficient formula

    a_i sums (-1)^c 2^s over the Sachs subgraphs on i vertices, with c
    components and s cycles. Sub-results are memoized on the set of vertices
    still available.

    Raises:
        OrderTooLargeError: If n > 12
    """

    _check_sachs_order(g, "char_poly_sachs")
    n = g.n
    masks = g.dense
    memo: dict[int, list[int]] = {}

    def weights(mask: int) -> list[int]:
        if mask == 0:
            return [1] + [0] * n
        if mask in memo:
            return memo[mask]

        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        total = list(weights(rest))
        for u in _bits(masks[v] & rest):
            sub = weights(rest & ~(1 << u))
            for i in range(n - 1):
                if sub[i]:
                    total[i + 2] -= sub[i]
        for found in _cycles_through(masks, v, rest):
            length = len(found)
            sub = weights(mask & ~sum(1 << w for w in found))
            for i in range(n + 1 - length):
                if sub[i]:
                    total[i + length] -= 2 * sub[i]
        memo[mask] = total
        return total

    return IntPolynomial(weights((1 << n) - 1))


def tree_char_poly(t: Graph) -> IntPolynomial:
    """Tree polynomial from matching counts: a_2k = (-1)^k m_k, odd terms vanish

    Raises:
        NotATreeError: If t is not a tree
    """

    if not is_tree(t):
        raise NotATreeError("tree_char_poly needs a tree")

    coeffs = [0] * (t.n + 1)
    for k, m in enumerate(count_k_matchings(t).m):
        if 2 * k <= t.n:
            coeffs[2 * k] = (-1) ** k * m
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class Spectrum:
    """Floating-point eigenvalues in increasing order, for diagnostics only"""

    eigenvalues: tuple[float, ...]
    tolerance: float = DEFAULT_TOLERANCE

    def is_reciprocal(self) -> bool:
        """Whether the multiset of eigenvalues is closed under x -> 1/x"""

        values = np.array(self.eigenvalues)
        if values.size == 0:
            return True
        if np.any(np.abs(values) < self.tolerance):
            return False
        return bool(
            np.allclose(
                np.sort(values), np.sort(1.0 / values), rtol=self.tolerance, atol=self.tolerance
            )
        )

    def is_symmetric(self) -> bool:
        """Whether the multiset is closed under negation (bipartite graphs)"""

        values = np.array(self.eigenvalues)
        return bool(np.allclose(values, -values[::-1], rtol=self.tolerance, atol=self.tolerance))


def approx_spectrum(g: Graph, tolerance: float = DEFAULT_TOLERANCE) -> Spectrum:
    """Eigenvalues of the adjacency matrix by a symmetric eigensolver

    Raises:
        OrderTooLargeError: If n > 64
    """

    if g.n > DENSE_ORDER_CAP:
        raise OrderTooLargeError(g.n, DENSE_ORDER_CAP, "approx_spectrum")
    if g.n == 0:
        return Spectrum(eigenvalues=(), tolerance=tolerance)

    values = np.linalg.eigvalsh(np.array(g.adjacency_matrix(), dtype=float))
    return Spectrum(eigenvalues=tuple(float(v) for v in np.sort(values)), tolerance=tolerance)
