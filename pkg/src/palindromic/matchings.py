from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import NotAForestError, NotATreeError, OrderTooLargeError
from .graph import DENSE_ORDER_CAP, Graph, connected_components, induced_subgraph, is_forest, is_tree
from .poly import IntPolynomial

GENERAL_ORDER_CAP = 24


@dataclass(frozen=True)
class MatchingTally:
    """m[k] is the number of k-edge matchings, for k = 0..n//2"""

    m: tuple[int, ...]


@dataclass(frozen=True)
class MatchingCertificate:
    edges: tuple[tuple[int, int], ...]
    perfect: bool
    unique: Optional[bool] = None


def _add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    result = list(p)
    for i, x in enumerate(q):
        result[i] += x
    return result


def _mul(p: list[int], q: list[int]) -> list[int]:
    result = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                result[i + j] += x * y
    return result


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _fit(values: list[int], n: int) -> tuple[int, ...]:
    size = n // 2 + 1
    values = values[:size] + [0] * max(0, size - len(values))
    return tuple(values)


def _forest_tally(g: Graph) -> list[int]:
    """Two-state dynamic program per rooted component

    free[v] counts matchings of v's subtree leaving v unmatched, used[v] those
    matching v to one of its children; both are tallies indexed by size.
    """

    n = g.n
    parent = [-1] * n
    visited = [False] * n
    total = [1]
    free: list[Optional[list[int]]] = [None] * n
    used: list[Optional[list[int]]] = [None] * n

    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        order = []
        stack = [root]
        while stack:
            u = stack.pop()
            order.append(u)
            for v in g.adj[u]:
                if not visited[v]:
                    visited[v] = True
                    parent[v] = u
                    stack.append(v)

        for u in reversed(order):
            f, m = [1], [0]
            for c in g.adj[u]:
                if parent[c] != u or c == parent[u]:
                    continue
                either = _add(free[c], used[c])
                m = _add(_mul(m, either), [0] + _mul(f, free[c]))
                f = _mul(f, either)
                free[c] = used[c] = None
            free[u], used[u] = f, m
        total = _mul(total, _add(free[root], used[root]))
        free[root] = used[root] = None
    return total


def _general_tally(g: Graph) -> list[int]:
    masks = g.dense
    memo: dict[int, list[int]] = {}

    def tally(mask: int) -> list[int]:
        if mask == 0:
            return [1]
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        result = list(tally(rest))
        for u in _bits(masks[v] & rest):
            result = _add(result, [0] + tally(rest & ~(1 << u)))
        memo[mask] = result
        return result

    return tally((1 << g.n) - 1)


def count_k_matchings(g: Graph) -> MatchingTally:
    """Number of k-edge matchings for every k

    Forests use a linear dynamic program with no order cap; other graphs are
    enumerated by branching on the lowest unmatched vertex.

    Raises:
        OrderTooLargeError: If g is not a forest and n > 24
    """

    if is_forest(g):
        return MatchingTally(m=_fit(_forest_tally(g), g.n))
    if g.n > GENERAL_ORDER_CAP:
        raise OrderTooLargeError(g.n, GENERAL_ORDER_CAP, "count_k_matchings")
    return MatchingTally(m=_fit(_general_tally(g), g.n))


def count_perfect_matchings(g: Graph) -> int:
    """Number of perfect matchings, 0 for odd order

    Raises:
        OrderTooLargeError: If n > 24
    """

    if g.n > GENERAL_ORDER_CAP:
        raise OrderTooLargeError(g.n, GENERAL_ORDER_CAP, "count_perfect_matchings")
    if g.n % 2:
        return 0

    masks = g.dense
    memo: dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        total = sum(count(rest & ~(1 << u)) for u in _bits(masks[v] & rest))
        memo[mask] = total
        return total

    return count((1 << g.n) - 1)


def unique_perfect_matching(t: Graph) -> Optional[MatchingCertificate]:
    """Perfect matching of a tree by repeatedly pairing a leaf with its neighbor

    A tree has at most one perfect matching, so the result is unique when present.

    Returns:
        Optional[MatchingCertificate]: The matching, or None when there is none

    Raises:
        NotATreeError: If t is not a tree
    """

    if not is_tree(t):
        raise NotATreeError("unique_perfect_matching needs a tree")
    if t.n % 2:
        return None

    degree = [len(row) for row in t.adj]
    removed = [False] * t.n
    leaves = deque(v for v in range(t.n) if degree[v] == 1)
    edges = []
    while leaves:
        v = leaves.popleft()
        if removed[v]:
            continue
        partner = next((u for u in t.adj[v] if not removed[u]), None)
        if partner is None:
            return None
        removed[v] = removed[partner] = True
        edges.append((min(v, partner), max(v, partner)))
        for w in t.adj[partner]:
            if removed[w]:
                continue
            degree[w] -= 1
            if degree[w] == 0:
                return None
            if degree[w] == 1:
                leaves.append(w)

    if not all(removed):
        return None
    return MatchingCertificate(edges=tuple(sorted(edges)), perfect=True, unique=True)


def is_perfect_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    covered = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in covered or v in covered:
            return False
        covered.update((u, v))
    return len(covered) == g.n


def forest_coefficient_identity(t: Graph) -> bool:
    """Whether |a_2k| equals the k-matching count and odd coefficients vanish

    The forest polynomial is the product of its tree polynomials. Trees of at
    most 64 vertices use the determinant, larger ones the matching form.

    Raises:
        NotAForestError: If t has a cycle
    """

    from .spectral import char_poly, tree_char_poly

    if not is_forest(t):
        raise NotAForestError("forest_coefficient_identity needs a forest")

    polynomial = IntPolynomial([1])
    for component in connected_components(t):
        tree = induced_subgraph(t, component)
        polynomial = polynomial * (char_poly(tree) if tree.n <= DENSE_ORDER_CAP else tree_char_poly(tree))
    tally = count_k_matchings(t).m
    for i in range(t.n + 1):
        a = polynomial.coefficient(i)
        if i % 2:
            if a != 0:
                return False
        elif abs(a) != tally[i // 2]:
            return False
    return True
