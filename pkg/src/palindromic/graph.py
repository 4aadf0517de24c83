import threading

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidGraphError, OrderTooLargeError, VertexOutOfRangeError

DENSE_ORDER_CAP = 64

_DENSE_LOCK = threading.Lock()


class Graph:
    """Simple undirected graph on the vertices 0..n-1

    Neighbors are kept as strictly increasing tuples, so loops and parallel edges
    cannot be represented. Values are immutable after construction. The dense
    view (one integer bitmask per vertex) is built on first use, at most once,
    and only for n <= 64
    """

    __slots__ = ("n", "adj", "_dense", "_edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        """Build a graph from an edge list

        Args:
            n (int): Number of vertices
            edges (Iterable[tuple[int, int]]): Unordered vertex pairs

        Raises:
            ValueError: If n is negative
            VertexOutOfRangeError: If an edge names a vertex outside 0..n-1
            InvalidGraphError: If an edge is a loop or repeats another edge
        """

        if n < 0:
            raise ValueError("Invalid order")

        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"Edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidGraphError(f"Loop at vertex {u}")
            if v in neighbors[u]:
                raise InvalidGraphError(f"Parallel edge ({u}, {v})")
            neighbors[u].add(v)
            neighbors[v].add(u)

        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in neighbors)
        self._dense = None
        self._edge_count = sum(len(s) for s in neighbors) // 2

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        """Wrap neighbor lists that are already symmetric, sorted and loop-free

        Used by constructions whose output already has valid adjacency (hairing,
        products, relabeling) on graphs far too large for edge-by-edge checks.
        """

        graph = cls.__new__(cls)
        graph.n = len(adj)
        graph.adj = tuple(tuple(row) for row in adj)
        graph._dense = None
        graph._edge_count = sum(len(row) for row in graph.adj) // 2
        return graph

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build a graph from one neighbor bitmask per vertex"""

        adj = []
        for mask in masks:
            row = []
            while mask:
                low = mask & -mask
                row.append(low.bit_length() - 1)
                mask ^= low
            adj.append(row)
        graph = cls.from_adjacency(adj)
        if len(masks) <= DENSE_ORDER_CAP:
            graph._dense = tuple(masks)
        return graph

    @property
    def dense(self) -> tuple[int, ...]:
        """Neighbor bitmasks, bit v of entry u set iff uv is an edge

        Raises:
            OrderTooLargeError: If n > 64
        """

        if self._dense is None:
            if self.n > DENSE_ORDER_CAP:
                raise OrderTooLargeError(self.n, DENSE_ORDER_CAP, "dense view")
            with _DENSE_LOCK:
                if self._dense is None:
                    self._dense = tuple(
                        sum(1 << v for v in row) for row in self.adj
                    )
        return self._dense

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Iterate edges as (u, v) with u < v in lexicographic order"""

        for u, row in enumerate(self.adj):
            for v in row:
                if u < v:
                    yield (u, v)

    def adjacency_matrix(self) -> list[list[int]]:
        matrix = [[0] * self.n for _ in range(self.n)]
        for u, row in enumerate(self.adj):
            for v in row:
                matrix[u][v] = 1
        return matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        self.n, self.adj = state
        self._dense = None
        self._edge_count = sum(len(row) for row in self.adj) // 2


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of a graph or an odd closed walk proving there is none

    For a bipartite graph part_v holds the smallest vertex of every component
    """

    part_v: tuple[int, ...] = ()
    part_w: tuple[int, ...] = ()
    odd_cycle: Optional[tuple[int, ...]] = None

    @property
    def is_bipartite(self) -> bool:
        return self.odd_cycle is None


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Split the vertices into maximal connected sets

    Returns:
        list[tuple[int, ...]]: Sorted components, ordered by smallest member
    """

    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = [start]
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    members.append(v)
                    queue.append(v)
        components.append(tuple(sorted(members)))
    return components


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def bipartition(g: Graph) -> Bipartition:
    """Two-color g by breadth-first search from the smallest vertex of each component

    Returns:
        Bipartition: The parts, or an odd closed walk when g has an odd cycle
    """

    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return Bipartition(odd_cycle=_odd_cycle(u, v, parent, depth))

    part_v = tuple(v for v in range(g.n) if color[v] == 0)
    part_w = tuple(v for v in range(g.n) if color[v] == 1)
    return Bipartition(part_v=part_v, part_w=part_w)


def _odd_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u and v share a color, so their tree paths to the common ancestor have equal parity
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def hairs(g: Graph) -> frozenset[int]:
    """Vertices of degree 1; an empty result means g is bald"""

    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)


def is_bald(g: Graph) -> bool:
    return all(len(row) != 1 for row in g.adj)


def is_tree(g: Graph) -> bool:
    """A tree has at least one vertex, is connected and has n-1 edges"""

    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(connected_components(g))


def is_triangle_free(g: Graph) -> bool:
    masks = g.dense
    for u, v in g.edges():
        if masks[u] & masks[v]:
            return False
    return True


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on a vertex set, renumbered by sorted order

    Raises:
        VertexOutOfRangeError: If a vertex lies outside 0..n-1
    """

    chosen = sorted(set(vertices))
    for v in chosen:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(f"Vertex {v} outside 0..{g.n - 1}")

    index = {v: i for i, v in enumerate(chosen)}
    adj = [[index[u] for u in g.adj[v] if u in index] for v in chosen]
    return Graph.from_adjacency(adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex v to perm[v]"""

    if sorted(perm) != list(range(g.n)):
        raise ValueError("Invalid permutation")

    adj: list[list[int]] = [[] for _ in range(g.n)]
    for v, row in enumerate(g.adj):
        adj[perm[v]] = sorted(perm[u] for u in row)
    return Graph.from_adjacency(adj)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[list[int]] = []
    for g in graphs:
        offset = len(adj)
        adj.extend([u + offset for u in row] for row in g.adj)
    return Graph.from_adjacency(adj)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("Invalid cycle length")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)
