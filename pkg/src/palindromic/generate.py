"""Isomorphism-free generation of small graphs and trees, random graphs and graph6 ingestion

Graphs are generated by orderly augmentation: a child of a canonical parent
of order n - 1 gains vertex n - 1 with every possible neighborhood and is kept
only when deleting its canonically last vertex gives back the parent. Each
isomorphism class is reached from exactly one parent, and children of one
parent are deduplicated by their canonical code.
"""

import heapq
import logging
import random

from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional, Sequence

from .canon import apply_order, canonical_code, canonical_order, degree_partition, refine
from .errors import Graph6Error, OrderTooLargeError
from .graph import Graph, is_connected, is_triangle_free
from .graph6 import parse_graph6
from .models import SurveyFilter

logger = logging.getLogger(__name__)

CONNECTED_ORDER_CAP = 10


def _delete_vertex(masks: Sequence[int], w: int) -> list[int]:
    low = (1 << w) - 1
    return [
        (mask & low) | ((mask >> (w + 1)) << w) for v, mask in enumerate(masks) if v != w
    ]


def augment(parent: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Canonical children of a canonical parent, each in canonical labeling

    Args:
        parent (tuple[int, ...]): Neighbor bitmasks of a canonically labeled graph

    Returns:
        list[tuple[int, ...]]: One child per isomorphism class whose canonical parent is this one
    """

    m = len(parent)
    _, parent_code = canonical_order(parent)
    seen: set[int] = set()
    children = []
    for neighborhood in range(1 << m):
        masks = [mask | (((neighborhood >> v) & 1) << m) for v, mask in enumerate(parent)]
        masks.append(neighborhood)

        # the canonically last vertex always lies in the last cell of the root partition
        if m not in refine(masks, degree_partition(masks))[-1]:
            continue

        order, code = canonical_order(masks)
        if code in seen:
            continue
        seen.add(code)

        _, reduced = canonical_order(_delete_vertex(masks, order[-1]))
        if reduced == parent_code:
            children.append(apply_order(masks, order))
    return children


def _augment_all(parents: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    children = []
    for parent in parents:
        children.extend(augment(parent))
    return children


def chunked(items: Sequence, size: int) -> list[Sequence]:
    return [items[i : i + size] for i in range(0, len(items), size)]


def graph_level(n: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Canonical bitmasks of every graph of order n, one per isomorphism class

    The order of the result is deterministic and independent of workers.
    """

    if n < 0:
        raise ValueError("Invalid order")
    if n == 0:
        return [()]

    level: list[tuple[int, ...]] = [(0,)]
    for m in range(2, n + 1):
        if workers > 1 and len(level) > workers:
            with Pool(processes=workers) as pool:
                parts = pool.imap(_augment_all, chunked(level, max(1, len(level) // (4 * workers))))
                level = [child for part in parts for child in part]
        else:
            level = _augment_all(level)
        logger.debug("Generated %d graphs of order %d", len(level), m)
    return level


def _stream_level(n: int, workers: int) -> Iterator[tuple[int, ...]]:
    """Children of the order n - 1 level, yielded as each parent is augmented

    Only the parent level is held in memory. The order matches graph_level(n).
    """

    if n <= 1:
        yield from graph_level(n)
        return

    parents = graph_level(n - 1, workers)
    if workers > 1 and len(parents) > workers:
        with Pool(processes=workers) as pool:
            for part in pool.imap(_augment_all, chunked(parents, max(1, len(parents) // (4 * workers)))):
                yield from part
    else:
        for parent in parents:
            yield from augment(parent)


def enumerate_graphs(n: int, workers: int = 1) -> Iterator[Graph]:
    """Every graph of order n up to isomorphism, connected or not

    Raises:
        ValueError: If n is negative
        OrderTooLargeError: If n > 10
    """

    if n < 0:
        raise ValueError("Invalid order")
    if n > CONNECTED_ORDER_CAP:
        raise OrderTooLargeError(n, CONNECTED_ORDER_CAP, "enumerate_graphs")
    for masks in _stream_level(n, workers):
        yield Graph.from_masks(masks)


def enumerate_connected(n: int, workers: int = 1) -> Iterator[Graph]:
    """Connected graphs of order n, one per isomorphism class, in a fixed order

    Raises:
        ValueError: If n < 1
        OrderTooLargeError: If n > 10
    """

    if n < 1:
        raise ValueError("Invalid order")
    for g in enumerate_graphs(n, workers):
        if is_connected(g):
            yield g


def tree_code(t: Graph) -> str:
    """Isomorphism code of a tree: the least parenthesis string over its centers"""

    n = t.n
    if n <= 2:
        return "()" * n

    degree = [len(row) for row in t.adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in t.adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    centers = layer

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(u, v) for u in t.adj[v] if u != parent)) + ")"

    return min(encode(c, -1) for c in centers)


def enumerate_trees(n: int) -> list[Graph]:
    """Trees of order n up to isomorphism, grown leaf by leaf from smaller trees

    Raises:
        ValueError: If n < 1
    """

    if n < 1:
        raise ValueError("Invalid order")

    level = [Graph(1)]
    for m in range(2, n + 1):
        found: dict[str, Graph] = {}
        for t in level:
            base = list(t.edges())
            for v in range(t.n):
                child = Graph(m, base + [(v, m - 1)])
                found.setdefault(tree_code(child), child)
        level = [found[code] for code in sorted(found)]
    return level


def random_tree(n: int, rng: Optional[random.Random] = None) -> Graph:
    """Uniform random labeled tree decoded from a random Pruefer sequence

    Raises:
        ValueError: If n < 1
    """

    if n < 1:
        raise ValueError("Invalid order")
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])

    rng = rng or random.Random()
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    remaining = [1] * n
    for v in sequence:
        remaining[v] += 1

    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    adj: list[list[int]] = [[] for _ in range(n)]
    for v in sequence:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(v)
        adj[v].append(leaf)
        remaining[v] -= 1
        if remaining[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    adj[u].append(w)
    adj[w].append(u)
    return Graph.from_adjacency([sorted(row) for row in adj])


def random_graph(n: int, p: float, rng: Optional[random.Random] = None) -> Graph:
    """Erdos-Renyi graph: each pair joined independently with probability p"""

    if n < 0:
        raise ValueError("Invalid order")
    if not 0.0 <= p <= 1.0:
        raise ValueError("Invalid edge probability")

    rng = rng or random.Random()
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@dataclass(frozen=True)
class LineError:
    line: int
    message: str


class GraphStream:
    """Graphs parsed from graph6 lines, filtered as a survey would filter them

    Lines that fail to parse are recorded in errors with their 1-based line
    number; the stream carries on with the next line.
    """

    def __init__(self, lines: Iterable[str], survey_filter: SurveyFilter, dedupe: bool = False):
        self.lines = lines
        self.filter = survey_filter
        self.dedupe = dedupe
        self.errors: list[LineError] = []

    def _accepts(self, g: Graph) -> bool:
        if g.n != self.filter.order:
            return False
        if self.filter.connected_only and not is_connected(g):
            return False
        if self.filter.triangle_free and not is_triangle_free(g):
            return False
        return True

    def __iter__(self) -> Iterator[Graph]:
        seen: set[str] = set()
        for number, line in enumerate(self.lines, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                g = parse_graph6(text)
            except Graph6Error as e:
                logger.warning("Line %d: %s", number, e)
                self.errors.append(LineError(line=number, message=str(e)))
                continue

            if not self._accepts(g):
                continue
            if self.dedupe:
                code = canonical_code(g)
                if code in seen:
                    continue
                seen.add(code)
            yield g


def ingest_stream(lines: Iterable[str], survey_filter: SurveyFilter, dedupe: bool = False) -> GraphStream:
    return GraphStream(lines, survey_filter, dedupe)
