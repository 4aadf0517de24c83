"""Canonical labeling by equitable refinement and individualization

The refinement splits cells by neighbor counts into earlier cells, always in a
fixed order, so it commutes with relabeling. Leaves of the search tree are
discrete partitions; the canonical labeling is the leaf with the least
adjacency code. Automorphisms discovered at equal leaves prune siblings that
lie in the same orbit under the pointwise stabilizer of the current prefix.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import OrderTooLargeError
from .graph import DENSE_ORDER_CAP, Graph
from .graph6 import write_graph6_masks


@dataclass(frozen=True)
class CanonicalForm:
    """label[v] is the canonical position of vertex v; code is the graph6 of the relabeled graph"""

    label: tuple[int, ...]
    code: str


def refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells until every cell has uniform neighbor counts into every other cell

    Args:
        masks (Sequence[int]): Neighbor bitmask per vertex
        cells (list[list[int]]): Ordered partition of the vertices

    Returns:
        list[list[int]]: The coarsest equitable refinement, cell order preserved
    """

    cells = [list(c) for c in cells]
    stable = False
    while not stable:
        stable = True
        for index in range(len(cells)):
            splitter = 0
            for v in cells[index]:
                splitter |= 1 << v

            refined: list[list[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((masks[v] & splitter).bit_count(), []).append(v)
                if len(groups) == 1:
                    refined.append(cell)
                else:
                    split = True
                    refined.extend(groups[count] for count in sorted(groups))

            if split:
                cells = refined
                stable = False
                break
    return cells


def degree_partition(masks: Sequence[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v, mask in enumerate(masks):
        groups.setdefault(mask.bit_count(), []).append(v)
    return [groups[d] for d in sorted(groups)]


def code_of(masks: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of the graph relabeled so order[i] becomes i"""

    code = 0
    for j in range(1, len(order)):
        row = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


class _Search:
    def __init__(self, masks: Sequence[int]):
        self.masks = masks
        self.best_code: Optional[int] = None
        self.best_order: Optional[list[int]] = None
        self.automorphisms: list[list[int]] = []

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            self._leaf([c[0] for c in cells])
            return

        position = cells.index(target)
        explored: list[int] = []
        for v in target:
            if explored and self._equivalent(v, explored, prefix):
                continue
            rest = [u for u in target if u != v]
            branch = cells[:position] + [[v], rest] + cells[position + 1 :]
            self.run(refine(self.masks, branch), prefix + [v])
            explored.append(v)

    def _leaf(self, order: list[int]) -> None:
        code = code_of(self.masks, order)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_order = order
        elif code == self.best_code:
            gamma = [0] * len(order)
            for u, w in zip(order, self.best_order):
                gamma[u] = w
            self.automorphisms.append(gamma)

    def _equivalent(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        generators = [
            g for g in self.automorphisms if all(g[p] == p for p in prefix)
        ]
        if not generators:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for g in generators:
                w = g[u]
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        return any(u in orbit for u in explored)


def canonical_order(masks: Sequence[int]) -> tuple[list[int], int]:
    """Canonical vertex order and its adjacency code

    Returns:
        tuple[list[int], int]: order[i] is the vertex placed at position i
    """

    if not masks:
        return [], 0
    search = _Search(masks)
    search.run(refine(masks, degree_partition(masks)), [])
    return search.best_order, search.best_code


def canonical_masks(masks: Sequence[int]) -> tuple[int, ...]:
    """Neighbor bitmasks of the canonically relabeled graph"""

    order, _ = canonical_order(masks)
    return apply_order(masks, order)


def apply_order(masks: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    """Relabel so that order[i] becomes vertex i"""

    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i
    relabeled = [0] * len(order)
    for v, mask in enumerate(masks):
        row = 0
        while mask:
            low = mask & -mask
            row |= 1 << position[low.bit_length() - 1]
            mask ^= low
        relabeled[position[v]] = row
    return tuple(relabeled)


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant labeling of g

    Raises:
        OrderTooLargeError: If n > 64
    """

    if g.n > DENSE_ORDER_CAP:
        raise OrderTooLargeError(g.n, DENSE_ORDER_CAP, "canonical_form")

    order, _ = canonical_order(g.dense)
    label = [0] * g.n
    for i, v in enumerate(order):
        label[v] = i
    relabeled = [0] * g.n
    for v in range(g.n):
        relabeled[label[v]] = sum(1 << label[u] for u in g.adj[v])
    return CanonicalForm(label=tuple(label), code=write_graph6_masks(tuple(relabeled)))


def canonical_code(g: Graph) -> str:
    return canonical_form(g).code


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_code(g) == canonical_code(h)
