"""graph6 codec

Follows the published graph6 layout: an order prefix N(n) followed by the
upper triangle of the adjacency matrix, column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per printable byte
(value + 63) and padded with zero bits. Lines are validated here and every defect is
reported with its byte offset; networkx packs and unpacks the bits.
"""

from typing import Iterable

import networkx as nx

from .errors import (
    InvalidCharacterError,
    MalformedHeaderError,
    NonCanonicalPaddingError,
    OrderTooLargeError,
    Sparse6NotSupportedError,
    TrailingBitsError,
    TruncatedGraph6Error,
)
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
MAX_ORDER = 68719476735

_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047


def _decode_order(text: str, base: int) -> tuple[int, int]:
    """Return (order, length of the order prefix); offsets are reported relative to base"""

    if not text:
        raise MalformedHeaderError("Empty graph6 line", base)

    if text[0] != "~":
        return ord(text[0]) - 63, 1

    if len(text) >= 2 and text[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1

    if len(text) < start + width:
        raise MalformedHeaderError("Order prefix is cut short", base + len(text))

    n = 0
    for offset in range(start, start + width):
        value = ord(text[offset]) - 63
        if not 0 <= value <= 63:
            raise MalformedHeaderError("Invalid byte in order prefix", base + offset)
        n = (n << 6) | value

    # Only the shortest form of N(n) is canonical
    if (width == 3 and n <= _SHORT_LIMIT) or (width == 6 and n <= _MEDIUM_LIMIT):
        raise MalformedHeaderError(f"Order {n} uses a longer prefix than needed", base)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line

    Args:
        text (str): A graph6 string, optionally with the >>graph6<< header

    Returns:
        Graph: The encoded graph

    Raises:
        Sparse6NotSupportedError: If the line is sparse6
        MalformedHeaderError: If the order prefix is invalid
        InvalidCharacterError: If a byte lies outside 63..126
        TruncatedGraph6Error: If adjacency bytes are missing
        TrailingBitsError: If there are more bytes than the order needs
        NonCanonicalPaddingError: If the padding bits are not zero
    """

    line = text.strip()
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
        base = len(GRAPH6_HEADER)
    if line.startswith(":") or line.startswith(">>sparse6<<"):
        raise Sparse6NotSupportedError("sparse6 input is not supported, expected graph6", base)
    if line.startswith("&"):
        raise MalformedHeaderError("digraph6 input is not supported, expected graph6", base)

    for offset, char in enumerate(line):
        if not 63 <= ord(char) <= 126:
            raise InvalidCharacterError(f"Invalid byte {char!r}", base + offset)

    n, start = _decode_order(line, base)

    bit_count = n * (n - 1) // 2
    byte_count = (bit_count + 5) // 6
    body = line[start:]
    if len(body) < byte_count:
        raise TruncatedGraph6Error(
            f"Expected {byte_count} adjacency bytes, found {len(body)}", base + len(line)
        )
    if len(body) > byte_count:
        raise TrailingBitsError(
            f"Expected {byte_count} adjacency bytes, found {len(body)}",
            base + start + byte_count,
        )

    padding = byte_count * 6 - bit_count
    if padding and (ord(body[-1]) - 63) & ((1 << padding) - 1):
        raise NonCanonicalPaddingError("Padding bits must be zero", base + len(line) - 1)

    decoded = nx.from_graph6_bytes(line.encode("ascii"))
    return Graph.from_adjacency([sorted(decoded.adj[v]) for v in range(n)])


def _to_graph6(n: int, edges: Iterable[tuple[int, int]]) -> str:
    if n > MAX_ORDER:
        raise OrderTooLargeError(n, MAX_ORDER, "graph6")
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def write_graph6(g: Graph) -> str:
    """Encode a graph in the shortest canonical graph6 form

    Raises:
        OrderTooLargeError: If n exceeds the format bound
    """

    return _to_graph6(g.n, g.edges())


def write_graph6_masks(masks: tuple[int, ...]) -> str:
    """Encode a graph given as neighbor bitmasks"""

    edges = ((i, j) for j, row in enumerate(masks) for i in range(j) if (row >> i) & 1)
    return _to_graph6(len(masks), edges)
