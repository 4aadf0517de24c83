class PalindromicError(Exception):
    """Base class for all domain errors raised by the toolkit"""

    pass


class InvalidGraphError(PalindromicError):
    """Raised when an edge list describes a loop, a parallel edge or a bad vertex"""

    pass


class VertexOutOfRangeError(InvalidGraphError):
    """Raised when a vertex index lies outside 0..n-1"""

    pass


class OrderTooLargeError(PalindromicError):
    """Raised when a graph exceeds the order cap of an operation"""

    def __init__(self, order: int, cap: int, operation: str):
        super().__init__(f"{operation} supports order <= {cap}, got {order}")
        self.order = order
        self.cap = cap
        self.operation = operation


class Graph6Error(PalindromicError):
    """Raised when a graph6 line cannot be decoded"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
        self.message = message


class MalformedHeaderError(Graph6Error):
    """Raised when the order prefix of a graph6 line is invalid"""

    pass


class TrailingBitsError(Graph6Error):
    """Raised when a graph6 line carries more bytes than its order needs"""

    pass


class TruncatedGraph6Error(Graph6Error):
    """Raised when a graph6 line ends before the adjacency bits are complete"""

    pass


class NonCanonicalPaddingError(Graph6Error):
    """Raised when the padding bits of the last graph6 byte are not zero"""

    pass


class InvalidCharacterError(Graph6Error):
    """Raised when a graph6 byte lies outside the printable range 63..126"""

    pass


class Sparse6NotSupportedError(Graph6Error):
    """Raised when a sparse6 line is given where graph6 is expected"""

    pass


class ZeroPolynomialError(PalindromicError):
    """Raised when an operation needs a nonzero polynomial"""

    pass


class DegreeMismatchError(PalindromicError):
    """Raised when a polynomial does not have the declared degree"""

    pass


class NotMonicError(PalindromicError):
    """Raised when a polynomial must be monic but is not"""

    pass


class NotATreeError(PalindromicError):
    """Raised when a tree-only operation receives another graph"""

    pass


class NotAForestError(PalindromicError):
    """Raised when a forest-only operation receives a graph with a cycle"""

    pass


class NotBipartiteError(PalindromicError):
    """Raised when a bipartite-only operation receives an odd cycle"""

    pass


class NotConnectedError(PalindromicError):
    """Raised when a connected-only operation receives a disconnected graph"""

    pass


class SeedNotPalindromicError(PalindromicError):
    """Raised when a family seed is not a connected bipartite palindromic graph"""

    pass


class FactorNotPalindromicError(PalindromicError):
    """Raised when a family factor is not a connected bipartite (anti)palindromic graph"""

    pass


class EmissionFailedVerificationError(PalindromicError):
    """Raised when a generated family member fails its own verification"""

    pass


class SpectralMismatchError(PalindromicError):
    """Raised when two independent polynomial computations disagree"""

    pass


class MissingReportError(PalindromicError):
    """Raised when a reconciliation lacks a survey report it needs"""

    pass


class CheckpointError(PalindromicError):
    """Raised when a checkpoint file has an unknown format or version"""

    pass


class CheckpointNotFoundError(PalindromicError):
    """Raised when a checkpoint key is not present in the store"""

    pass


class SeedBipartiteError(PalindromicError):
    """Raised when a tensor-power seed is bipartite, so its powers fall apart"""

    pass
