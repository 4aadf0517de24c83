"""Exact characteristic polynomials, palindromicity and hairings of simple graphs"""

from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .poly import IntPolynomial, PalindromeClass, PalindromeKind, classify
from .spectral import char_poly

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "IntPolynomial",
    "PalindromeClass",
    "PalindromeKind",
    "char_poly",
    "classify",
    "parse_graph6",
    "write_graph6",
]
