"""Modular flow, tension, chromatic and Tutte polynomials of oriented multigraphs."""

from .assignments import Coloring, ModularAssignment
from .errors import CapExceeded, GraphFormatError, InvalidInput, ModflowError, UnknownEdgeError
from .graph import Edge, OrientedMultigraph, format_graph, parse_graph, read_graph, write_graph
from .polynomials import BivariatePolynomial, Polynomial, interpolate

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "CapExceeded",
    "Coloring",
    "Edge",
    "GraphFormatError",
    "InvalidInput",
    "ModflowError",
    "ModularAssignment",
    "OrientedMultigraph",
    "Polynomial",
    "UnknownEdgeError",
    "format_graph",
    "interpolate",
    "parse_graph",
    "read_graph",
    "write_graph",
]
