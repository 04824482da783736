"""Exact spectral tools for the exponential distance matrix of a graph.

The matrix has entry q**dist(u, v) for vertices in the same component and 0
otherwise.  Its characteristic polynomial is computed exactly in Z[q, x].
"""

from .errors import *  # noqa: F401,F403
from .expdist import (
    are_cospectral_at,
    are_dq_cospectral,
    build_dq,
    charpoly,
    charpoly_at_q,
    numeric_spectrum,
)
from .graph import Graph, emit_graph6, parse_graph6
from .polyring import BiPoly, GaussianRational, UPoly, bareiss_det

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "GaussianRational",
    "Graph",
    "UPoly",
    "are_cospectral_at",
    "are_dq_cospectral",
    "bareiss_det",
    "build_dq",
    "charpoly",
    "charpoly_at_q",
    "emit_graph6",
    "numeric_spectrum",
    "parse_graph6",
]
