"""Covering paths, trails and cycles for k-dimensional point grids."""

from .chain import Chain, ChainError
from .geom import Box, Segment, get_eps, set_eps, tolerance
from .grid import GridSpec, corner_set, enumerate_points, maabb, raabb
from .mlai import generate_mlai, mlai_edge_count
from .verify import VerificationReport, verify, visit_count

__all__ = [
    "Box", "Chain", "ChainError", "GridSpec", "Segment", "VerificationReport",
    "corner_set", "enumerate_points", "generate_mlai", "get_eps", "maabb",
    "mlai_edge_count", "raabb", "set_eps", "tolerance", "verify", "visit_count",
]
