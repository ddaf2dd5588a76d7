"""Tiling polynomials for strips tiled by a Ferrers-shaped tile and unit squares."""

from .analysis import (
    fatL_failure_scan,
    first_interlacing_failure,
    first_realrooted_failure,
    interleaves,
    is_interlacing_sequence,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
)
from .anchorwords import INF, AnchorWord, enumerate_anchor_words, tiling_poly_bruteforce
from .conflictgraph import build_conflict_graph, find_claw, independence_polynomial
from .exactpoly import BiPoly, IntPoly
from .faultfree import faultfree_gf
from .series import series_coeffs, tiling_series, variant_series
from .shapes import FerrersShape, TilingParams, make_params

__version__ = "0.1.0"

__all__ = [
    "INF",
    "AnchorWord",
    "BiPoly",
    "FerrersShape",
    "IntPoly",
    "TilingParams",
    "build_conflict_graph",
    "enumerate_anchor_words",
    "fatL_failure_scan",
    "faultfree_gf",
    "find_claw",
    "first_interlacing_failure",
    "first_realrooted_failure",
    "independence_polynomial",
    "interleaves",
    "is_interlacing_sequence",
    "is_log_concave",
    "is_real_rooted",
    "is_unimodal",
    "make_params",
    "series_coeffs",
    "tiling_poly_bruteforce",
    "tiling_series",
    "variant_series",
]
