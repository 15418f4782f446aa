"""Z/2 cohomology tools for triangulated 3-manifolds.

Triangulations are passed around as TRI-v1 text.
"""

import json

from ._core import (
    Z2TriError,
    canonical,
    flip,
    flippable_edges,
    h1_rank,
    is_isomorphic,
    layered_solid_torus,
    promote,
    skeleton,
    twisted_loop,
)
from ._core import analyze_json


def analyze(text):
    """Analysis report as a dict."""
    return json.loads(analyze_json(text))


__all__ = [
    "Z2TriError",
    "analyze",
    "analyze_json",
    "canonical",
    "flip",
    "flippable_edges",
    "h1_rank",
    "is_isomorphic",
    "layered_solid_torus",
    "promote",
    "skeleton",
    "twisted_loop",
]
