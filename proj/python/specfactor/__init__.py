"""Spectral radius, graph factors, and extremal constructions (64-vertex cap)."""

import json as _json

from ._core import (
    CapacityError,
    ConvergenceError,
    Graph,
    ab_factor,
    canonical_code,
    circulant,
    compare_rho,
    complete_graph,
    count_perfect_matchings,
    fractional_pm,
    from_graph6,
    g_unique_kfactor,
    g_unique_pm,
    h_na,
    max_matching_size,
    perfect_matching,
    spectral_radius,
    t_graph,
    to_graph6,
)
from ._core import verify as _verify_raw

__version__ = "1.0.0"

__all__ = [
    "CapacityError",
    "ConvergenceError",
    "Graph",
    "ab_factor",
    "canonical_code",
    "circulant",
    "compare_rho",
    "complete_graph",
    "count_perfect_matchings",
    "fractional_pm",
    "from_graph6",
    "g_unique_kfactor",
    "g_unique_pm",
    "h_na",
    "max_matching_size",
    "perfect_matching",
    "spectral_radius",
    "t_graph",
    "to_graph6",
    "verify",
]


def verify(theorem, **params):
    """Run a verification and return the report as a dict.

    theorem: "thm1.1" (two_n=), "thm1.3" (n=, a=, b=), "cor1.1" (n=, k=),
    "thm1.2" (n=, b=, delta=, samples=, seed=), "thm5.1i" / "thm5.1ii"
    (n=, b=, delta=, samples=, seed=), or "lemmas" (n_max=).
    """
    return _json.loads(_verify_raw(theorem, **params))
