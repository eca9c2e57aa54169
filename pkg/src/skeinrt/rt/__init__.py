"""Reshetikhin-Turaev invariants of closed 3-manifolds and TQFT dimensions."""

from .invariant import (DEFAULT_MAX_COST, CostExceeded, RTResult, coloring_sum, estimate_cost,
                        rt_invariant, s3_value)
from .tqft import SPINES, count_labelings, spines_for, tqft_dim, verlinde_dim
from .kirby import KirbyPair, KirbyReport, kirby_invariance_suite, load_corpus, s3_presentations

__all__ = [
    "SPINES",
    "count_labelings",
    "spines_for",
    "tqft_dim",
    "verlinde_dim",
    "KirbyPair",
    "KirbyReport",
    "kirby_invariance_suite",
    "load_corpus",
    "s3_presentations",
    "CostExceeded",
    "DEFAULT_MAX_COST",
    "RTResult",
    "coloring_sum",
    "estimate_cost",
    "rt_invariant",
    "s3_value",
]
