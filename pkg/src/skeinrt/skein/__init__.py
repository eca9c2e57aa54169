"""Kauffman bracket and Jones polynomial."""

from .bracket import (
    KERNEL,
    bracket_functor,
    bracket_statesum,
    jones,
    loop_value,
    state_histogram,
)
from ..diagram.ops import mirror

__all__ = [
    "KERNEL",
    "bracket_functor",
    "bracket_statesum",
    "jones",
    "loop_value",
    "mirror",
    "state_histogram",
]
