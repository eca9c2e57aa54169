"""Represented U_s(sl2), colored link invariants and modular data at roots of unity."""

from .context import QGroupContext, RepAction
from .invariants import colored_invariant, qdim, qtr, twist, twist_power
from .modular import (HOPF, ModularData, ModularDataError, exact_det, fusion,
                      fusion_coefficient, modular_data, root_context, unknot_u)

__all__ = [
    "HOPF",
    "ModularData",
    "ModularDataError",
    "QGroupContext",
    "RepAction",
    "colored_invariant",
    "exact_det",
    "fusion",
    "fusion_coefficient",
    "modular_data",
    "qdim",
    "qtr",
    "root_context",
    "twist",
    "twist_power",
    "unknot_u",
]
