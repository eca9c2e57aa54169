"""The Kauffman-bracket tangle functor on the two-dimensional space V."""

from __future__ import annotations

from types import MappingProxyType
from typing import Mapping

from ..coeff import Laurent
from ..diagram.errors import DiagramValidationError
from ..diagram.tangle import TangleWord
from .engine import evaluate, local_map
from .matrix import SparseMatrix

__all__ = ["kauffman_table", "generic_generator_matrix", "eval_word", "GeneratorTable"]

GeneratorTable = Mapping[str, SparseMatrix]


def _a(k: int) -> Laurent:
    return Laurent.monomial(k, 1, "A")


def kauffman_table() -> GeneratorTable:
    """Immutable map from generator kind to its matrix over Z[A, A^-1].

    Basis of V is (1,0), (0,1); on V (x) V the left factor is most significant.
    """
    A, Ai = _a(1), _a(-1)
    zero = Laurent({}, "A")
    over = SparseMatrix.from_rows([
        [A, zero, zero, zero],
        [zero, zero, Ai, zero],
        [zero, Ai, A - _a(-3), zero],
        [zero, zero, zero, A],
    ])
    under = SparseMatrix.from_rows([
        [Ai, zero, zero, zero],
        [zero, Ai - _a(3), A, zero],
        [zero, A, zero, zero],
        [zero, zero, zero, Ai],
    ])
    cap = SparseMatrix.from_rows([[zero, A, -Ai, zero]])
    cup = SparseMatrix.from_rows([[zero], [-A], [Ai], [zero]])
    ident = SparseMatrix.identity(2, _a(0))
    return MappingProxyType({"over": over, "under": under, "cap": cap, "cup": cup, "id": ident})


def generic_generator_matrix(kind: str) -> SparseMatrix:
    return kauffman_table()[kind]


def eval_word(w: TangleWord, table: GeneratorTable | None = None,
              coupons: Mapping[str, SparseMatrix] | None = None) -> SparseMatrix:
    """Matrix of ``w`` with every strand carrying the same space V.

    The strand dimension is read off the cup matrix of ``table``.
    """
    table = kauffman_table() if table is None else table
    coupons = coupons or {}
    cup = table["cup"]
    dim = {1: 1, 4: 2, 9: 3, 16: 4}.get(cup.rows)
    if dim is None:
        dim = round(cup.rows ** 0.5)
    one = next(iter(table["id"].entries.values()))
    cache = {}

    def step_for(k, lo, hi, g):
        key = (g.kind, g.label)
        if key not in cache:
            if g.kind == "coupon":
                if g.label not in coupons:
                    raise DiagramValidationError(f"no matrix for coupon {g.label!r}")
                m = coupons[g.label]
            else:
                m = table[g.kind]
            cache[key] = local_map(m, [dim] * g.dom, [dim] * g.cod)
        return cache[key]

    dims = [[dim] * w.width(k) for k in range(len(w.slices) + 1)]
    if not w.slices:
        dims = [[]]
    return evaluate(w, step_for, dims, one)
