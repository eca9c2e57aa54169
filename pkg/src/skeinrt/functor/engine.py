"""Slice-by-slice evaluation of tangle words.

States are sparse vectors keyed by tuples of basis indices, one index per
strand.  Each non-identity generator rewrites a window of the tuple through a
local map ``{input digits: [(output digits, coeff), ...]}``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from ..diagram.errors import DiagramValidationError
from ..diagram.tangle import Gen, TangleWord
from .matrix import SparseMatrix, mixed_digits, mixed_index

__all__ = ["LocalMap", "local_map", "propagate", "evaluate"]

LocalMap = dict  # tuple[int, ...] -> list[tuple[tuple[int, ...], scalar]]


def local_map(m: SparseMatrix, in_dims: Sequence[int], out_dims: Sequence[int]) -> LocalMap:
    """Digit-level view of a generator matrix (rows = outputs, cols = inputs)."""
    in_dims, out_dims = list(in_dims), list(out_dims)
    size_in = 1
    for n in in_dims:
        size_in *= n
    size_out = 1
    for n in out_dims:
        size_out *= n
    if m.shape != (size_out, size_in):
        raise DiagramValidationError(
            f"generator matrix is {m.rows}x{m.cols}, expected {size_out}x{size_in}")
    out: LocalMap = {}
    for (r, c), v in sorted(m.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        out.setdefault(mixed_digits(c, in_dims), []).append((mixed_digits(r, out_dims), v))
    return out


def propagate(states: dict, steps: list[tuple[int, int, LocalMap]], zero) -> dict:
    """Apply (position, arity, local map) steps in order to a sparse state."""
    for pos, arity, lm in steps:
        new: dict = {}
        end = pos + arity
        for st, c in states.items():
            images = lm.get(st[pos:end])
            if not images:
                continue
            head, tail = st[:pos], st[end:]
            for out, coeff in images:
                key = head + out + tail
                val = c * coeff
                if key in new:
                    new[key] = new[key] + val
                else:
                    new[key] = val
        states = {k: v for k, v in new.items() if v}
        if not states:
            break
    return states


def evaluate(w: TangleWord, step_for: Callable[[int, int, int, Gen], LocalMap],
             level_dims: Sequence[Sequence[int]], one) -> SparseMatrix:
    """Matrix of ``w`` given a local map for each non-identity generator.

    ``level_dims[k]`` lists the strand dimensions at boundary ``k``.  Within a
    slice generators are applied left to right, so each acts at its top offset
    in the partially rewritten state.
    """
    zero = one - one
    steps = [(hi, g.dom, step_for(k, lo, hi, g)) for k, lo, hi, g in w.ops()]
    in_dims = list(level_dims[0]) if level_dims else []
    out_dims = list(level_dims[-1]) if level_dims else []
    rows = 1
    for n in out_dims:
        rows *= n
    cols = 1
    for n in in_dims:
        cols *= n
    entries = {}
    for col_digits in itertools.product(*[range(n) for n in in_dims]):
        states = propagate({tuple(col_digits): one}, steps, zero)
        c = mixed_index(col_digits, in_dims)
        for digits, v in states.items():
            entries[(mixed_index(digits, out_dims), c)] = v
    return SparseMatrix(rows, cols, entries)
