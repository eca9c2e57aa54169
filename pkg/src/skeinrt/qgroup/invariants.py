"""Quantum traces, twists and colored link invariants."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..diagram.errors import DiagramValidationError
from ..diagram.pd import LinkDiagram, parse_pd
from ..diagram.tangle import to_tangle_word
from ..functor.labeled import LabeledTangle, eval_labeled
from ..functor.matrix import SparseMatrix

__all__ = ["qtr", "qdim", "twist", "twist_power", "colored_invariant"]

_KINK = parse_pd("X(1,1,2,2)", name="kinked unknot")


def qtr(f: SparseMatrix, n: int, ctx):
    """tr(G f) on V_n, where G = s^(2h)."""
    if f.shape != (n, n):
        raise DiagramValidationError(f"qtr on V_{n} needs an {n}x{n} matrix, got {f.rows}x{f.cols}")
    total = ctx.zero
    for i in range(n):
        v = f.get(i, i, None)
        if v is not None:
            total = total + ctx.g_diag((n, True), i) * v
    return total


def qdim(n: int, ctx):
    return ctx.cached(("qdim", n), lambda: qtr(SparseMatrix.identity(n, ctx.one), n, ctx))


def twist(n: int, ctx):
    """theta_n: the +1-kinked unknot labeled V_n divided by the plain one."""
    if n < 1:
        raise DiagramValidationError(f"invalid label {n}")

    def build():
        kinked = eval_labeled(LabeledTangle(_word_for(_KINK), [n]), ctx).entries[(0, 0)]
        return ctx.div(kinked, qdim(n, ctx))
    return ctx.cached(("twist", n), build)


def twist_power(n: int, k: int, ctx):
    """theta_n ** k for any integer k."""
    def build():
        t = twist(n, ctx)
        if k >= 0:
            return t ** k if k else ctx.one
        return ctx.div(ctx.one, t ** (-k))
    return ctx.cached(("twist^", n, k), build)


@lru_cache(maxsize=512)
def _word_for(d: LinkDiagram):
    return to_tangle_word(d)


def colored_invariant(d: LinkDiagram, labels: Sequence[int], ctx,
                      framings: Sequence[int] | None = None):
    """F of ``d`` with component i labeled V_{labels[i]}.

    Components are numbered as in ``d`` (crossing components first, then the
    free loops).  Without ``framings`` the blackboard framing is used; otherwise
    component i is corrected by theta^(framings[i] - self-writhe_i).
    """
    c = d.component_count
    labels = [int(n) for n in labels]
    if len(labels) != c:
        raise DiagramValidationError(f"{c} components but {len(labels)} labels")
    for i, n in enumerate(labels):
        if n < 1:
            raise DiagramValidationError(f"invalid label {n} on component {i}")
    if framings is not None and len(framings) != c:
        raise DiagramValidationError(f"{c} components but {len(framings)} framings")
    if c == 0:
        return ctx.one
    value = eval_labeled(LabeledTangle(_word_for(d), labels), ctx).entries.get((0, 0), ctx.zero)
    if framings is not None and value:
        sw = d.self_writhe()
        for n, f, w in zip(labels, framings, sw):
            if f != w and n > 1:
                value = value * twist_power(n, int(f) - w, ctx)
    return value
