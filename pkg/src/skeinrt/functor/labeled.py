"""The ribbon functor on labeled, oriented tangles.

An upward strand labeled n carries V_n, a downward one its dual.  Crossings
act by sigma o R (``over``) and its inverse (``under``); caps and cups are
evaluation and coevaluation, with G = s^(2h) inserted on the cap V (x) V* -> C
and G^-1 on the cup C -> V* (x) V.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..diagram.errors import DiagramValidationError
from ..diagram.tangle import Strand, TangleWord, infer_levels
from .engine import evaluate, local_map
from .matrix import SparseMatrix

__all__ = ["Coupon", "LabeledTangle", "eval_labeled", "generator_map"]


@dataclass(frozen=True)
class Coupon:
    """An intertwiner box: ``matrix`` maps the ``dom`` legs to the ``cod`` legs.

    Legs are (label, up) pairs listed left to right.
    """

    matrix: SparseMatrix
    dom: tuple[tuple[int, bool], ...]
    cod: tuple[tuple[int, bool], ...]

    def __post_init__(self):
        rows = 1
        for n, _ in self.cod:
            rows *= n
        cols = 1
        for n, _ in self.dom:
            cols *= n
        if self.matrix.shape != (rows, cols):
            raise DiagramValidationError(
                f"coupon matrix is {self.matrix.rows}x{self.matrix.cols}, legs need {rows}x{cols}")


@dataclass(frozen=True)
class LabeledTangle:
    """A tangle word with a representation label per component.

    ``labels`` maps component index to n (a sequence is read as indices 0..).
    When the word carries no orientation data it is inferred, with coupon legs
    pinning the strands they touch.
    """

    word: TangleWord
    labels: Mapping[int, int] | Sequence[int]
    coupons: Mapping[str, Coupon] = field(default_factory=dict)

    def resolved_levels(self) -> tuple[tuple[Strand, ...], ...]:
        if self.word.levels is not None:
            return self.word.levels
        fixed = {}
        for k, s in enumerate(self.word.slices):
            lo = hi = 0
            for g in s:
                if g.kind == "coupon":
                    cp = self._coupon(g.label)
                    if len(cp.dom) != g.dom or len(cp.cod) != g.cod:
                        raise DiagramValidationError(f"coupon {g.label!r} arity mismatch")
                    for t, (_, up) in enumerate(cp.dom):
                        fixed[(k, lo + t)] = up
                    for t, (_, up) in enumerate(cp.cod):
                        fixed[(k + 1, hi + t)] = up
                lo += g.dom
                hi += g.cod
        return infer_levels(self.word, fixed)

    def _coupon(self, name: str) -> Coupon:
        if name not in self.coupons:
            raise DiagramValidationError(f"no data for coupon {name!r}")
        return self.coupons[name]

    def label_of(self, comp: int) -> int:
        labels = self.labels
        try:
            n = labels[comp]
        except (IndexError, KeyError):
            raise DiagramValidationError(f"component {comp} has no label") from None
        if int(n) < 1:
            raise DiagramValidationError(f"invalid label {n} on component {comp}")
        return int(n)


def generator_map(ctx, kind: str, bottom: Sequence[tuple[int, bool]],
                  top: Sequence[tuple[int, bool]]) -> dict:
    """Local map of one generator between the given strand objects."""
    if kind in ("over", "under"):
        a, b = bottom
        if tuple(top) != (b, a):
            raise DiagramValidationError("crossing strands do not pass through consistently")
        return ctx.braiding(a, b) if kind == "over" else ctx.braiding_inverse(a, b)
    if kind == "cap":
        (n1, up1), (n2, up2) = bottom
        if n1 != n2 or up1 == up2:
            raise DiagramValidationError("cap joins strands with different labels or orientations")

        def build_cap():
            obj = (n1, up1)
            if up1:  # V (x) V* -> C: x*(G x)
                return {(i, i): [((), ctx.g_diag(obj, i))] for i in range(n1)}
            return {(i, i): [((), ctx.one)] for i in range(n1)}
        return ctx.cached(("cap", n1, up1), build_cap)
    if kind == "cup":
        (n1, up1), (n2, up2) = top
        if n1 != n2 or up1 == up2:
            raise DiagramValidationError("cup joins strands with different labels or orientations")

        def build_cup():
            if up1:  # C -> V (x) V*
                return {(): [((i, i), ctx.one) for i in range(n1)]}
            obj = (n2, True)  # C -> V* (x) V, G^-1 on the V factor
            return {(): [((i, i), ctx.g_diag(obj, i, -1)) for i in range(n1)]}
        return ctx.cached(("cup", n1, up1), build_cup)
    raise DiagramValidationError(f"no labeled image for generator {kind!r}")


def eval_labeled(t: LabeledTangle, ctx) -> SparseMatrix:
    levels = t.resolved_levels()
    objs = [[(t.label_of(st.comp), st.up) for st in lv] for lv in levels]
    w = t.word

    def step_for(k, lo, hi, g):
        bottom = objs[k][lo:lo + g.dom]
        top = objs[k + 1][hi:hi + g.cod]
        if g.kind == "coupon":
            cp = t._coupon(g.label)
            if [tuple(o) for o in bottom] != [tuple(o) for o in cp.dom] or \
                    [tuple(o) for o in top] != [tuple(o) for o in cp.cod]:
                raise DiagramValidationError(f"coupon {g.label!r} legs do not match their strands")
            return local_map(cp.matrix, [n for n, _ in cp.dom], [n for n, _ in cp.cod])
        return generator_map(ctx, g.kind, bottom, top)

    dims = [[n for n, _ in lv] for lv in objs] if w.slices else [[]]
    return evaluate(w, step_for, dims, ctx.one)

