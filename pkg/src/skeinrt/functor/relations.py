"""Exact checks of the tangle relations I-VII on a generator table.

Each move is a list of instances, pairs of tangle words (in the slice DSL,
bottom slice first) that present the same tangle.  A table satisfies a move
when both sides of every instance evaluate to the same matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..diagram.errors import DiagramValidationError
from ..diagram.tangle import TangleWord, infer_levels, parse_tangle
from .kauffman import GeneratorTable, eval_word, kauffman_table
from .labeled import LabeledTangle, eval_labeled

__all__ = ["MOVES", "RelationReport", "check_relations", "check_labeled_relations",
           "move_instances"]

_GENS = ("over", "under", "cup", "cap")
_ARITY = {"over": (2, 2), "under": (2, 2), "cup": (0, 2), "cap": (2, 0)}


def _ids(k: int) -> list[str]:
    return ["id"] * k


def _line(*parts) -> str:
    return ", ".join(p for group in parts for p in ([group] if isinstance(group, str) else group))


def _interchange(t: str, s: str) -> list[tuple[str, str]]:
    (dt, ct), (ds, cs) = _ARITY[t], _ARITY[s]
    both = _line(t, s)
    out = []
    # T below S, and S below T
    lhs = "\n".join([_line(t, _ids(ds)), _line(_ids(ct), s)])
    rhs = "\n".join([_line(_ids(dt), s), _line(t, _ids(cs))])
    out.append((lhs, both))
    out.append((both, rhs))
    return out


def move_instances() -> dict[str, list[tuple[str, str]]]:
    moves: dict[str, list[tuple[str, str]]] = {}
    moves["I"] = [("id, cup\n{x}, id\nid, cap".format(x=x), "cup, id\nid, {x}\ncap, id".format(x=x))
                  for x in ("over", "under")]
    moves["II"] = [("over\nunder", "id, id"), ("under\nover", "id, id")]
    moves["III"] = [("{x}, id\nid, {x}\n{x}, id".format(x=x), "id, {x}\n{x}, id\nid, {x}".format(x=x))
                    for x in ("over", "under")]
    moves["IV"] = [("id, cup\ncap, id", "id"), ("cup, id\nid, cap", "id")]
    v = []
    for x, y in (("over", "under"), ("under", "over")):
        v.append(("id, id, cup\nid, {x}, id\ncap, id, id".format(x=x), y))
        v.append(("cup, id, id\nid, {x}, id\nid, id, cap".format(x=x), y))
        # a strand sliding across a cap or a cup keeps its over/under status
        v.append(("id, {x}\ncap, id".format(x=x), "{y}, id\nid, cap".format(y=y)))
        v.append(("cup, id\nid, {x}".format(x=x), "id, cup\n{y}, id".format(y=y)))
    moves["V"] = v
    vi = []
    for t in _GENS:
        for s in _GENS:
            vi.extend(_interchange(t, s))
    moves["VI"] = vi
    vii = []
    for t in _GENS:
        d, c = _ARITY[t]
        if d:
            vii.append(("\n".join([_line(_ids(d)), t]), t))
        if c:
            vii.append(("\n".join([t, _line(_ids(c))]), t))
    vii.append(("id\nid", "id"))
    moves["VII"] = vii
    return moves


MOVES = move_instances()


@dataclass
class RelationReport:
    """Per-move outcome; ``failures`` keeps the offending instances."""

    results: dict[str, bool] = field(default_factory=dict)
    failures: dict[str, list[str]] = field(default_factory=dict)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def failed_moves(self) -> list[str]:
        return [m for m, ok in self.results.items() if not ok]

    def record(self, move: str, ok: bool, detail: str = "") -> None:
        self.checked += 1
        self.results[move] = self.results.get(move, True) and ok
        if not ok:
            self.failures.setdefault(move, []).append(detail)

    def to_json(self) -> dict:
        return {"passed": self.passed, "moves": dict(self.results),
                "failures": {k: v[:5] for k, v in self.failures.items()},
                "checked": self.checked}

    def __str__(self):
        return "\n".join(f"Move {m}: {'pass' if ok else 'FAIL'}" for m, ok in self.results.items())


def check_relations(table: GeneratorTable | None = None,
                    moves: dict[str, list[tuple[str, str]]] | None = None) -> RelationReport:
    """Evaluate every move instance with one space on all strands."""
    table = kauffman_table() if table is None else table
    report = RelationReport()
    for name, pairs in (moves or MOVES).items():
        for lhs, rhs in pairs:
            try:
                ok = eval_word(parse_tangle(lhs), table) == eval_word(parse_tangle(rhs), table)
                detail = f"{lhs!r} vs {rhs!r}"
            except DiagramValidationError as exc:
                ok, detail = False, f"{lhs!r}: {exc}"
            report.record(name, ok, detail)
    return report


# ---------------------------------------------------------------------------
# labeled tables

def _boundary_classes(w: TangleWord):
    levels = infer_levels(w)
    top = len(w.slices)
    touching = sorted({st.comp for st in levels[0]} | {st.comp for st in levels[top]})
    ncomp = 1 + max((st.comp for lv in levels for st in lv), default=-1)
    if len(touching) != ncomp:
        raise DiagramValidationError("move instances must not contain closed components")
    return levels, touching


def _pin(w: TangleWord, bottom, top):
    """Orient ``w`` from boundary (label, up) data and label its components."""
    k = len(w.slices)
    fixed = {(0, i): up for i, (_, up) in enumerate(bottom)}
    fixed.update({(k, i): up for i, (_, up) in enumerate(top)})
    levels = infer_levels(w, fixed)
    labels: dict[int, int] = {}
    for lv, objs in ((levels[0], bottom), (levels[k], top)):
        for st, (n, _) in zip(lv, objs):
            if labels.setdefault(st.comp, n) != n:
                raise DiagramValidationError("boundary labels disagree along a component")
    return LabeledTangle(TangleWord(w.slices, levels), labels)


def _labeled_instances(lhs: TangleWord, max_label: int):
    levels, comps = _boundary_classes(lhs)
    k = len(lhs.slices)
    for labels in itertools.product(range(1, max_label + 1), repeat=len(comps)):
        lab = dict(zip(comps, labels))
        for flips in itertools.product((False, True), repeat=len(comps)):
            flip = dict(zip(comps, flips))
            bottom = [(lab[st.comp], st.up ^ flip[st.comp]) for st in levels[0]]
            top = [(lab[st.comp], st.up ^ flip[st.comp]) for st in levels[k]]
            yield bottom, top


def check_labeled_relations(ctx, max_label: int = 4, yb_max_label: int = 3,
                            moves: dict[str, list[tuple[str, str]]] | None = None,
                            wide_max_label: int | None = None) -> RelationReport:
    """Moves I-VII for the ribbon functor of ``ctx`` in every consistent orientation.

    Instances with one or two boundary components use labels up to
    ``max_label``; Move III uses ``yb_max_label``; other instances with three or
    more components use ``wide_max_label`` (default ``yb_max_label``).
    """
    wide = yb_max_label if wide_max_label is None else wide_max_label
    report = RelationReport()
    for name, pairs in (moves or MOVES).items():
        for lhs_text, rhs_text in pairs:
            lhs, rhs = parse_tangle(lhs_text), parse_tangle(rhs_text)
            _, comps = _boundary_classes(lhs)
            bound = yb_max_label if name == "III" else (max_label if len(comps) <= 2 else wide)
            for bottom, top in _labeled_instances(lhs, bound):
                detail = f"{lhs_text!r} vs {rhs_text!r} on {bottom} -> {top}"
                try:
                    left = eval_labeled(_pin(lhs, bottom, top), ctx)
                    right = eval_labeled(_pin(rhs, bottom, top), ctx)
                    ok = left == right
                except DiagramValidationError as exc:
                    ok, detail = False, f"{detail}: {exc}"
                report.record(name, ok, detail)
    return report
