"""Planar-diagram link representation.

A crossing ``X(a, b, c, d)`` lists its four arcs counterclockwise starting
from the incoming under-strand, so the under-strand runs a -> c and the
over-strand joins b and d.  A crossing is positive when the over-strand
runs d -> b.  Crossingless unknotted components are counted separately
(``loops``); in text they are written ``O``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from typing import Sequence

from .braid import BraidWord, parse_braid
from .errors import DiagramParseError, DiagramValidationError

__all__ = ["LinkDiagram", "parse_pd", "braid_closure", "parse_diagram"]

End = tuple[int, int]  # (crossing index, position 0..3)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    loops: int = 0
    name: str = ""
    oriented: bool = True
    braid: BraidWord | None = field(default=None, compare=False)
    # derived, filled in __post_init__
    signs: tuple[int, ...] = field(default=(), init=False, compare=False)
    components: tuple[tuple[int, ...], ...] = field(default=(), init=False, compare=False)
    arc_tail: dict = field(default_factory=dict, init=False, compare=False, repr=False)
    arc_comp: dict = field(default_factory=dict, init=False, compare=False, repr=False)

    def __post_init__(self):
        crossings = tuple(tuple(int(a) for a in x) for x in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        if self.loops < 0:
            raise DiagramValidationError("negative loop count")
        signs, comps, tails = _orient(crossings)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "arc_tail", tails)
        object.__setattr__(self, "arc_comp",
                           {a: k for k, comp in enumerate(comps) for a in comp})

    # basic data -----------------------------------------------------------
    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.loops

    def arcs(self) -> list[int]:
        return sorted({a for x in self.crossings for a in x})

    def arc_ends(self) -> dict[int, list[End]]:
        ends: dict[int, list[End]] = {}
        for i, x in enumerate(self.crossings):
            for p, a in enumerate(x):
                ends.setdefault(a, []).append((i, p))
        return ends

    def crossing_components(self, i: int) -> tuple[int, int]:
        """(component of the under-strand, component of the over-strand)."""
        a, b, _, _ = self.crossings[i]
        return self.arc_comp[a], self.arc_comp[b]

    def self_writhe(self) -> list[int]:
        """Per component: signed count of crossings with both strands on it."""
        out = [0] * self.component_count
        for i, sg in enumerate(self.signs):
            u, o = self.crossing_components(i)
            if u == o:
                out[u] += sg
        return out

    def unoriented(self) -> "LinkDiagram":
        return replace(self, oriented=False)

    def with_name(self, name: str) -> "LinkDiagram":
        return replace(self, name=name)

    def split_parts(self) -> list[tuple[list[int], list[int]]]:
        """Connected pieces of the diagram as (crossing indices, component indices).

        Each free loop is its own part.  Parts are ordered by smallest component.
        """
        parent = list(range(len(self.components)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(len(self.crossings)):
            u, o = self.crossing_components(i)
            parent[find(u)] = find(o)
        groups: dict[int, list[int]] = {}
        for k in range(len(self.components)):
            groups.setdefault(find(k), []).append(k)
        parts = []
        for comps in groups.values():
            cs = set(comps)
            xs = [i for i in range(len(self.crossings)) if self.crossing_components(i)[0] in cs]
            parts.append((xs, sorted(comps)))
        for j in range(self.loops):
            parts.append(([], [len(self.components) + j]))
        parts.sort(key=lambda p: p[1][0])
        return parts

    def sub_diagram(self, crossing_ids: Sequence[int], loops: int = 0) -> "LinkDiagram":
        return LinkDiagram(tuple(self.crossings[i] for i in crossing_ids), loops)

    # text / json ----------------------------------------------------------
    def pd_string(self) -> str:
        parts = ["X({},{},{},{})".format(*x) for x in self.crossings]
        parts += ["O"] * self.loops
        return " ".join(parts)

    def __str__(self):
        return self.pd_string()

    def to_json(self) -> dict:
        return {"pd": [list(x) for x in self.crossings], "loops": self.loops,
                "name": self.name}

    @classmethod
    def from_json(cls, data: dict | str) -> "LinkDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(x) for x in data["pd"]), int(data.get("loops", 0)),
                   data.get("name", ""))


def _orient(crossings):
    """Signs, components (arc lists in travel order) and arc tails.

    Components that pass under somewhere are oriented by the a -> c rule;
    over-only components travel from their smallest arc toward its
    smaller-labelled neighbour.
    """
    ends: dict[int, list[End]] = {}
    for i, x in enumerate(crossings):
        for p, a in enumerate(x):
            ends.setdefault(a, []).append((i, p))
    for a, e in ends.items():
        if len(e) != 2:
            raise DiagramValidationError(f"arc {a} appears {len(e)} times (expected 2)")

    def other_end(arc, end):
        e0, e1 = ends[arc]
        return e1 if e0 == end else e0

    def walk(arc, head):
        """Travel starting along ``arc`` into crossing end ``head``; return ends entered."""
        entered = []
        cur_arc, cur_head = arc, head
        while True:
            entered.append((cur_arc, cur_head))
            i, p = cur_head
            out_pos = (p + 2) % 4
            nxt = crossings[i][out_pos]
            tail = (i, out_pos)
            cur_head = other_end(nxt, tail)
            cur_arc = nxt
            if cur_arc == arc and cur_head == head:
                return entered

    signs = [0] * len(crossings)
    seen: set[int] = set()
    comps = []
    tails = {}
    for start in sorted(ends):
        if start in seen:
            continue
        # Try both directions; pick one consistent with under-strands.
        e0, e1 = ends[start]
        cand = []
        for head in (e0, e1):
            entered = walk(start, head)
            if all(h[1] != 2 for _, h in entered):
                cand.append(entered)
        if not cand:
            raise DiagramValidationError(
                f"inconsistent orientation on the component through arc {start}")
        touches_under = any(h[1] == 0 for _, h in cand[0])
        if len(cand) == 2 and touches_under:
            raise DiagramValidationError(
                f"inconsistent orientation on the component through arc {start}")
        if len(cand) == 2:
            # over-only component: head toward the smaller neighbouring label
            def second(entered):
                return entered[1][0] if len(entered) > 1 else entered[0][0]
            entered = min(cand, key=second)
        else:
            entered = cand[0]
        arcs_in_order = []
        for arc, head in entered:
            if arc not in seen:
                arcs_in_order.append(arc)
                seen.add(arc)
            i, p = head
            if p in (1, 3):
                signs[i] = 1 if p == 3 else -1
        for arc, head in entered:
            i, p = head
            tails[crossings[i][(p + 2) % 4]] = (i, (p + 2) % 4)
        comps.append(tuple(arcs_in_order))
    return tuple(signs), tuple(comps), tails


# ---------------------------------------------------------------------------
# parsing

_X = re.compile(r"X\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_pd(text: str, name: str = "") -> LinkDiagram:
    crossings = []
    loops = 0
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace() or text[pos] == ",":
            pos += 1
            continue
        m = _X.match(text, pos)
        if m:
            crossings.append(tuple(int(g) for g in m.groups()))
            pos = m.end()
            continue
        if text[pos] == "O" and (pos + 1 == n or not text[pos + 1].isalnum()):
            loops += 1
            pos += 1
            continue
        raise DiagramParseError(f"unexpected input {text[pos:pos + 12]!r}", pos)
    return LinkDiagram(tuple(crossings), loops, name)


def parse_diagram(text: str) -> LinkDiagram:
    """Accept braid text (``braid ...``), PD text or a JSON mirror of either."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise DiagramParseError(f"bad JSON: {exc.msg}", exc.pos) from exc
        if "letters" in data:
            return braid_closure(BraidWord.from_json(data))
        return LinkDiagram.from_json(data)
    if stripped.startswith("braid"):
        return braid_closure(parse_braid(stripped))
    return parse_pd(stripped)


# ---------------------------------------------------------------------------
# braid closure

def braid_closure(b: BraidWord, name: str = "") -> LinkDiagram:
    """Trace closure with strands running upward; s_i puts strand i over strand i+1."""
    n = b.strands
    next_seg = n
    cur = list(range(n))
    raw = []
    for i, sign in b.letters:
        p, q = cur[i - 1], cur[i]
        p2, q2 = next_seg, next_seg + 1
        next_seg += 2
        if sign > 0:
            raw.append((q, q2, p2, p))
        else:
            raw.append((p, q, q2, p2))
        cur[i - 1], cur[i] = p2, q2
    # closing identifies the top segment at each position with the bottom one
    parent = list(range(next_seg))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pos in range(n):
        parent[find(cur[pos])] = find(pos)
    used = {find(s) for x in raw for s in x}
    loops = 0
    seen_roots = set()
    for pos in range(n):
        r = find(pos)
        if r not in used and r not in seen_roots:
            seen_roots.add(r)
            loops += 1
    crossings = tuple(tuple(find(s) for s in x) for x in raw)
    d = LinkDiagram(crossings, 0)
    # relabel arcs 1..m following components in order of their lowest strand
    order = []
    for pos in range(n):
        r = find(pos)
        if r in used and r in d.arc_comp:
            comp = d.components[d.arc_comp[r]]
            if comp not in order:
                order.append(comp)
    label = {}
    for comp in order:
        k = comp.index(min(comp, key=lambda a: (a not in range(n), a)))
        for a in comp[k:] + comp[:k]:
            label[a] = len(label) + 1
    relabelled = tuple(tuple(label[s] for s in x) for x in crossings)
    return LinkDiagram(relabelled, loops, name or str(b), braid=b)
