"""Morse-sliced tangle words, their text DSL, and slicing of planar diagrams.

A word is read bottom to top.  Each slice lists generators left to right and
covers the full width of the level below it.  ``levels`` optionally records,
for every level, one ``Strand(comp, up)`` per strand; it is how orientation
and component identity reach the labeled functor.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DiagramParseError, DiagramValidationError
from .pd import LinkDiagram

__all__ = [
    "Gen",
    "Strand",
    "TangleWord",
    "parse_tangle",
    "to_tangle_word",
    "infer_levels",
    "OVER",
    "UNDER",
    "CUP",
    "CAP",
    "ID",
]

_ARITY = {"over": (2, 2), "under": (2, 2), "cup": (0, 2), "cap": (2, 0), "id": (1, 1)}


@dataclass(frozen=True)
class Gen:
    kind: str
    label: str = ""
    dom: int = -1
    cod: int = -1

    def __post_init__(self):
        if self.kind == "coupon":
            if not self.label:
                raise ValueError("a coupon needs a name")
            d = 1 if self.dom < 0 else self.dom
            c = d if self.cod < 0 else self.cod
            object.__setattr__(self, "dom", d)
            object.__setattr__(self, "cod", c)
        elif self.kind in _ARITY:
            d, c = _ARITY[self.kind]
            if self.dom not in (-1, d) or self.cod not in (-1, c) or self.label:
                raise ValueError(f"bad arity or label for {self.kind}")
            object.__setattr__(self, "dom", d)
            object.__setattr__(self, "cod", c)
        else:
            raise ValueError(f"unknown generator {self.kind!r}")

    def __str__(self):
        if self.kind != "coupon":
            return self.kind
        if self.dom == 1 and self.cod == 1:
            return f"coupon({self.label})"
        return f"coupon({self.label},{self.dom},{self.cod})"


OVER, UNDER, CUP, CAP, ID = (Gen(k) for k in ("over", "under", "cup", "cap", "id"))


class Strand(NamedTuple):
    comp: int
    up: bool


@dataclass(frozen=True)
class TangleWord:
    slices: tuple[tuple[Gen, ...], ...] = ()
    levels: tuple[tuple[Strand, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        slices = tuple(tuple(s) for s in self.slices)
        object.__setattr__(self, "slices", slices)
        self.validate()
        if self.levels is not None:
            levels = tuple(tuple(Strand(int(c), bool(u)) for c, u in lv) for lv in self.levels)
            if len(levels) != len(slices) + 1:
                raise DiagramValidationError("levels must have one entry per slice boundary")
            for k, lv in enumerate(levels):
                if len(lv) != self.width(k):
                    raise DiagramValidationError(f"level {k} annotation has wrong width")
            object.__setattr__(self, "levels", levels)

    def validate(self) -> None:
        for k in range(1, len(self.slices)):
            below = sum(g.cod for g in self.slices[k - 1])
            here = sum(g.dom for g in self.slices[k])
            if below != here:
                raise DiagramValidationError(
                    f"slice {k} expects {here} strands but slice {k - 1} provides {below}")

    @property
    def dom(self) -> int:
        return sum(g.dom for g in self.slices[0]) if self.slices else 0

    @property
    def cod(self) -> int:
        return sum(g.cod for g in self.slices[-1]) if self.slices else 0

    @property
    def closed(self) -> bool:
        return self.dom == 0 and self.cod == 0

    def width(self, level: int) -> int:
        """Number of strands at boundary ``level`` (0 = bottom)."""
        if not self.slices:
            return 0
        if level == 0:
            return self.dom
        return sum(g.cod for g in self.slices[level - 1])

    def max_width(self) -> int:
        return max((self.width(k) for k in range(len(self.slices) + 1)), default=0)

    def count(self, kind: str) -> int:
        return sum(1 for s in self.slices for g in s if g.kind == kind)

    def ops(self) -> list[tuple[int, int, int, Gen]]:
        """Non-identity generators as (slice, bottom offset, top offset, gen).

        Offsets count strands to the left of the generator below and above it.
        """
        out = []
        for k, s in enumerate(self.slices):
            lo = hi = 0
            for g in s:
                if g.kind != "id":
                    out.append((k, lo, hi, g))
                lo += g.dom
                hi += g.cod
        return out

    def to_text(self) -> str:
        return "\n".join(", ".join(str(g) for g in s) for s in self.slices)

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        data = {"slices": [[_gen_json(g) for g in s] for s in self.slices]}
        if self.levels is not None:
            data["levels"] = [[[st.comp, st.up] for st in lv] for lv in self.levels]
        return data

    @classmethod
    def from_json(cls, data: dict | str) -> "TangleWord":
        if isinstance(data, str):
            data = json.loads(data)
        slices = tuple(tuple(_gen_from_json(g) for g in s) for s in data["slices"])
        levels = data.get("levels")
        if levels is not None:
            levels = tuple(tuple(Strand(c, u) for c, u in lv) for lv in levels)
        return cls(slices, levels)


def _gen_json(g: Gen):
    if g.kind != "coupon":
        return g.kind
    return {"coupon": g.label, "dom": g.dom, "cod": g.cod}


def _gen_from_json(g) -> Gen:
    if isinstance(g, str):
        return Gen(g)
    return Gen("coupon", g["coupon"], int(g.get("dom", 1)), int(g.get("cod", g.get("dom", 1))))


# ---------------------------------------------------------------------------
# DSL

_GEN = re.compile(r"\s*(over|under|cup|cap|id|coupon\(\s*([A-Za-z_]\w*)\s*(?:,\s*(\d+)\s*,\s*(\d+)\s*)?\))\s*")


def parse_tangle(text: str) -> TangleWord:
    """One slice per line, generators separated by commas; '#' starts a comment."""
    slices = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        if body.strip():
            gens = []
            pos = 0
            while True:
                m = _GEN.match(body, pos)
                if not m:
                    raise DiagramParseError(f"expected a generator, got {body[pos:].strip()[:12]!r}",
                                            offset + pos)
                if m.group(2):
                    dom = int(m.group(3)) if m.group(3) else 1
                    cod = int(m.group(4)) if m.group(4) else dom
                    gens.append(Gen("coupon", m.group(2), dom, cod))
                else:
                    gens.append(Gen(m.group(1)))
                pos = m.end()
                if pos >= len(body.rstrip("\r\n")) or not body[pos:].strip():
                    break
                if body[pos] != ",":
                    raise DiagramParseError("expected ','", offset + pos)
                pos += 1
            slices.append(tuple(gens))
        offset += len(line)
    return TangleWord(tuple(slices))


# ---------------------------------------------------------------------------
# orientation inference for bare words

def infer_levels(w: TangleWord, fixed: dict[tuple[int, int], bool] | None = None) -> tuple:
    """Components and a consistent orientation for every strand of ``w``.

    ``fixed`` pins the direction of particular strands, keyed by
    (level, position); everything else connected to them follows.  Unpinned
    components point up at their first strand in (level, position) order.
    Coupons cut components; their legs must be pinned or get the default.
    """
    nodes = [(k, i) for k in range(len(w.slices) + 1) for i in range(w.width(k))]
    index = {n: j for j, n in enumerate(nodes)}
    adj: list[list[tuple[int, bool]]] = [[] for _ in nodes]

    def link(a, b, same):
        ia, ib = index[a], index[b]
        adj[ia].append((ib, same))
        adj[ib].append((ia, same))

    for k, s in enumerate(w.slices):
        lo = hi = 0
        for g in s:
            if g.kind == "id":
                link((k, lo), (k + 1, hi), True)
            elif g.kind in ("over", "under"):
                link((k, lo), (k + 1, hi + 1), True)
                link((k, lo + 1), (k + 1, hi), True)
            elif g.kind == "cup":
                link((k + 1, hi), (k + 1, hi + 1), False)
            elif g.kind == "cap":
                link((k, lo), (k, lo + 1), False)
            lo += g.dom
            hi += g.cod
    comp = [-1] * len(nodes)
    up = [True] * len(nodes)
    fixed = fixed or {}
    ncomp = 0
    for start in range(len(nodes)):
        if comp[start] >= 0:
            continue
        # collect the class, then orient it from a pinned node if there is one
        members = [start]
        comp[start] = ncomp
        j = 0
        while j < len(members):
            for nb, _ in adj[members[j]]:
                if comp[nb] < 0:
                    comp[nb] = ncomp
                    members.append(nb)
            j += 1
        root = next((m for m in members if nodes[m] in fixed), start)
        up[root] = fixed.get(nodes[root], True)
        done = {root}
        stack = [root]
        while stack:
            a = stack.pop()
            for nb, same in adj[a]:
                want = up[a] if same else not up[a]
                if nb in done:
                    if up[nb] != want:
                        raise DiagramValidationError("inconsistent strand orientation")
                    continue
                if nodes[nb] in fixed and fixed[nodes[nb]] != want:
                    raise DiagramValidationError(
                        f"orientation at level {nodes[nb][0]} strand {nodes[nb][1]} conflicts")
                up[nb] = want
                done.add(nb)
                stack.append(nb)
        ncomp += 1
    levels = []
    for k in range(len(w.slices) + 1):
        levels.append(tuple(Strand(comp[index[(k, i)]], up[index[(k, i)]])
                            for i in range(w.width(k))))
    return tuple(levels)


# ---------------------------------------------------------------------------
# slicing a planar diagram

def to_tangle_word(d: LinkDiagram) -> TangleWord:
    """Closed tangle word for ``d`` via a greedy sweep.

    The front is the list of arcs crossing the current level.  At each step
    the crossing sharing the longest contiguous counterclockwise block with the
    front is placed on top of it (ties: smallest shared arc, then crossing
    index); arcs whose two ends are both below the front are capped off.
    Free loops are appended as cup/cap pairs.
    """
    xs = d.crossings
    tails = d.arc_tail
    comp_of = d.arc_comp
    slices: list[tuple[Gen, ...]] = []
    levels: list[tuple[Strand, ...]] = [()]
    front: list[tuple[int, bool]] = []  # (arc, up)
    remaining = set(range(len(xs)))

    def emit(gens, new_front):
        nonlocal front
        slices.append(tuple(gens))
        front = new_front
        levels.append(tuple(Strand(comp_of[a], u) for a, u in front))

    def place(gen_at: int, gen: Gen, width_before: int):
        gens = [ID] * gen_at + [gen] + [ID] * (width_before - gen_at - gen.dom)
        return gens

    def cap_duplicates():
        changed = True
        while changed:
            changed = False
            for j in range(len(front) - 1):
                if front[j][0] == front[j + 1][0]:
                    new = front[:j] + front[j + 2:]
                    emit(place(j, CAP, len(front)), new)
                    changed = True
                    break

    def candidates():
        best = None
        pos_of: dict[int, list[int]] = {}
        for j, (a, _) in enumerate(front):
            pos_of.setdefault(a, []).append(j)
        for c in sorted(remaining):
            x = xs[c]
            for p in range(4):
                for j in pos_of.get(x[p], ()):
                    k = 1
                    while (k < 4 and j + k < len(front)
                           and front[j + k][0] == x[(p + k) % 4]):
                        k += 1
                    shared = min(x[(p + t) % 4] for t in range(k))
                    key = (-k, shared, c, j, p)
                    if best is None or key < best:
                        best = key
        return best

    def up_of(a, c, p):
        return tails[a] == (c, p)

    while remaining:
        cand = candidates()
        if cand is None:
            if front:
                raise DiagramValidationError("diagram could not be sliced (is it planar?)")
            c = min(remaining)
            x = xs[c]
            i = next(i for i in range(4) if x[i] != x[(i + 1) % 4])
            emit([CUP], [(x[i], up_of(x[i], c, i)), (x[i], not up_of(x[i], c, i))])
            a1 = x[(i + 1) % 4]
            emit([ID, ID, CUP], front + [(a1, not up_of(a1, c, (i + 1) % 4)),
                                         (a1, up_of(a1, c, (i + 1) % 4))])
            # now front = [x_i, x_i, x_{i+1}, x_{i+1}]; the crossing sits on the middle pair
            j, p = 1, i
            k = 2
        else:
            negk, _, c, j, p = cand
            k = -negk
            x = xs[c]
            if k == 1:
                a1 = x[(p + 1) % 4]
                w = len(front)
                emit(place(j + 1, CUP, w),
                     front[:j + 1] + [(a1, not up_of(a1, c, (p + 1) % 4)),
                                      (a1, up_of(a1, c, (p + 1) % 4))] + front[j + 1:])
        x = xs[c]
        gen = OVER if p % 2 == 1 else UNDER
        nw, ne = (p + 3) % 4, (p + 2) % 4
        top = [(x[nw], up_of(x[nw], c, nw)), (x[ne], up_of(x[ne], c, ne))]
        emit(place(j, gen, len(front)), front[:j] + top + front[j + 2:])
        remaining.discard(c)
        cap_duplicates()
    if front:
        raise DiagramValidationError("diagram could not be sliced (is it planar?)")
    for j in range(d.loops):
        comp = len(d.components) + j
        slices += [(CUP,), (CAP,)]
        levels += [(Strand(comp, True), Strand(comp, False)), ()]
    if not slices:
        return TangleWord((), None)
    return TangleWord(tuple(slices), tuple(levels))
