"""Framed links presenting closed 3-manifolds.

A surgery file is diagram text (PD or braid) followed by a line
``framings: [f1, ..., fk]``; ``#`` starts a comment.  Framings are absolute
integers, one per component, in the diagram's component order: crossing
components sorted by their smallest arc label, then free loops ``O``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DiagramParseError, DiagramValidationError
from .ops import disjoint_union as _union_diagrams
from .ops import linking_numbers, mirror as _mirror_diagram, signature
from .pd import LinkDiagram, parse_diagram

__all__ = ["SurgeryPresentation", "parse_surgery", "linking_matrix", "stabilize"]

_FRAMINGS = re.compile(r"^\s*framings\s*:\s*\[(.*)\]\s*$")


@dataclass(frozen=True)
class SurgeryPresentation:
    diagram: LinkDiagram
    framings: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        fr = tuple(int(f) for f in self.framings)
        object.__setattr__(self, "framings", fr)
        if len(fr) != self.diagram.component_count:
            raise DiagramValidationError(
                f"{self.diagram.component_count} components but {len(fr)} framings")

    @property
    def component_count(self) -> int:
        return len(self.framings)

    def linking_matrix(self) -> list[list[int]]:
        lk = linking_numbers(self.diagram)
        out = []
        for i, row in enumerate(lk):
            r = []
            for j, v in enumerate(row):
                if i == j:
                    r.append(self.framings[i])
                    continue
                if Fraction(v).denominator != 1:
                    raise DiagramValidationError(f"linking number {v} of components {i},{j} is not an integer")
                r.append(int(v))
            out.append(r)
        return out

    def signature(self) -> int:
        return signature(self.linking_matrix())

    def stabilize(self, sign: int) -> "SurgeryPresentation":
        """Add a split unknot with framing ``sign`` (+1 or -1)."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        d = self.diagram
        grown = LinkDiagram(d.crossings, d.loops + 1, d.name, d.oriented)
        return SurgeryPresentation(grown, self.framings + (sign,), self.name)

    def mirror(self) -> "SurgeryPresentation":
        """The orientation-reversed manifold: mirror diagram, negated framings."""
        name = self.name and f"mirror({self.name})"
        return SurgeryPresentation(_mirror_diagram(self.diagram), tuple(-f for f in self.framings), name)

    def disjoint_union(self, other: "SurgeryPresentation") -> "SurgeryPresentation":
        """Presentation of the connected sum."""
        d1, d2 = self.diagram, other.diagram
        d = _union_diagrams(d1, d2)
        arcs1 = d1.arcs()
        shift = max(arcs1) if arcs1 else 0
        origin = {frozenset(c): f for c, f in zip(d1.components, self.framings)}
        origin.update({frozenset(a + shift for a in c): f
                       for c, f in zip(d2.components, other.framings)})
        fr = [origin[frozenset(c)] for c in d.components]
        fr += list(self.framings[len(d1.components):]) + list(other.framings[len(d2.components):])
        return SurgeryPresentation(d, tuple(fr))

    def to_text(self) -> str:
        body = self.diagram.pd_string()
        head = f"# {self.name}\n" if self.name else ""
        return f"{head}{body}\nframings: [{', '.join(str(f) for f in self.framings)}]\n"

    def to_json(self) -> dict:
        return {"diagram": self.diagram.to_json(), "framings": list(self.framings), "name": self.name}

    @classmethod
    def from_json(cls, data: dict | str) -> "SurgeryPresentation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(LinkDiagram.from_json(data["diagram"]), tuple(data["framings"]), data.get("name", ""))

    def __str__(self):
        return self.to_text()


def parse_surgery(text: str, name: str = "") -> SurgeryPresentation:
    """Parse diagram text plus a ``framings: [...]`` line."""
    body = []
    framings = None
    offset = 0
    for line in text.splitlines(keepends=True):
        content = line.split("#", 1)[0]
        m = _FRAMINGS.match(content)
        if m:
            if framings is not None:
                raise DiagramParseError("framings given twice", offset)
            inner = m.group(1).strip()
            try:
                framings = tuple(int(t) for t in inner.split(",")) if inner else ()
            except ValueError:
                raise DiagramParseError(f"framings must be integers: [{inner}]", offset) from None
        elif content.strip().lower().startswith("framings"):
            raise DiagramParseError("expected 'framings: [f1, ..., fk]'", offset)
        else:
            body.append(content)
        offset += len(line)
    if framings is None:
        raise DiagramParseError("missing 'framings: [...]' line")
    text_body = " ".join(s.strip() for s in body if s.strip())
    d = parse_diagram(text_body) if text_body else LinkDiagram((), 0)
    return SurgeryPresentation(d, framings, name)


def linking_matrix(s: SurgeryPresentation) -> list[list[int]]:
    return s.linking_matrix()


def stabilize(s: SurgeryPresentation, sign: int) -> SurgeryPresentation:
    return s.stabilize(sign)
