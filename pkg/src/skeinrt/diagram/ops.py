"""Combinatorial invariants and local moves on link diagrams."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DiagramValidationError
from .pd import LinkDiagram

__all__ = [
    "writhe",
    "mirror",
    "add_kink",
    "remove_kink",
    "linking_numbers",
    "signature",
    "disjoint_union",
]


def writhe(d: LinkDiagram) -> int:
    if not d.oriented:
        raise DiagramValidationError("writhe needs an oriented diagram")
    return sum(d.signs)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing, keeping arc labels and orientation.

    A component that was over at every crossing is re-oriented by the label
    rule afterwards, so mirroring twice can reverse it.
    """
    out = []
    for (a, b, c, e), sg in zip(d.crossings, d.signs):
        # the old over-strand becomes the under-strand, entering at its tail
        out.append((e, a, b, c) if sg > 0 else (b, c, e, a))
    braid = d.braid.mirror() if d.braid is not None else None
    return LinkDiagram(tuple(out), d.loops, d.name and f"mirror({d.name})",
                       d.oriented, braid)


def add_kink(d: LinkDiagram, component: int, sign: int) -> LinkDiagram:
    """Insert one Reidemeister-I curl of the given sign on ``component``.

    On a crossing component the curl goes on its first arc; the arc keeps its
    label up to the curl and a fresh arc carries on afterwards.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ncomp = d.component_count
    if not 0 <= component < ncomp:
        raise DiagramValidationError(f"unknown component {component}")
    arcs = d.arcs()
    top = max(arcs) if arcs else 0
    if component >= len(d.components):
        e, m = top + 1, top + 2
        x = (e, e, m, m) if sign > 0 else (e, m, m, e)
        return LinkDiagram(d.crossings + (x,), d.loops - 1, d.name, d.oriented)
    e = d.components[component][0]
    m, f = top + 1, top + 2
    head = next(end for end in d.arc_ends()[e] if end != d.arc_tail[e])
    crossings = [list(x) for x in d.crossings]
    crossings[head[0]][head[1]] = f
    kink = (e, f, m, m) if sign > 0 else (e, m, m, f)
    crossings.append(kink)
    return LinkDiagram(tuple(tuple(x) for x in crossings), d.loops, d.name, d.oriented)


def remove_kink(d: LinkDiagram, index: int) -> LinkDiagram:
    """Undo a Reidemeister-I curl at crossing ``index``."""
    x = d.crossings[index]
    loop_pos = None
    for p in range(4):
        if x[p] == x[(p + 1) % 4]:
            loop_pos = p
            break
    if loop_pos is None:
        raise DiagramValidationError(f"crossing {index} is not a curl")
    others = [x[(loop_pos + 2) % 4], x[(loop_pos + 3) % 4]]
    tail_end = d.arc_tail
    # the incoming arc ends at this crossing; the outgoing arc starts here
    e_out = next(a for a in others if tail_end[a][0] == index and x[tail_end[a][1]] == a
                 and tail_end[a][1] in ((loop_pos + 2) % 4, (loop_pos + 3) % 4))
    e_in = others[0] if others[1] == e_out else others[1]
    rest = [list(c) for i, c in enumerate(d.crossings) if i != index]
    if e_in == e_out:
        return LinkDiagram(tuple(tuple(c) for c in rest), d.loops + 1, d.name, d.oriented)
    for c in rest:
        for p in range(4):
            if c[p] == e_out:
                c[p] = e_in
    return LinkDiagram(tuple(tuple(c) for c in rest), d.loops, d.name, d.oriented)


def linking_numbers(d: LinkDiagram) -> list[list[Fraction]]:
    """Pairwise linking numbers (half the signed count of mixed crossings)."""
    n = d.component_count
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, sg in enumerate(d.signs):
        u, o = d.crossing_components(i)
        if u != o:
            m[u][o] += Fraction(sg, 2)
            m[o][u] += Fraction(sg, 2)
    return m


def signature(m: Sequence[Sequence]) -> int:
    """Signature of a symmetric rational matrix by symmetric Gaussian elimination."""
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    for i in range(n):
        if len(a[i]) != n:
            raise ValueError("matrix must be square")
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # congruence: row/col i += row/col j makes the (i,i) entry 2*a[i][j] + a[j][j]
            if a[j][j] + 2 * a[i][j] == 0:
                for k in range(n):
                    a[i][k] -= a[j][k]
                for k in range(n):
                    a[k][i] -= a[k][j]
            else:
                for k in range(n):
                    a[i][k] += a[j][k]
                for k in range(n):
                    a[k][i] += a[k][j]
            continue
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / p
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
        for i in active:
            a[i][piv] = a[piv][i] = Fraction(0)
    return pos - neg


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Place ``d2`` beside ``d1``; arcs of ``d2`` are shifted past those of ``d1``."""
    arcs = d1.arcs()
    shift = max(arcs) if arcs else 0
    moved = tuple(tuple(a + shift for a in x) for x in d2.crossings)
    return LinkDiagram(d1.crossings + moved, d1.loops + d2.loops)
