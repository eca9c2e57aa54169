"""Dimensions of the genus-g state spaces.

The dimension is the number of admissible labelings of a trivalent spine of
the genus-g handlebody, weighted by fusion multiplicities.  Every label here
is self-dual, so a vertex with edge labels (a, b, c) contributes N_{a,b}^c.
Explicit small graphs are counted by backtracking; the ``chain`` and
``caterpillar`` families use transfer matrices and work for any genus.
"""

from __future__ import annotations

from typing import Sequence

from ..qgroup.modular import ModularData, modular_data

__all__ = ["SPINES", "tqft_dim", "count_labelings", "verlinde_dim", "spines_for"]

# genus -> name -> (edge count, vertices as edge triples); an edge listed twice
# at one vertex is a loop
SPINES: dict[int, dict[str, tuple[int, tuple[tuple[int, int, int], ...]]]] = {
    2: {
        "theta": (3, ((0, 1, 2), (0, 1, 2))),
        "dumbbell": (3, ((0, 0, 1), (2, 2, 1))),
    },
    3: {
        "k4": (6, ((0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5))),
        "loop-theta-loop": (6, ((0, 0, 1), (1, 2, 3), (2, 3, 4), (4, 5, 5))),
        "tripod": (6, ((0, 1, 2), (0, 3, 3), (1, 4, 4), (2, 5, 5))),
        "theta-bridge-loop": (6, ((0, 1, 2), (0, 1, 3), (2, 4, 4), (3, 5, 5))),
    },
}


def _md(md_or_l) -> ModularData:
    return md_or_l if isinstance(md_or_l, ModularData) else modular_data(int(md_or_l))


def count_labelings(vertices: Sequence[tuple[int, int, int]], n_edges: int, md) -> int:
    """sum over edge labelings of the product of N over vertices."""
    md = _md(md)
    labels = md.labels
    # label edges in order, checking each vertex as soon as its edges are known
    last = {}
    for v, es in enumerate(vertices):
        last[v] = max(es)
    ready: dict[int, list[int]] = {}
    for v, e in last.items():
        ready.setdefault(e, []).append(v)
    lab = [0] * n_edges

    def rec(e: int, weight: int) -> int:
        if e == n_edges:
            return weight
        total = 0
        for a in labels:
            lab[e] = a
            w = weight
            for v in ready.get(e, ()):
                i, j, k = vertices[v]
                w *= md.N(lab[i], lab[j], lab[k])
                if not w:
                    break
            if w:
                total += rec(e + 1, w)
        return total

    return rec(0, 1)


def _matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p)] for i in range(n)]


def _lollipop(md) -> list[int]:
    """Stem label b -> number of loop labels a with N_{a,a}^b."""
    return [sum(md.N(a, a, b) for a in md.labels) for b in md.labels]


def _chain(g: int, md) -> int:
    end = _lollipop(md)
    r = range(md.rank)
    labels = md.labels
    theta = [[sum(md.N(labels[b], c, d) * md.N(c, d, labels[e]) for c in labels for d in labels)
              for e in r] for b in r]
    vec = [end]
    for _ in range(g - 2):
        vec = _matmul(vec, theta)
    return sum(x * y for x, y in zip(vec[0], end))


def _caterpillar(g: int, md) -> int:
    end = _lollipop(md)
    labels = md.labels
    r = range(md.rank)
    step = [[sum(md.N(labels[x], b, labels[y]) * end[b - 1] for b in labels) for y in r] for x in r]
    vec = [end]
    for _ in range(g - 2):
        vec = _matmul(vec, step)
    return sum(x * y for x, y in zip(vec[0], end))


def spines_for(g: int) -> list[str]:
    names = ["chain", "caterpillar"]
    return list(SPINES.get(g, {})) + names if g >= 2 else ["circle", "tadpole"]


def tqft_dim(g: int, md, spine: str | None = None) -> int:
    """dim Z(Sigma_g), counted on the named spine (default: the chain)."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    md = _md(md)
    if g == 0:
        return 1
    if g == 1:
        if spine in (None, "circle"):
            return md.rank
        if spine == "tadpole":
            return _lollipop(md)[0]
        raise ValueError(f"unknown genus-1 spine {spine!r}")
    spine = spine or "chain"
    if spine == "chain":
        return _chain(g, md)
    if spine == "caterpillar":
        return _caterpillar(g, md)
    graphs = SPINES.get(g, {})
    if spine not in graphs:
        raise ValueError(f"unknown genus-{g} spine {spine!r}; choose from {spines_for(g)}")
    n_edges, vertices = graphs[spine]
    return count_labelings(vertices, n_edges, md)


def verlinde_dim(g: int, md):
    """sum_j (qdim(omega) / [j]^2)^(g-1), an independent closed form."""
    md = _md(md)
    total = md.ctx.zero
    for q in md.qdims:
        total = total + (md.qdim_omega * (q * q).inverse()) ** (g - 1)
    return total
