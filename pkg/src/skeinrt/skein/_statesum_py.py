"""Pure-Python state-sum kernel (reference and fallback)."""

from __future__ import annotations


def state_histogram(xs: list[int], narcs: int, start: int, stop: int) -> dict[tuple[int, int], int]:
    """Histogram of (#A - #B, loops) over states ``start <= s < stop``.

    ``xs`` is the flat list of crossing tuples with arcs numbered 0..narcs-1.
    Bit i of a state set means crossing i takes its B-smoothing.
    """
    nx = len(xs) // 4
    hist: dict[tuple[int, int], int] = {}
    for state in range(start, stop):
        parent = list(range(narcs))
        loops = narcs
        nb = 0
        for i in range(nx):
            a, b, c, d = xs[4 * i], xs[4 * i + 1], xs[4 * i + 2], xs[4 * i + 3]
            if (state >> i) & 1:
                nb += 1
                pairs = ((a, d), (b, c))
            else:
                pairs = ((a, b), (c, d))
            for u, v in pairs:
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u != v:
                    parent[u] = v
                    loops -= 1
        key = (nx - 2 * nb, loops)
        hist[key] = hist.get(key, 0) + 1
    return hist
