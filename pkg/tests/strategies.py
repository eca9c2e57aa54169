"""Random braids and diagrams shared by the test modules."""

import random

from hypothesis import strategies as st

from skeinrt.diagram import BraidWord, LinkDiagram, add_kink, braid_closure, mirror


def random_braid(rng: random.Random, max_strands: int = 5, max_len: int = 10) -> BraidWord:
    n = rng.randint(2, max_strands)
    letters = tuple((rng.randint(1, n - 1), rng.choice((1, -1)))
                    for _ in range(rng.randint(0, max_len)))
    return BraidWord(n, letters)


def relabel(d: LinkDiagram, rng: random.Random) -> LinkDiagram:
    arcs = d.arcs()
    new = rng.sample(range(1, 3 * len(arcs) + 2), len(arcs)) if arcs else []
    m = dict(zip(arcs, new))
    xs = [tuple(m[a] for a in x) for x in d.crossings]
    rng.shuffle(xs)
    return LinkDiagram(tuple(xs), d.loops)


def random_diagram(rng: random.Random, max_crossings: int = 8) -> LinkDiagram:
    """Braid closure, optionally kinked, mirrored and relabelled."""
    while True:
        d = braid_closure(random_braid(rng, 4, max_crossings))
        if rng.random() < 0.3 and d.component_count:
            d = add_kink(d, rng.randrange(d.component_count), rng.choice((1, -1)))
        if d.crossing_count <= max_crossings:
            break
    if rng.random() < 0.5:
        d = mirror(d)
    return relabel(d, rng)


braids = st.builds(lambda seed: random_braid(random.Random(seed)), st.integers(0, 10 ** 9))
diagrams = st.builds(lambda seed: random_diagram(random.Random(seed)), st.integers(0, 10 ** 9))
