"""Bracket by state sum and by the tangle functor; Jones from the bracket."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from ..coeff import Laurent
from ..diagram.errors import DiagramValidationError
from ..diagram.pd import LinkDiagram
from ..diagram.tangle import to_tangle_word

__all__ = ["KERNEL", "state_histogram", "bracket_statesum", "bracket_functor", "jones",
           "loop_value"]

if os.environ.get("SKEINRT_PURE"):
    from ._statesum_py import state_histogram
    KERNEL = "python"
else:
    try:
        from ._statesum import state_histogram
        KERNEL = "cython"
    except ImportError:  # extension not built
        from ._statesum_py import state_histogram
        KERNEL = "python"

# below this many states a worker pool costs more than it saves
_PARALLEL_MIN_STATES = 1 << 16
MAX_CROSSINGS = 40


def loop_value() -> Laurent:
    """d = -A^2 - A^-2, the value of a single unknotted circle."""
    return Laurent({2: -1, -2: -1}, "A")


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("SKEINRT_THREADS", "1")))
    except ValueError:
        return 1


def _flat(d: LinkDiagram) -> tuple[list[int], int]:
    relabel = {a: i for i, a in enumerate(d.arcs())}
    return [relabel[a] for x in d.crossings for a in x], len(relabel)


def _histogram(d: LinkDiagram, threads: int) -> dict[tuple[int, int], int]:
    xs, narcs = _flat(d)
    total = 1 << d.crossing_count
    if threads <= 1 or total < _PARALLEL_MIN_STATES:
        return state_histogram(xs, narcs, 0, total)
    # equal contiguous ranges; integer counts make the merge order irrelevant
    bounds = [total * k // threads for k in range(threads + 1)]
    hist: dict[tuple[int, int], int] = {}
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(state_histogram, xs, narcs, bounds[k], bounds[k + 1])
                   for k in range(threads)]
        for fut in futures:
            for key, n in fut.result().items():
                hist[key] = hist.get(key, 0) + n
    return hist


def bracket_statesum(d: LinkDiagram, threads: int | None = None) -> Laurent:
    """Sum over all smoothings of A^(#A - #B) d^(#loops); orientation is ignored."""
    if d.crossing_count > MAX_CROSSINGS:
        raise DiagramValidationError(
            f"{d.crossing_count} crossings exceeds the state-sum limit of {MAX_CROSSINGS}")
    threads = default_threads() if threads is None else threads
    dl = loop_value()
    powers = [Laurent({0: 1}, "A")]
    total = Laurent({}, "A")
    for (ab, loops), count in sorted(_histogram(d, threads).items()):
        while len(powers) <= loops:
            powers.append(powers[-1] * dl)
        total = total + Laurent.monomial(ab, count, "A") * powers[loops]
    return total * dl ** d.loops


def bracket_functor(d: LinkDiagram) -> Laurent:
    """Bracket through the Kauffman tangle functor on a sliced diagram."""
    from ..functor.kauffman import eval_word

    m = eval_word(to_tangle_word(d))
    value = m.scalar()
    return value if isinstance(value, Laurent) else Laurent({0: value} if value else {}, "A")


def jones(d: LinkDiagram, divided: bool = False, bracket: Laurent | None = None) -> Laurent:
    """V(t) = ((-A)^(-3w) <L>) at A = t^(-1/4), as a polynomial in t^(1/4).

    With ``divided`` the result is further divided by -t^(1/2) - t^(-1/2),
    the normalisation in which the unknot has value 1.
    """
    if not d.oriented:
        raise DiagramValidationError("the Jones polynomial needs an oriented diagram")
    br = bracket_statesum(d) if bracket is None else bracket
    w = sum(d.signs)
    f = br * Laurent.monomial(-3 * w, -1 if w % 2 else 1, "A")
    v = f.scale_exponents(-1, "t")
    if divided:
        v = v.exact_div(Laurent({2: -1, -2: -1}, "t"))
    return v
