"""Compare the compiled and pure-Python state-sum kernels.

    python3 benchmarks/bench_statesum.py [--min 8] [--max 18] [--repeat 3]

Each row times one full state histogram of the closure of (s1 s2^-1)^k on
three strands.  The pure-Python column is skipped above --python-max.
"""

import argparse
import timeit

from skeinrt.diagram import BraidWord, braid_closure
from skeinrt.skein import KERNEL
from skeinrt.skein import _statesum_py

try:
    from skeinrt.skein import _statesum as _compiled
except ImportError:  # no compiled extension in this install
    _compiled = None


def flat(d):
    relabel = {a: i for i, a in enumerate(d.arcs())}
    return [relabel[a] for x in d.crossings for a in x], len(relabel)


def time_kernel(kernel, xs, narcs, total, repeat):
    return min(timeit.repeat(lambda: kernel.state_histogram(xs, narcs, 0, total),
                             number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=8, help="smallest crossing count (even)")
    ap.add_argument("--max", type=int, default=18, help="largest crossing count (even)")
    ap.add_argument("--python-max", type=int, default=16, help="skip pure Python above this")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"selected kernel: {KERNEL}")
    if _compiled is None:
        print("compiled kernel unavailable; only pure-Python timings are shown")
    print(f"{'crossings':>9} {'states':>9} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for c in range(args.min, args.max + 1, 2):
        d = braid_closure(BraidWord(3, ((1, 1), (2, -1)) * (c // 2)))
        xs, narcs = flat(d)
        total = 1 << c
        tc = time_kernel(_compiled, xs, narcs, total, args.repeat) if _compiled else None
        tp = time_kernel(_statesum_py, xs, narcs, total, args.repeat) if c <= args.python_max else None
        if tc is not None and tp is not None:
            assert _compiled.state_histogram(xs, narcs, 0, total) == \
                _statesum_py.state_histogram(xs, narcs, 0, total)
        cells = [f"{c:>9}", f"{total:>9}",
                 f"{tc:>11.4f}" if tc is not None else f"{'-':>11}",
                 f"{tp:>10.4f}" if tp is not None else f"{'-':>10}",
                 f"{tp / tc:>7.0f}x" if tc and tp else f"{'-':>8}"]
        print(" ".join(cells), flush=True)


if __name__ == "__main__":
    main()
