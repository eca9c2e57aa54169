"""Acceptance run: one check per criterion, each with its time budget.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` for a
plain PASS/FAIL line per criterion.
"""

import math
import random
import sys
import time

import pytest

from skeinrt.coeff import Laurent, field, quantum_integer, sqrt_element
from skeinrt.diagram import (BraidWord, LinkDiagram, braid_closure, mirror, parse_diagram,
                             parse_pd, parse_surgery)
from skeinrt.functor import check_labeled_relations, check_relations
from skeinrt.qgroup import HOPF, QGroupContext, colored_invariant, modular_data, qdim
from skeinrt.rt import (kirby_invariance_suite, rt_invariant, s3_presentations, spines_for,
                        tqft_dim)
from skeinrt.skein import bracket_functor, bracket_statesum, jones


def A(k, c=1):
    return Laurent.monomial(k, c, "A")


def T(q, c=1):
    return Laurent.monomial(q, c, "t")


def random_diagram(rng, max_crossings=8):
    n = rng.randint(2, 4)
    b = BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1)))
                           for _ in range(rng.randint(1, max_crossings))))
    d = braid_closure(b)
    return mirror(d) if rng.random() < 0.5 else d


# ---------------------------------------------------------------------------


def criterion_1():
    loop = A(2, -1) - A(-2)
    cases = [
        (parse_diagram("braid 2 : s1 s1 s1"), A(7) + A(3) + A(-1) - A(-9)),
        (parse_pd("O"), loop),
        (parse_pd("X(1,1,2,2)"), A(3, -1) * loop),
        (LinkDiagram((), 0), A(0)),
    ]
    for d, want in cases:
        t0 = time.perf_counter()
        if bracket_statesum(d) != want or time.perf_counter() - t0 >= 1:
            return False
    return True


def criterion_2():
    right = parse_diagram("braid 2 : s1 s1 s1")
    left = parse_diagram("braid 2 : s1' s1' s1'")
    if jones(right) != T(2) * (T(16) - T(8) - T(4) - T(0)):
        return False
    if jones(left) != T(-2) * (T(-16) - T(-8) - T(-4) - T(0)):
        return False
    rng = random.Random(2024)
    for _ in range(20):
        d = random_diagram(rng, 8)
        if jones(mirror(d)) != jones(d).scale_exponents(-1):
            return False
    return True


def criterion_3():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(2, 5)
        b = BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1)))
                               for _ in range(rng.randint(0, 10))))
        d = braid_closure(b)
        if bracket_statesum(d) != bracket_functor(d):
            return False
    return True


def criterion_4():
    if not check_relations().passed:
        return False
    report = check_labeled_relations(QGroupContext.generic(), max_label=4, yb_max_label=3)
    return report.passed


def criterion_5():
    from skeinrt.functor import SparseMatrix

    generic = QGroupContext.generic()
    contexts = [generic] + [modular_data(l).ctx for l in range(3, 8)]
    for ctx in contexts:
        for n in range(1, 9):
            r = ctx.rep(n)
            if r.h @ r.x - r.x @ r.h != r.x.scale(ctx.one * 2):
                return False
            if r.h @ r.y - r.y @ r.h != r.y.scale(ctx.one * -2):
                return False
            xy = SparseMatrix(n, n, {(i, i): ctx.qint(n - 1 - 2 * i) for i in range(n)})
            if r.x @ r.y - r.y @ r.x != xy:
                return False
            if qdim(n, ctx) != ctx.qint(n):
                return False
    for ctx, top in [(generic, 5)] + [(modular_data(l).ctx, min(5, l - 1)) for l in range(3, 8)]:
        for i in range(1, top + 1):
            for j in range(1, top + 1):
                if colored_invariant(HOPF, [i, j], ctx, [0, 0]) != ctx.qint(i * j):
                    return False
    return True


def criterion_6():
    for l in range(3, 13):
        md = modular_data(l)
        n = md.rank
        if any(md.hopf[i][j] != md.hopf[j][i] for i in range(n) for j in range(n)):
            return False
        if not md.hopf_det():
            return False
        for i in md.labels:
            m = md.fusion_matrix(i)
            for r in range(n):
                lhs = sum((m[r][c] * md.qdims[c] for c in range(n)), md.ctx.zero)
                if lhs != md.qdim_of(i) * md.qdims[r]:
                    return False
            if bool(md.omega_hopf(i)) != (i == 1):
                return False
    return True


def _lens_oracle(p, l):
    s = field(4 * l).zeta(1)
    qd = [quantum_integer(n, s) for n in range(1, l)]
    th = [s ** (n * n - 1) for n in range(1, l)]
    total = sum((q * q * t ** p for q, t in zip(qd, th)), s * 0)
    K = sqrt_element(sum((q * q for q in qd), s * 0))
    C = K * sum((q * q * t for q, t in zip(qd, th)), s * 0).inverse()
    sign = (p > 0) - (p < 0)
    return C ** sign * K.inverse() * K.inverse() * total


def criterion_7():
    for l in range(3, 6):
        md = modular_data(l)
        if any(rt_invariant(p, md).corrected != md.K.inverse() for p in s3_presentations()):
            return False
        if rt_invariant(parse_surgery("O\nframings: [0]"), md).corrected != 1:
            return False
        for p in range(-5, 6):
            if p and rt_invariant(parse_surgery(f"O\nframings: [{p}]"), md).corrected \
                    != _lens_oracle(p, l):
                return False
        if not kirby_invariance_suite(md).passed:
            return False
    return True


def criterion_8():
    if any(tqft_dim(1, l) != l - 1 for l in range(2, 13)):
        return False
    if tqft_dim(2, 3) != 4:
        return False
    for l in range(3, 7):
        md = modular_data(l)
        for g in (2, 3):
            if len({tqft_dim(g, md, s) for s in spines_for(g)}) != 1:
                return False
    return True


def criterion_9():
    for l in range(3, 13):
        z = modular_data(l).K.inverse().to_complex()
        if abs(z - math.sqrt(2 / l) * math.sin(math.pi / l)) >= 1e-9:
            return False
    return True


# number -> (check, time budget in seconds or None)
CRITERIA = {
    1: (criterion_1, 4),
    2: (criterion_2, 10),
    3: (criterion_3, 60),
    4: (criterion_4, 120),
    5: (criterion_5, 120),
    6: (criterion_6, None),
    7: (criterion_7, 300),
    8: (criterion_8, None),
    9: (criterion_9, None),
}

NAMES = {
    1: "bracket regressions",
    2: "Jones regressions and mirror relation",
    3: "state sum equals functor on 100 random braids",
    4: "Moves I-VII, Kauffman and labeled tables",
    5: "quantum-group identities",
    6: "modular data for l = 3..12",
    7: "RT invariants and Kirby invariance",
    8: "TQFT dimensions",
    9: "Z(S^3) numerics",
}


def run_criterion(k):
    check, budget = CRITERIA[k]
    t0 = time.perf_counter()
    ok = check()
    elapsed = time.perf_counter() - t0
    in_time = budget is None or elapsed < budget
    return ok and in_time, elapsed, ok, budget


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    passed, elapsed, ok, budget = run_criterion(k)
    with capsys.disabled():
        print(f"\ncriterion {k} ({NAMES[k]}): {'PASS' if passed else 'FAIL'} in {elapsed:.1f} s")
    assert ok, f"criterion {k} check failed"
    assert budget is None or elapsed < budget, f"criterion {k} took {elapsed:.1f} s (limit {budget} s)"


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        passed, elapsed, _, _ = run_criterion(k)
        failed += not passed
        print(f"criterion {k} ({NAMES[k]}): {'PASS' if passed else 'FAIL'} in {elapsed:.1f} s",
              flush=True)
    sys.exit(1 if failed else 0)
