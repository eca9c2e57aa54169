import json
import math

import pytest

from skeinrt.diagram import parse_pd
from skeinrt.functor import MOVES, SparseMatrix, check_labeled_relations
from skeinrt.qgroup import (HOPF, ModularData, ModularDataError, QGroupContext, colored_invariant,
                            exact_det, fusion, fusion_coefficient, modular_data, qdim, qtr,
                            root_context, twist, twist_power, unknot_u)

GENERIC = QGroupContext.generic()
ROOTS = [GENERIC, QGroupContext.at_root(12), QGroupContext.at_root(28, 3)]


def ident(n, ctx):
    return SparseMatrix.identity(n, ctx.one)


def s_h(n, ctx, power=1):
    """s^(power h) on V_n."""
    return SparseMatrix(n, n, {(i, i): ctx.spow(power * (n - 1 - 2 * i)) for i in range(n)})


def flip(n, m, one):
    return SparseMatrix(n * m, n * m, {(j * n + i, i * m + j): one for i in range(n) for j in range(m)})


def delta(a, n, m, ctx):
    """Represented coproduct of x or y on V_n (x) V_m."""
    rn, rm = ctx.rep(n), ctx.rep(m)
    g = getattr(rn, a)
    h = getattr(rm, a)
    return g.kron(s_h(m, ctx)) + s_h(n, ctx, -1).kron(h)


class TestRep:
    @pytest.mark.parametrize("ctx", ROOTS, ids=repr)
    @pytest.mark.parametrize("n", range(1, 9))
    def test_defining_relations(self, ctx, n):
        r = ctx.rep(n)
        assert r.h @ r.x - r.x @ r.h == r.x.scale(ctx.one * 2)
        assert r.h @ r.y - r.y @ r.h == r.y.scale(ctx.one * -2)
        # [x, y] acts on a weight-w vector by [w]
        rhs = SparseMatrix(n, n, {(i, i): ctx.qint(n - 1 - 2 * i) for i in range(n)})
        assert r.x @ r.y - r.y @ r.x == rhs

    def test_small_reps(self):
        r1 = GENERIC.rep(1)
        assert not r1.h.entries and not r1.x.entries and not r1.y.entries
        r3 = GENERIC.rep(3)
        assert r3.x[(1, 2)] == GENERIC.qint(2)
        with pytest.raises(ValueError):
            GENERIC.rep(0)

    def test_r_matrix_two_two(self):
        s = GENERIC.s
        si = GENERIC.spow(-1)
        z = GENERIC.zero
        br = flip(2, 2, GENERIC.one) @ GENERIC.r_matrix(2, 2)
        assert br.to_dense(z) == [[s, z, z, z], [z, z, si, z], [z, si, s - GENERIC.spow(-3), z],
                                  [z, z, z, s]]

    def test_trivial_label_r_is_identity(self):
        for m in range(1, 5):
            assert GENERIC.r_matrix(1, m) == ident(m, GENERIC)

    @pytest.mark.parametrize("ctx", ROOTS[:2], ids=repr)
    def test_braiding_intertwines(self, ctx):
        for n in range(1, 6):
            for m in range(1, 6):
                br = flip(n, m, ctx.one) @ ctx.r_matrix(n, m)
                for a in ("x", "y"):
                    assert br @ delta(a, n, m, ctx) == delta(a, m, n, ctx) @ br
                hh = ctx.rep(n).h.kron(ident(m, ctx)) + ident(n, ctx).kron(ctx.rep(m).h)
                hh2 = ctx.rep(m).h.kron(ident(n, ctx)) + ident(m, ctx).kron(ctx.rep(n).h)
                assert br @ hh == hh2 @ br

    def test_yang_baxter_labels_up_to_three(self):
        report = check_labeled_relations(GENERIC, yb_max_label=3, moves={"III": MOVES["III"]})
        assert report.passed and report.checked == 2 * 27 * 8


class TestInvariants:
    @pytest.mark.parametrize("ctx", ROOTS, ids=repr)
    def test_qdim(self, ctx):
        for n in range(1, 9):
            assert qdim(n, ctx) == ctx.qint(n)
        assert qdim(1, ctx) == ctx.one

    def test_qtr_shape_checked(self):
        from skeinrt.diagram import DiagramValidationError
        with pytest.raises(DiagramValidationError):
            qtr(ident(3, GENERIC), 2, GENERIC)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_twist_closed_form(self, n):
        assert twist(n, GENERIC) == GENERIC.spow(n * n - 1)
        assert twist_power(n, -2, GENERIC) == GENERIC.spow(-2 * (n * n - 1))

    def test_framed_unknot(self):
        u = parse_pd("O")
        for n in range(1, 5):
            assert colored_invariant(u, [n], GENERIC) == GENERIC.qint(n)
        assert colored_invariant(u, [2], GENERIC, [1]) == GENERIC.spow(3) * GENERIC.qint(2)

    @pytest.mark.parametrize("ctx", ROOTS, ids=repr)
    def test_hopf(self, ctx):
        for i in range(1, 4):
            for j in range(1, 4):
                assert colored_invariant(HOPF, [i, j], ctx, [0, 0]) == ctx.qint(i * j)

    def test_invalid_label(self):
        from skeinrt.diagram import DiagramValidationError
        with pytest.raises(DiagramValidationError):
            colored_invariant(parse_pd("O"), [0], GENERIC)


class TestFusion:
    def test_examples(self):
        assert fusion(2, 2) == [(1, 1), (3, 1)]
        assert fusion(2, 2, 4) == [(1, 1), (3, 1)]
        assert fusion(2, 2, 3) == [(1, 1)]
        assert fusion(1, 5, 7) == [(5, 1)]

    def test_out_of_range(self):
        with pytest.raises(ModularDataError):
            fusion(3, 1, 3)
        with pytest.raises(ModularDataError):
            fusion(0, 2)

    @pytest.mark.parametrize("l", range(3, 9))
    def test_discarded_part_has_zero_qdim(self, l):
        ctx = root_context(l)
        for n in range(1, l):
            for m in range(1, l):
                # classical decomposition from weight multiplicities
                weights = [a + b for a in range(n - 1, -n, -2) for b in range(m - 1, -m, -2)]
                classical = []
                while weights:
                    top = max(weights)
                    classical.append(top + 1)
                    for w in range(top, -top - 1, -2):
                        weights.remove(w)
                kept = [k for k, _ in fusion(n, m, l)]
                assert set(kept) <= set(classical)
                dropped = sum((ctx.qint(k) for k in classical if k not in kept), ctx.zero)
                assert not dropped
                assert ctx.qint(n) * ctx.qint(m) == sum((ctx.qint(k) for k in kept), ctx.zero)

    def test_v3_summand_trace_vanishes_at_l3(self):
        # P = (sigma R + s^-3) / (s + s^-3) projects V2 (x) V2 onto V3
        for ctx, expect_zero in ((root_context(3), True), (root_context(5), False)):
            br = flip(2, 2, ctx.one) @ ctx.r_matrix(2, 2)
            p = (br + ident(4, ctx).scale(ctx.spow(-3))).scale((ctx.s + ctx.spow(-3)).inverse())
            assert p @ p == p
            g = s_h(2, ctx, 2).kron(s_h(2, ctx, 2))
            tr = (g @ p).trace()
            assert tr == ctx.qint(3)
            assert (not tr) == expect_zero

    def test_coefficient_symmetry(self):
        for l in (5, 8):
            for i in range(1, l):
                for j in range(1, l):
                    for k in range(1, l):
                        c = fusion_coefficient(i, j, k, l)
                        assert c == fusion_coefficient(j, i, k, l) == fusion_coefficient(i, k, j, l)


class TestModularData:
    @pytest.mark.parametrize("l", range(3, 9))
    def test_axioms(self, l):
        md = modular_data(l)
        n = md.rank
        assert md.labels == tuple(range(1, l)) and not md.ctx.qint(l)
        for i in range(n):
            for j in range(n):
                assert md.hopf[i][j] == md.hopf[j][i]
        assert md.hopf_det()
        for i in md.labels:
            assert md.hopf[0][i - 1] == md.qdim_of(i)
            m = md.fusion_matrix(i)
            for r in range(n):
                lhs = sum((m[r][c] * md.qdims[c] for c in range(n)), md.ctx.zero)
                assert lhs == md.qdim_of(i) * md.qdims[r]
            assert (not md.omega_hopf(i)) == (i != 1)
        assert md.u_plus * md.u_minus == 1
        assert md.K * md.K == md.qdim_omega

    def test_l3_example(self):
        md = modular_data(3)
        q2 = md.ctx.qint(2)
        assert md.hopf == ((md.ctx.one, q2), (q2, md.ctx.qint(4)))
        assert md.ctx.qint(4) == -q2

    def test_unknot_u_agrees(self):
        md = modular_data(5)
        assert unknot_u(md, 1) == md.u_plus
        assert unknot_u(md, -1) == md.u_minus

    def test_s3_numeric(self):
        for l in range(3, 9):
            md = modular_data(l)
            z = md.K.inverse().to_complex()
            assert abs(z - math.sqrt(2 / l) * math.sin(math.pi / l)) < 1e-9

    def test_other_exponents(self):
        for e in (3, 7, 9):
            md = modular_data(5, e)
            assert md.exponent == e and md.hopf_det()

    def test_root_errors(self):
        with pytest.raises(ModularDataError):
            modular_data(5, root_exponent=2)
        with pytest.raises(ModularDataError):
            modular_data(1)
        with pytest.raises(ModularDataError):
            modular_data(4, root_order=8)
        with pytest.raises(ModularDataError, match="singular"):
            modular_data(5, root_order=10)

    def test_json_roundtrip(self):
        md = modular_data(4)
        back = ModularData.from_json(md.dumps())
        assert back == md
        data = json.loads(md.dumps())
        assert {"labels", "qdims", "fusion", "hopf", "twists"} <= set(data)

    def test_exact_det(self):
        ctx = root_context(3)
        assert exact_det([[ctx.one, ctx.one], [ctx.one, ctx.one]]) == ctx.zero
        assert exact_det([[ctx.one * 2, ctx.zero], [ctx.zero, ctx.one * 3]]) == ctx.one * 6
