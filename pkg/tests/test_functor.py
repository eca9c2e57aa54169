import json
from types import MappingProxyType

import pytest

from skeinrt.coeff import Laurent
from skeinrt.diagram import DiagramValidationError, parse_diagram, parse_pd, parse_tangle, to_tangle_word
from skeinrt.functor import (MOVES, Coupon, LabeledTangle, SparseMatrix, check_labeled_relations,
                             check_relations, eval_labeled, eval_word, kauffman_table)
from skeinrt.qgroup import QGroupContext
from skeinrt.skein import bracket_statesum


def A(k, c=1):
    return Laurent.monomial(k, c, "A")


@pytest.fixture(scope="module")
def generic():
    return QGroupContext.generic()


class TestSparseMatrix:
    def test_zeros_dropped(self):
        m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): 3})
        assert list(m.entries) == [(1, 1)]

    def test_product_and_kron(self):
        a = SparseMatrix.from_rows([[1, 2], [0, 1]])
        b = SparseMatrix.from_rows([[0, 1], [1, 0]])
        assert (a @ b).to_dense() == [[2, 1], [1, 0]]
        k = a.kron(b)
        assert k.shape == (4, 4) and k.to_dense()[0] == [0, 1, 0, 2]
        assert a.transpose().to_dense() == [[1, 0], [2, 1]]
        assert a.trace() == 2

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            SparseMatrix(2, 3) @ SparseMatrix(2, 3)

    def test_json_roundtrip(self):
        m = kauffman_table()["over"]
        assert SparseMatrix.from_json(json.dumps(m.to_json())) == m


class TestKauffman:
    def test_table_is_immutable(self):
        t = kauffman_table()
        assert isinstance(t, MappingProxyType)
        with pytest.raises(TypeError):
            t["over"] = t["under"]

    def test_over_under_inverse(self):
        t = kauffman_table()
        assert t["over"] @ t["under"] == SparseMatrix.identity(4, A(0))

    def test_circle_is_loop_value(self):
        assert eval_word(parse_tangle("cup\ncap")).scalar() == A(2, -1) - A(-2)

    def test_all_moves_pass(self):
        report = check_relations()
        assert report.passed, report.failures
        assert set(report.results) == {"I", "II", "III", "IV", "V", "VI", "VII"}
        assert report.checked == sum(len(v) for v in MOVES.values())

    def test_negative_control(self):
        # a crossing that does nothing violates Reidemeister II and the crossing rotations
        t = dict(kauffman_table())
        t["over"] = t["id"].kron(t["id"])
        report = check_relations(t)
        assert not report.passed
        assert "II" in report.failed_moves()
        assert report.to_json()["passed"] is False

    def test_cap_cup_gauge(self):
        # rescaling cap and cup inversely leaves every relation intact
        t = dict(kauffman_table())
        t["cap"] = t["cap"].scale(A(2))
        t["cup"] = t["cup"].scale(A(-2))
        assert check_relations(t).passed

    def test_closed_word_is_bracket(self):
        for text in ("braid 2 : s1 s1 s1", "braid 3 : s1 s2' s1 s2'", "X(1,4,2,3) X(3,2,4,1)"):
            d = parse_diagram(text)
            assert eval_word(to_tangle_word(d)).scalar() == bracket_statesum(d)


class TestLabeled:
    def test_generic_relations_small_labels(self, generic):
        report = check_labeled_relations(generic, max_label=2, yb_max_label=2)
        assert report.passed, {k: v[:2] for k, v in report.failures.items()}

    def test_root_relations(self):
        ctx = QGroupContext.at_root(20)
        moves = {k: MOVES[k] for k in ("I", "II", "III", "V")}
        report = check_labeled_relations(ctx, max_label=3, yb_max_label=2, moves=moves)
        assert report.passed

    def test_circle_is_quantum_integer(self, generic):
        for n in range(1, 6):
            t = LabeledTangle(parse_tangle("cup\ncap"), [n])
            assert eval_labeled(t, generic).scalar() == generic.qint(n)

    def test_missing_label(self, generic):
        with pytest.raises(DiagramValidationError):
            eval_labeled(LabeledTangle(parse_tangle("cup\ncap"), {}), generic)
        with pytest.raises(DiagramValidationError):
            eval_labeled(LabeledTangle(parse_tangle("cup\ncap"), [0]), generic)

    def test_label_two_matches_bracket(self, generic):
        from skeinrt.qgroup import colored_invariant
        from skeinrt.diagram import writhe
        for text in ("braid 2 : s1 s1 s1", "X(1,4,2,3) X(3,2,4,1)", "braid 3 : s1 s2' s1 s2'",
                     "braid 3 : s1 s1 s2 s2"):
            d = parse_diagram(text)
            f = colored_invariant(d, [2] * d.component_count, generic)
            sign = -1 if (d.component_count + writhe(d)) % 2 else 1
            assert f == bracket_statesum(d).scale_exponents(1, "s") * sign


class TestCoupons:
    def _tangle(self, word, matrix, n=2):
        cp = Coupon(matrix, ((n, True),), ((n, True),))
        return LabeledTangle(parse_tangle(word), [n, n, n], {"f": cp})

    def test_shape_checked(self):
        with pytest.raises(DiagramValidationError):
            Coupon(SparseMatrix.identity(3, 1), ((2, True),), ((2, True),))

    def test_missing_coupon_data(self, generic):
        t = LabeledTangle(parse_tangle("coupon(g)"), [2])
        with pytest.raises(DiagramValidationError):
            eval_labeled(t, generic)

    def test_closed_coupon_is_quantum_trace(self, generic):
        scalar = generic.s * 3
        m = SparseMatrix.identity(2, generic.one).scale(scalar)
        t = self._tangle("cup\ncoupon(f), id\ncap", m)
        assert eval_labeled(t, generic).scalar() == scalar * generic.qint(2)

    def test_intertwiner_slides_through_crossing(self, generic):
        m = SparseMatrix.identity(2, generic.one).scale(generic.s + 2)
        below = self._tangle("coupon(f), id\nover", m)
        above = self._tangle("over\nid, coupon(f)", m)
        assert eval_labeled(below, generic) == eval_labeled(above, generic)

    def test_non_intertwiner_does_not_slide(self, generic):
        m = generic.rep(2).x + SparseMatrix.identity(2, generic.one)
        below = self._tangle("coupon(f), id\nover", m)
        above = self._tangle("over\nid, coupon(f)", m)
        assert eval_labeled(below, generic) != eval_labeled(above, generic)

    def test_kauffman_coupon(self):
        m = SparseMatrix.from_rows([[A(1), A(0) * 0], [A(0) * 0, A(-1)]])
        w = parse_tangle("coupon(f)")
        assert eval_word(w, coupons={"f": m}) == m
