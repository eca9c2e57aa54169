import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinrt.diagram import (BraidWord, DiagramParseError, DiagramValidationError, LinkDiagram,
                             SurgeryPresentation, TangleWord, add_kink, braid_closure,
                             disjoint_union, infer_levels, linking_matrix, linking_numbers, mirror,
                             parse_braid, parse_diagram, parse_pd, parse_surgery, parse_tangle,
                             remove_kink, signature, stabilize, to_tangle_word, writhe)

from strategies import braids, diagrams

HOPF = "X(1,4,2,3) X(3,2,4,1)"


class TestBraid:
    def test_parse(self):
        b = parse_braid("braid 2 : s1 s1 s1")
        assert b.strands == 2 and b.letters == ((1, 1),) * 3
        assert parse_braid("braid 3 : s2' s1").letters == ((2, -1), (1, 1))

    def test_identity_braid(self):
        b = parse_braid("braid 3 :")
        assert b.letters == () and braid_closure(b).component_count == 3

    @pytest.mark.parametrize("text", ["braid 2 : s5", "braid 2 : t1", "braid : s1", "braid 0 :"])
    def test_errors(self, text):
        with pytest.raises(DiagramParseError):
            parse_braid(text)

    @given(braids)
    def test_text_roundtrip(self, b):
        assert parse_braid(str(b)) == b

    @given(braids)
    def test_components_match_cycles(self, b):
        assert braid_closure(b).component_count == b.cycle_count()

    @given(braids)
    def test_closure_writhe_is_exponent_sum(self, b):
        assert writhe(braid_closure(b)) == sum(sg for _, sg in b.letters)


class TestPD:
    def test_hopf(self):
        d = parse_pd(HOPF)
        assert d.crossing_count == 2 and d.component_count == 2
        assert linking_numbers(d)[0][1] in (Fraction(1), Fraction(-1))

    def test_kinked_unknot_is_valid(self):
        d = parse_pd("X(1,1,2,2)")
        assert d.component_count == 1 and writhe(d) == 1
        assert writhe(parse_pd("X(1,2,2,1)")) == -1

    @pytest.mark.parametrize("text", ["X(1,1,2,3)", "X(1,2,3,4)"])
    def test_arc_count_error(self, text):
        with pytest.raises(DiagramValidationError):
            parse_pd(text)

    def test_syntax_error_has_position(self):
        with pytest.raises(DiagramParseError) as exc:
            parse_pd("X(1,4,2,3) Y(3,2,4,1)")
        assert exc.value.position == 11

    def test_loops(self):
        d = parse_pd("O O")
        assert d.loops == 2 and d.component_count == 2
        assert parse_diagram("") == LinkDiagram((), 0)

    def test_trefoil_writhe_and_mirror(self):
        d = parse_diagram("braid 2 : s1 s1 s1")
        assert writhe(d) == 3
        assert writhe(mirror(d)) == -3

    @given(diagrams)
    def test_json_roundtrip(self, d):
        back = LinkDiagram.from_json(json.dumps(d.to_json()))
        assert back.crossings == d.crossings and back.loops == d.loops

    @given(diagrams)
    def test_mirror_negates_signs(self, d):
        m = mirror(d)
        assert writhe(m) == -writhe(d)
        # involutive up to reversing components that were only ever over
        for x, y in zip(mirror(m).crossings, d.crossings):
            assert x in (y, y[2:] + y[:2])

    def test_parse_diagram_dispatch(self):
        assert parse_diagram("braid 2 : s1").crossing_count == 1
        assert parse_diagram(HOPF).crossing_count == 2
        j = json.dumps(parse_pd(HOPF).to_json())
        assert parse_diagram(j).crossings == parse_pd(HOPF).crossings


class TestKinks:
    @given(diagrams, st.sampled_from([1, -1]), st.integers(0, 10))
    def test_add_changes_writhe(self, d, sign, k):
        if not d.component_count:
            return
        c = k % d.component_count
        e = add_kink(d, c, sign)
        assert writhe(e) == writhe(d) + sign
        assert sum(e.self_writhe()) == sum(d.self_writhe()) + sign
        if c < len(d.components):
            # loops come last, so only crossing components keep their index
            assert e.self_writhe()[c] == d.self_writhe()[c] + sign

    @given(diagrams, st.sampled_from([1, -1]))
    def test_remove_undoes_add(self, d, sign):
        if not d.component_count:
            return
        e = add_kink(d, 0, sign)
        back = remove_kink(e, e.crossing_count - 1)
        assert sorted(back.crossings) == sorted(d.crossings) and back.loops == d.loops

    def test_unknown_component(self):
        with pytest.raises(DiagramValidationError):
            add_kink(parse_pd("O"), 3, 1)

    def test_not_a_curl(self):
        with pytest.raises(DiagramValidationError):
            remove_kink(parse_pd(HOPF), 0)


class TestSignature:
    def test_examples(self):
        assert signature([[1]]) == 1
        assert signature([[0, 1], [1, 0]]) == 0
        assert signature([[2, 1], [1, 2]]) == 2
        assert signature([]) == 0

    @settings(max_examples=60)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(
        st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(-2, 2)),
                 max_size=6))))
    def test_sylvester_invariance(self, data):
        raw, ops = data
        n = len(raw)
        m = [[raw[i][j] + raw[j][i] for j in range(n)] for i in range(n)]
        # a product of elementary unimodular matrices
        p = [[int(i == j) for j in range(n)] for i in range(n)]
        for i, j, c in ops:
            if i != j:
                for r in range(n):
                    p[r][j] += c * p[r][i]
        pt_m_p = [[sum(p[a][i] * m[a][b] * p[b][j] for a in range(n) for b in range(n))
                   for j in range(n)] for i in range(n)]
        assert signature(pt_m_p) == signature(m)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            signature([[0, 1], [0, 0]])


class TestSurgery:
    def test_parse_and_matrix(self):
        s = parse_surgery(f"# Hopf\n{HOPF}\nframings: [0, 0]\n")
        assert [abs(x) for row in s.linking_matrix() for x in row] == [0, 1, 1, 0]
        assert s.signature() == 0

    def test_unknots(self):
        assert parse_surgery("O\nframings: [0]").linking_matrix() == [[0]]
        assert parse_surgery("O\nframings: [1]").linking_matrix() == [[1]]

    def test_empty(self):
        s = parse_surgery("framings: []")
        assert s.component_count == 0 and s.signature() == 0

    def test_stabilize_empty(self):
        s = stabilize(parse_surgery("framings: []"), 1)
        assert s.framings == (1,) and s.diagram.loops == 1

    @pytest.mark.parametrize("sign", [1, -1])
    def test_stabilize_shifts_signature(self, sign):
        s = parse_surgery("braid 2 : s1 s1 s1 s1\nframings: [3, -2]")
        t = s.stabilize(sign)
        assert t.signature() == s.signature() + sign
        m = linking_matrix(t)
        assert m[-1][-1] == sign and all(v == 0 for v in m[-1][:-1])

    def test_framing_count_checked(self):
        with pytest.raises(DiagramValidationError):
            parse_surgery(f"{HOPF}\nframings: [0]")

    @pytest.mark.parametrize("text", [HOPF, f"{HOPF}\nframings: [a, b]", "O\nframings: [0]\nframings: [1]",
                                      "O\nframings 1"])
    def test_parse_errors(self, text):
        with pytest.raises(DiagramParseError):
            parse_surgery(text)

    def test_text_and_json_roundtrip(self):
        s = parse_surgery(f"{HOPF} O\nframings: [1, 2, -3]")
        assert parse_surgery(s.to_text()).framings == s.framings
        assert SurgeryPresentation.from_json(json.dumps(s.to_json())) == s

    def test_disjoint_union_keeps_framings(self):
        a = parse_surgery("O\nframings: [3]")
        b = parse_surgery("braid 2 : s1 s1 s1\nframings: [-2]")
        u = a.disjoint_union(b)
        assert sorted(u.framings) == [-2, 3]
        assert u.linking_matrix() == [[-2, 0], [0, 3]]

    def test_mirror_negates(self):
        s = parse_surgery(f"{HOPF}\nframings: [2, 1]")
        m = s.mirror()
        assert m.framings == (-2, -1) and m.signature() == -s.signature()


class TestTangle:
    def test_parse(self):
        w = parse_tangle("cup\nid, id # comment\ncap")
        assert w.dom == 0 and w.cod == 0 and w.closed
        assert [len(s) for s in w.slices] == [1, 2, 1]

    def test_coupon(self):
        w = parse_tangle("coupon(f)\ncoupon(g, 1, 3)\nid, cap")
        assert w.slices[1][0].cod == 3 and w.dom == 1 and w.cod == 1

    def test_arity_mismatch(self):
        with pytest.raises(DiagramValidationError):
            parse_tangle("cup\nid")

    def test_bad_generator(self):
        with pytest.raises(DiagramParseError):
            parse_tangle("cup\nid, wobble")

    def test_text_and_json_roundtrip(self):
        w = parse_tangle("cup, cup\nid, over, id\ncap, cap")
        assert parse_tangle(w.to_text()) == w
        assert TangleWord.from_json(json.dumps(w.to_json())) == w

    def test_infer_levels_consistency(self):
        w = parse_tangle("cup\nover\ncap")
        lv = infer_levels(w)
        assert lv[1][0].up != lv[1][1].up
        with pytest.raises(DiagramValidationError):
            infer_levels(parse_tangle("cup\ncap"), {(1, 0): True, (1, 1): True})

    def test_unknot_word(self):
        w = to_tangle_word(parse_pd("O"))
        assert [g.kind for s in w.slices for g in s] == ["cup", "cap"]

    def test_empty_word(self):
        assert to_tangle_word(LinkDiagram((), 0)).slices == ()

    def test_hopf_word(self):
        w = to_tangle_word(parse_pd(HOPF))
        assert w.closed and w.count("cup") == w.count("cap") == 2
        assert w.count("over") + w.count("under") == 2

    @given(diagrams)
    def test_word_is_closed_and_counts_crossings(self, d):
        w = to_tangle_word(d)
        assert w.closed
        assert w.count("over") + w.count("under") == d.crossing_count
        assert w.count("cup") == w.count("cap")

    def test_deterministic(self):
        d = random.Random(3)
        from strategies import random_diagram
        x = random_diagram(d)
        assert to_tangle_word(x) == to_tangle_word(x)


def test_disjoint_union_counts():
    u = disjoint_union(parse_pd(HOPF), parse_diagram("braid 2 : s1 s1 s1"))
    assert u.component_count == 3 and u.crossing_count == 5


def test_braidword_validation():
    with pytest.raises(ValueError):
        BraidWord(2, ((2, 1),))
