"""Tests for tangle parsing and the two invariant pipelines."""

import pytest

from kbh.beta import rf_str
from kbh.errors import InputError
from kbh.freealg import abelianize
from kbh.mma import h_sigma, t_sigma
from kbh.rat import QF
from kbh.tangle import (
    alexander,
    beta_of_tangle,
    open_strands,
    parse_tangle,
    render_alexander,
    tangle_from_json,
    tangle_to_json,
    zeta_of_tangle,
)

TREFOIL = """
# right-handed trefoil, closed up from three positive crossings
X+ 1 4
X+ 5 2
X+ 3 6
sew 1 2 1
sew 1 3 1
sew 1 4 1
sew 1 5 1
sew 1 6 1
"""

BORROMEAN = """
X+ r 4
X- 2 6
X+ g 7
X- 5 9
X+ b 1
X- 8 3
sew r 1 r
sew r 2 r
sew r 3 r
sew g 4 g
sew g 5 g
sew g 6 g
sew b 7 b
sew b 8 b
sew b 9 b
"""


def wheels_by_length(m):
    out = {}
    for word, coeff in m.omega.terms.items():
        out.setdefault(len(word), {})[word] = coeff
    return out


def lam_by_length(m, x):
    out = {}
    for word, coeff in m.lam[x].terms.items():
        out.setdefault(len(word), {})[word] = coeff
    return out


class TestParsing:
    def test_crossing_and_sew(self):
        t = parse_tangle("X+ a b\nsew a b a")
        assert t.crossings == ((1, "a", "b"),)
        assert t.plan == (("a", "b", "a"),)
        assert t.strands == ()

    def test_comments_and_blank_lines(self):
        t = parse_tangle("# header\n\nstrand a\n  # indented comment\nV b c\n")
        assert t.strands == ("a", "b", "c")
        assert t.crossings == ()

    def test_open_strands_sorted(self):
        t = parse_tangle("strand q\nstrand a\nX+ m n")
        assert open_strands(t) == ("a", "m", "n", "q")

    def test_sew_may_reuse_a_consumed_label(self):
        t = parse_tangle("X+ a b\nsew a b b")
        assert open_strands(t) == ("b",)

    @pytest.mark.parametrize(
        "text",
        [
            "Y+ a b",
            "X* a b",
            "X+ a",
            "X+ a b c",
            "strand",
            "strand a b",
            "V a",
            "sew a b",
            "sew a b c d",
            "X+ a a",
            "X+ a b\nX- a c",
            "strand a\nstrand a",
            "sew a b c",
            "X+ a b\nsew a a c",
            "X+ a b\nstrand c\nsew a b c",
            "X+ a/b c",
            "",
            "# only a comment\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(InputError):
            parse_tangle(text)

    def test_error_carries_line_number(self):
        with pytest.raises(InputError, match="line 3"):
            parse_tangle("X+ a b\n# fine\nstrand a b c")

    def test_sew_error_names_step(self):
        with pytest.raises(InputError, match="sew step 2"):
            parse_tangle("X+ a b\nX- c d\nsew a b a\nsew b c e")

    def test_json_roundtrip(self):
        t = parse_tangle(TREFOIL)
        assert tangle_from_json(tangle_to_json(t)) == t

    def test_json_signs_as_ints(self):
        blob = {"crossings": [{"sign": 1, "over": "a", "under": "b"}],
                "strands": [], "plan": [["a", "b", "a"]]}
        assert tangle_from_json(blob).crossings == ((1, "a", "b"),)

    @pytest.mark.parametrize(
        "blob",
        [
            [],
            {"crossings": "x", "strands": [], "plan": []},
            {"crossings": [{"sign": "+", "over": "a"}], "strands": [], "plan": []},
            {"crossings": [{"sign": 0, "over": "a", "under": "b"}],
             "strands": [], "plan": []},
            {"crossings": [], "strands": [1], "plan": []},
            {"crossings": [], "strands": ["a"], "plan": [["a", "b"]]},
        ],
    )
    def test_json_rejects(self, blob):
        with pytest.raises(InputError):
            tangle_from_json(blob)


class TestKink:
    def test_zeta(self):
        kink = parse_tangle("X+ 1 2\nsew 1 2 1")
        z = zeta_of_tangle(kink, 3)
        assert z.tails == frozenset({"1"})
        assert dict(z.lam["1"].terms) == {("1",): QF(1)}
        assert not z.omega.terms

    def test_beta(self):
        kink = parse_tangle("X+ 1 2\nsew 1 2 1")
        b = beta_of_tangle(kink)
        assert rf_str(b.omega) == "t_1"
        assert rf_str(b.entry("1", "1")) == "t_1 - 1"

    def test_alexander_is_one(self):
        assert alexander(parse_tangle("X+ 1 2\nsew 1 2 1")) == {0: 1}
        assert alexander(parse_tangle("X- 1 2\nsew 1 2 1")) == {0: 1}


class TestTrefoil:
    def test_alexander(self):
        t = parse_tangle(TREFOIL)
        assert alexander(t) == {-1: 1, 0: -1, 1: 1}

    def test_beta_omega(self):
        b = beta_of_tangle(parse_tangle(TREFOIL))
        assert rf_str(b.omega) == "t_1^3 - t_1^2 + t_1"

    def test_wheels(self):
        z = zeta_of_tangle(parse_tangle(TREFOIL), 5)
        assert abelianize(z.omega) == {2: QF(1), 4: QF(-5, 12)}

    def test_alexander_needs_one_open_strand(self):
        with pytest.raises(InputError):
            alexander(parse_tangle("strand a\nstrand b"))


class TestMoves:
    def test_r2(self):
        move = parse_tangle("X+ a1 b1\nX- a2 b2\nsew a1 a2 a\nsew b1 b2 b")
        flat = parse_tangle("strand a\nstrand b")
        assert zeta_of_tangle(move, 4) == zeta_of_tangle(flat, 4)
        assert beta_of_tangle(move) == beta_of_tangle(flat)

    def test_r3(self):
        plan = "sew a1 a2 a\nsew b1 b2 b\nsew c1 c2 c"
        left = parse_tangle("X+ a1 b1\nX+ a2 c1\nX+ b2 c2\n" + plan)
        right = parse_tangle("X+ b1 c1\nX+ a1 c2\nX+ a2 b2\n" + plan)
        assert zeta_of_tangle(left, 4) == zeta_of_tangle(right, 4)
        assert beta_of_tangle(left) == beta_of_tangle(right)

    def test_detour(self):
        move = parse_tangle("V m1 a\nV m2 b\nsew m1 m2 m")
        flat = parse_tangle("strand m\nstrand a\nstrand b")
        assert zeta_of_tangle(move, 4) == zeta_of_tangle(flat, 4)
        assert beta_of_tangle(move) == beta_of_tangle(flat)

    def test_overcrossings_commute(self):
        plan = "sew o1 o2 o"
        one = parse_tangle("X+ o1 u\nX+ o2 v\n" + plan)
        two = parse_tangle("X+ o1 v\nX+ o2 u\n" + plan)
        assert zeta_of_tangle(one, 4) == zeta_of_tangle(two, 4)
        assert beta_of_tangle(one) == beta_of_tangle(two)

    def test_undercrossings_do_not_commute(self):
        plan = "sew u1 u2 u"
        one = parse_tangle("X+ o u1\nX+ v u2\n" + plan)
        two = parse_tangle("X+ o u2\nX+ v u1\n" + plan)
        assert zeta_of_tangle(one, 1) == zeta_of_tangle(two, 1)
        assert zeta_of_tangle(one, 2) != zeta_of_tangle(two, 2)


class TestBorromean:
    def test_degree_two_brackets(self):
        z = zeta_of_tangle(parse_tangle(BORROMEAN), 4)
        assert sorted(z.tails) == ["b", "g", "r"]
        for x in "bgr":
            assert 1 not in lam_by_length(z, x)
        assert lam_by_length(z, "r")[2] == {("b", "g"): QF(-1)}
        assert lam_by_length(z, "g")[2] == {("b", "r"): QF(1)}
        assert lam_by_length(z, "b")[2] == {("g", "r"): QF(-1)}

    def test_rotation_symmetry(self):
        z = zeta_of_tangle(parse_tangle(BORROMEAN), 4)
        m = z
        for f in (t_sigma, h_sigma):
            m = f(m, "r", "tmp")
            m = f(m, "b", "r")
            m = f(m, "g", "b")
            m = f(m, "tmp", "g")
        assert m == z

    def test_wheels_start_at_degree_four(self):
        z = zeta_of_tangle(parse_tangle(BORROMEAN), 4)
        wheels = wheels_by_length(z)
        assert set(wheels) == {4}
        assert wheels[4] == {
            ("b", "g", "b", "r"): QF(1),
            ("b", "g", "r", "g"): QF(1),
            ("b", "r", "g", "r"): QF(1),
        }


class TestRenderAlexander:
    def test_trefoil_style(self):
        assert render_alexander({-1: 1, 0: -1, 1: 1}) == "t^-1 - 1 + t"

    def test_coefficients_and_powers(self):
        assert render_alexander({0: 1}) == "1"
        assert render_alexander({-2: 2, 0: -3, 2: 2}) == "2 t^-2 - 3 + 2 t^2"
        assert render_alexander({1: -1}) == "-t"
