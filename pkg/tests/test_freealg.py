import pytest

from kbh.errors import AlgebraError
from kbh.freealg import (
    abelianize,
    cw_from_terms,
    cw_reduce,
    cyc_substitute,
    cyc_word,
    fa_exp,
    fa_from_terms,
    fa_letter,
    fa_log,
    fa_mul,
    fa_one,
    fa_substitute,
    render_assoc,
    render_cyclic,
    tr,
)
from kbh.rat import QF

from helpers import W


def test_mul_expands_products():
    u, v = fa_letter("u", 3), fa_letter("v", 3)
    s = u + v
    sq = fa_mul(s, s)
    assert sq.terms == {W("uu"): 1, W("uv"): 1, W("vu"): 1, W("vv"): 1}


def test_mul_truncates():
    u = fa_letter("u", 2)
    cube = fa_mul(fa_mul(u, u), u)
    assert not cube


def test_degree_mixing_is_an_error():
    with pytest.raises(AlgebraError):
        fa_mul(fa_letter("u", 2), fa_letter("v", 3))


def test_exp_log_roundtrip():
    x = fa_from_terms({W("u"): QF(1), W("vw"): QF(-2), W("w"): QF(1, 3)}, 4)
    assert fa_log(fa_exp(x)) == x
    y = fa_one(4) + x
    assert fa_exp(fa_log(y)) == y


def test_exp_needs_no_constant():
    with pytest.raises(AlgebraError):
        fa_exp(fa_one(3))


def test_log_needs_unit_constant():
    with pytest.raises(AlgebraError):
        fa_log(fa_letter("u", 3))


def test_log_of_two_exponentials():
    u, v = fa_letter("u", 2), fa_letter("v", 2)
    got = fa_log(fa_mul(fa_exp(u), fa_exp(v)))
    assert got.terms == {
        W("u"): QF(1),
        W("v"): QF(1),
        W("uv"): QF(1, 2),
        W("vu"): QF(-1, 2),
    }


def test_tr_closes_words():
    x = fa_from_terms({W("uv"): 1, W("vu"): 1, W("u"): 5, (): 9}, 3)
    got = tr(x)
    assert got.terms == {W("uv"): 2, W("u"): 5}


def test_cyc_word_picks_smallest_rotation():
    assert cyc_word(W("vu")) == W("uv")
    assert cyc_word(W("wvu")) == W("uwv")
    assert cyc_word(W("uu")) == W("uu")


def test_cw_reduce_drops_single_letters():
    x = cw_from_terms({W("u"): 3, W("uv"): 1}, 3)
    got = cw_reduce(x)
    assert got.terms == {W("uv"): 1}
    assert cw_reduce(got) == got


def test_substitute_is_multiplicative():
    uu = fa_from_terms({W("uu"): 1}, 2)
    s = fa_letter("u", 2) + fa_letter("v", 2)
    got = fa_substitute(uu, {"u": s})
    assert got == fa_mul(s, s)


def test_substitute_rename_and_delete():
    x = fa_from_terms({W("uv"): 2, W("vw"): 1, W("w"): 3}, 2)
    renamed = fa_substitute(x, {"v": fa_letter("a", 2)})
    assert renamed.terms == {W("ua"): 2, W("aw"): 1, W("w"): 3}
    killed = fa_substitute(x, {"v": fa_from_terms({}, 2)})
    assert killed.terms == {W("w"): 3}


def test_cyclic_substitution_ignores_rotation():
    s = fa_letter("u", 3) + fa_from_terms({W("uw"): QF(1, 2)}, 3)
    a = cyc_substitute(cw_from_terms({W("uv"): 1}, 3), {"u": s})
    b = tr(fa_substitute(fa_from_terms({W("vu"): 1}, 3), {"u": s}))
    assert a == b


def test_abelianize_collects_by_length():
    x = cw_from_terms({W("uv"): 2, W("uu"): 1, W("u"): 4}, 3)
    assert abelianize(x) == {2: 3, 1: 4}


def test_rendering():
    x = fa_from_terms({W("uv"): QF(-1, 2), W("u"): 1, (): 2}, 3)
    assert render_assoc(x) == "2 + u - 1/2 uv"
    y = cw_from_terms({W("uv"): 3}, 3)
    assert render_cyclic(y) == "3 (uv)"
