import pytest

from kbh.errors import AlgebraError
from kbh.lyndon import (
    expand,
    is_lyndon,
    lyndon_words,
    project_lie,
    standard_factorization,
)

from helpers import W


def witt(k, n):
    # number of Lyndon words of length n over k letters, by Moebius inversion
    def mobius(m):
        out, d, left = 1, 2, m
        while d * d <= left:
            if left % d == 0:
                left //= d
                if left % d == 0:
                    return 0
                out = -out
            d += 1
        if left > 1:
            out = -out
        return out

    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += mobius(d) * k ** (n // d)
    return total // n


def test_counts_match_witt_formula():
    for k, letters in ((2, "uv"), (3, "uvw")):
        words = lyndon_words(letters, 6)
        for n in range(1, 7):
            assert len([w for w in words if len(w) == n]) == witt(k, n)


def test_enumeration_order():
    assert lyndon_words("uv", 3) == [
        W("u"),
        W("v"),
        W("uv"),
        W("uuv"),
        W("uvv"),
    ]


def test_is_lyndon():
    assert is_lyndon(W("u"))
    assert is_lyndon(W("uuv"))
    assert not is_lyndon(W("vu"))
    assert not is_lyndon(W("uu"))
    assert not is_lyndon(())


def test_standard_factorization():
    assert standard_factorization(W("uuvuv")) == (W("uuv"), W("uv"))
    assert standard_factorization(W("uuvv")) == (W("u"), W("uvv"))
    assert standard_factorization(W("uvuvv")) == (W("uv"), W("uvv"))


def test_expand_examples():
    assert expand(W("uv")) == {W("uv"): 1, W("vu"): -1}
    # [u, [u, v]]
    assert expand(W("uuv")) == {W("uuv"): 1, W("uvu"): -2, W("vuu"): 1}
    # [[u, v], v]
    assert expand(W("uvv")) == {W("uvv"): 1, W("vuv"): -2, W("vvu"): 1}


def test_expand_is_triangular():
    for w in lyndon_words("uvw", 5):
        table = expand(w)
        assert table[w] == 1
        for other in table:
            assert sorted(other) == sorted(w)
            assert other >= w


def test_project_inverts_expand():
    for w in lyndon_words("uv", 5):
        assert project_lie(expand(w)) == {w: 1}


def test_project_mixed_combination():
    combo = {}
    for w, scale in ((W("uv"), 3), (W("uuv"), -2), (W("u"), 7)):
        for word, c in expand(w).items():
            combo[word] = combo.get(word, 0) + scale * c
    assert project_lie(combo) == {W("uv"): 3, W("uuv"): -2, W("u"): 7}


def test_project_rejects_non_lie_input():
    with pytest.raises(AlgebraError):
        project_lie({W("uv"): 1})
    with pytest.raises(AlgebraError):
        project_lie({(): 1})
