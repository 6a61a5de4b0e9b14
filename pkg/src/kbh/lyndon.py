"""Lyndon words and their bracket expansions.

Letters are strings and words are tuples of letters, ordered lexicographically
by the letters' natural string order.  A word is Lyndon when it is strictly
smaller than every proper rotation of itself.  Each Lyndon word w carries a
standard bracketing b_w, defined recursively through the factorization
w = p q where q is the smallest proper suffix of w; expanding the bracketings
into the word algebra gives a triangular change of basis (w appears with
coefficient 1, every other word of the expansion is lexicographically larger),
which `project_lie` inverts.
"""

from .errors import AlgebraError

# expansion cache: Lyndon word -> {word: int coefficient}
_EXPAND = {}


def is_lyndon(w):
    """True when the word w is strictly smaller than all its proper rotations."""
    n = len(w)
    if n == 0:
        return False
    for i in range(1, n):
        if not w < w[i:] + w[:i]:
            return False
    return True


def lyndon_words(letters, max_degree):
    """All Lyndon words over `letters` of length 1..max_degree.

    Returned sorted by length, then lexicographically; duplicate letters are
    an error.
    """
    alph = sorted(letters)
    if len(set(alph)) != len(alph):
        raise ValueError("duplicate letters: %r" % (letters,))
    if not alph or max_degree <= 0:
        return []
    top = len(alph) - 1
    out = []
    w = [0]
    while True:
        out.append(tuple(alph[i] for i in w))
        w = [w[i % len(w)] for i in range(max_degree)]
        while w and w[-1] == top:
            w.pop()
        if not w:
            break
        w[-1] += 1
    out.sort(key=lambda word: (len(word), word))
    return out


def standard_factorization(w):
    """Split a Lyndon word of length >= 2 as (p, q), q its smallest proper suffix."""
    n = len(w)
    if n < 2:
        raise ValueError("no factorization of a single letter")
    i = min(range(1, n), key=lambda j: w[j:])
    return w[:i], w[i:]


def expand(w):
    """Expansion of the standard bracketing of the Lyndon word w.

    Returns {word: int}; the result is cached and must not be mutated.
    """
    got = _EXPAND.get(w)
    if got is not None:
        return got
    if len(w) == 1:
        out = {w: 1}
    else:
        p, q = standard_factorization(w)
        a, b = expand(p), expand(q)
        out = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                c = c1 * c2
                k = w1 + w2
                out[k] = out.get(k, 0) + c
                k = w2 + w1
                out[k] = out.get(k, 0) - c
        out = {k: v for k, v in out.items() if v}
    _EXPAND[w] = out
    return out


def project_lie(terms):
    """Write an element of the word algebra in the Lyndon bracket basis.

    `terms` maps words to coefficients and must describe a Lie element (no
    constant term, primitive).  Returns {lyndon word: coefficient}.  Any
    residue left over after triangular elimination means the input was not a
    Lie element, which is reported as an AlgebraError rather than dropped.
    """
    groups = {}
    for w, c in terms.items():
        if not c:
            continue
        if len(w) == 0:
            raise AlgebraError("constant term %r in a would-be Lie element" % (c,))
        groups.setdefault((len(w), tuple(sorted(w))), {}).setdefault(w, c)
    out = {}
    for cls in groups.values():
        while cls:
            w = min(cls)
            c = cls.pop(w)
            if not c:
                continue
            if not is_lyndon(w):
                raise AlgebraError(
                    "non-Lie residue: %r survives with coefficient %r" % (w, c)
                )
            out[w] = c
            for w2, k in expand(w).items():
                if w2 == w:
                    continue
                nc = cls.get(w2, 0) - c * k
                if nc:
                    cls[w2] = nc
                elif w2 in cls:
                    del cls[w2]
    return out
