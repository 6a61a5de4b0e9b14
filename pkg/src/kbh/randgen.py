"""Seeded random elements for identity sweeps.

Everything takes an explicit random.Random so the self-test and the test
suite can replay the exact same elements from a seed.
"""

from .beta import RF_ONE, Poly, b_element, ratfun
from .freealg import cw_from_terms, cw_reduce
from .freelie import LieSeries
from .lyndon import lyndon_words
from .mma import element
from .rat import QF


def random_lie(rng, letters, degree, density=0.6, span=3):
    """A random Lie series: each Lyndon basis word independently gets a
    small rational coefficient with probability `density`."""
    terms = {}
    for w in lyndon_words(letters, degree):
        if rng.random() >= density:
            continue
        num = rng.randint(-span, span)
        if not num:
            continue
        den = rng.choice((1, 1, 2, 3))
        terms[w] = QF(num, den)
    return LieSeries(terms, degree)


def random_cyclic(rng, letters, degree, terms=4, span=3):
    """A random reduced cyclic series with words of length 2..degree."""
    letters = sorted(letters)
    out = {}
    for _ in range(terms):
        if degree < 2 or not letters:
            break
        length = rng.randint(2, degree)
        w = tuple(rng.choice(letters) for _ in range(length))
        c = QF(rng.randint(-span, span), rng.choice((1, 1, 2)))
        if c:
            out[w] = out.get(w, 0) + c
    return cw_reduce(cw_from_terms(out, degree))


def random_mma(rng, tails, heads, degree, density=0.6, span=3):
    """A random element over the given tail and head labels."""
    lam = {
        x: random_lie(rng, tails, degree, density=density, span=span)
        for x in heads
    }
    return element(
        tails, lam, random_cyclic(rng, tails, degree, span=span), degree
    )


def _random_poly(rng, letters, terms=2, span=2):
    out = Poly({})
    for _ in range(terms):
        c = rng.randint(-span, span)
        if not c:
            continue
        mono = {}
        for v in rng.sample(letters, rng.randint(0, 1)):
            mono[v] = 1
        out = out + Poly({tuple(sorted(mono.items())): c})
    return out


def random_ratfun(rng, root, letters):
    """A small rational function vanishing at t_root = 1."""
    letters = sorted(letters)
    num = (Poly.var(root) - Poly.const(1)) * _random_poly(rng, letters)
    den = Poly.const(1)
    if rng.random() < 0.4:
        bump = Poly.var(rng.choice(letters)) - Poly.const(1)
        den = den + bump.scale(rng.choice((-1, 1)))
    return ratfun(num, den)


def random_beta(rng, tails, heads, density=0.6):
    """A random matrix element over the given tail and head labels.

    Row-u entries are kept divisible by t_u - 1, the shape every element
    reachable by the operations has.
    """
    tails = tuple(tails)
    entries = {}
    for u in tails:
        for x in heads:
            if rng.random() < density:
                rf = random_ratfun(rng, u, tails)
                if rf:
                    entries[(u, x)] = rf
    omega = RF_ONE + random_ratfun(rng, rng.choice(sorted(tails)), tails)
    return b_element(tails, heads, omega, entries)
