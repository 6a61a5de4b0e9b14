"""Divergence and wheel corrections for substitutions on a single letter.

sigma_u is the double of the free Lie algebra: it sends a letter v to the
scalar delta_{uv} and extends to bracketings by

    sigma_u([a, b]) = iota(a) sigma_u(b) - iota(b) sigma_u(a).

div_u(g) closes u . sigma_u(g) into cyclic words.  j_u(g) integrates the
divergence along the flow of g:

    j_u(g) = integral_0^1 div_u(g || RC_u^{s g}) || C_u^{-s g} ds,

computed exactly by threading a formal polynomial in s through the same
series arithmetic and integrating monomials at the end.  j_u returns plain
cyclic words including single-letter ones; quotienting those away is left to
the caller.
"""

from .errors import AlgebraError
from .freealg import CyclicSeries, _merge, cw_zero, cyc_word
from .freelie import (
    LieSeries,
    apply_morphism,
    conj_rc_image,
    exp_ad,
    lie_letter,
    morph_cyclic,
)
from .lyndon import expand, standard_factorization
from .rat import QF

# sigma tables: (lyndon word, letter) -> {word: int}
_SIGMA = {}


class _SPoly:
    """A polynomial in the integration parameter s, used as a coefficient.

    Supports just enough ring arithmetic to flow through the series code:
    +, -, * with other _SPoly instances or plain scalars, truthiness, and
    equality.
    """

    __slots__ = ("p",)

    def __init__(self, p):
        self.p = p

    def __bool__(self):
        return bool(self.p)

    def __eq__(self, other):
        if isinstance(other, _SPoly):
            return self.p == other.p
        if not other:
            return not self.p
        return self.p == {0: other}

    def __hash__(self):
        raise TypeError("_SPoly is not hashable")

    def __add__(self, other):
        if not isinstance(other, _SPoly):
            other = _SPoly({0: other} if other else {})
        out = dict(self.p)
        for k, v in other.p.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        return _SPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return _SPoly({k: -v for k, v in self.p.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SPoly):
            out = {}
            for k1, v1 in self.p.items():
                for k2, v2 in other.p.items():
                    k = k1 + k2
                    nv = out.get(k, 0) + v1 * v2
                    if nv:
                        out[k] = nv
                    elif k in out:
                        del out[k]
            return _SPoly(out)
        if not other:
            return _SPoly({})
        return _SPoly({k: v * other for k, v in self.p.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self.p:
            return "0"
        return " + ".join(
            "%s*s^%d" % (v, k) for k, v in sorted(self.p.items())
        )

    def definite_integral(self):
        """integral_0^1 of the polynomial."""
        total = 0
        for k, v in self.p.items():
            total = total + v * QF(1, k + 1)
        return total


class SPolynomial:
    """A polynomial in s whose coefficients are cyclic series."""

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs, degree):
        self.coeffs = coeffs
        self.degree = degree

    def s_degree(self):
        return max(self.coeffs, default=0)

    def integrate(self):
        """Evaluate integral_0^1 . ds, collapsing to a single cyclic series."""
        out = {}
        for k, series in self.coeffs.items():
            factor = QF(1, k + 1)
            for w, c in series.terms.items():
                _merge(out, w, c * factor)
        return CyclicSeries(out, self.degree)


def _sigma_table(w, u):
    got = _SIGMA.get((w, u))
    if got is not None:
        return got
    if len(w) == 1:
        out = {(): 1} if w[0] == u else {}
    else:
        p, q = standard_factorization(w)
        out = {}
        for w1, c1 in expand(p).items():
            for w2, c2 in _sigma_table(q, u).items():
                k = w1 + w2
                nc = out.get(k, 0) + c1 * c2
                if nc:
                    out[k] = nc
                elif k in out:
                    del out[k]
        for w1, c1 in expand(q).items():
            for w2, c2 in _sigma_table(p, u).items():
                k = w1 + w2
                nc = out.get(k, 0) - c1 * c2
                if nc:
                    out[k] = nc
                elif k in out:
                    del out[k]
    _SIGMA[(w, u)] = out
    return out


def sigma_u(u, g):
    """sigma_u applied to a Lie series, as a word series (may have a constant)."""
    from .freealg import AssocSeries

    out = {}
    for lw, c in g.terms.items():
        for w, k in _sigma_table(lw, u).items():
            _merge(out, w, c * k)
    return AssocSeries(out, g.degree)


def div_u(u, g):
    """Cyclic closure of u . sigma_u(g); degree-preserving."""
    out = {}
    for lw, c in g.terms.items():
        for w, k in _sigma_table(lw, u).items():
            _merge(out, cyc_word((u,) + w), c * k)
    return CyclicSeries(out, g.degree)


def _with_s(g):
    return LieSeries(
        {w: _SPoly({1: c}) for w, c in g.terms.items()}, g.degree
    )


def s_split(x):
    """Sort a cyclic series with polynomial coefficients by powers of s."""
    buckets = {}
    for w, c in x.terms.items():
        if isinstance(c, _SPoly):
            items = c.p.items()
        else:
            items = ((0, c),)
        for k, v in items:
            _merge(buckets.setdefault(k, {}), w, v)
    return SPolynomial(
        {k: CyclicSeries(t, x.degree) for k, t in buckets.items() if t},
        x.degree,
    )


def j_integrand(u, g):
    """div_u(g || RC_u^{s g}) || C_u^{-s g} as a polynomial in s."""
    degree = g.degree
    gs = _with_s(g)
    image = conj_rc_image(u, gs)
    moved = apply_morphism(g, {u: image})
    d = div_u(u, moved)
    back = exp_ad(-gs, lie_letter(u, degree))
    return s_split(morph_cyclic(d, {u: back}))


def j_u(u, g):
    """The wheel correction for pushing the tail u through e^g.

    Returns an unreduced cyclic series; single-letter words are kept.
    """
    if not g:
        return cw_zero(g.degree)
    return j_integrand(u, g).integrate()
