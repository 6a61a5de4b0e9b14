"""Tree-and-wheel elements and the operations that glue them.

An element over tail labels T and head labels H holds one Lie series
lam[x] in the letters T for every head x, plus a single series omega of
cyclic words in T with no single-letter terms.  Heads never appear as
letters; tails never index lam.  The same label may be used for a tail
and a head at once (that is how strands are encoded), the two roles stay
independent.

Operations come in pairs acting on one side only:

* tm / t_sigma / t_eta act on tails, renaming letters inside every
  series;
* hm / h_sigma / h_eta act on heads, hm composing exponents by bch;
* tha pushes tail u through head x: omega picks up the wheel correction
  j_u(lam[x]) and every series is rewritten through the fixpoint
  substitution for u.

dm is the strand composition tha, then tm, then hm on the same pair of
labels.
"""

from .cyclic import j_u
from .errors import AlgebraError, InputError
from .freealg import cw_from_terms, cw_reduce, cw_zero, cyc_substitute, render_cyclic
from .freelie import (
    apply_images,
    apply_morphism,
    bch,
    conj_rc_image,
    lie_from_terms,
    lie_letter,
    lie_zero,
    morph_cyclic,
    morphism_images,
    render_lie,
)
from .rat import parse_rat, rat_str

__all__ = [
    "MMAElement",
    "element",
    "unit_t",
    "unit_h",
    "crossing",
    "merge",
    "t_sigma",
    "h_sigma",
    "t_eta",
    "h_eta",
    "tm",
    "hm",
    "tha",
    "dm",
    "to_json",
    "from_json",
    "render",
]


class MMAElement:
    """One invariant value: tails, head exponents, and a wheel part."""

    __slots__ = ("tails", "lam", "omega", "degree")

    def __init__(self, tails, lam, omega, degree):
        self.tails = tails
        self.lam = lam
        self.omega = omega
        self.degree = degree

    @property
    def heads(self):
        return frozenset(self.lam)

    def __eq__(self, other):
        return (
            isinstance(other, MMAElement)
            and self.degree == other.degree
            and self.tails == other.tails
            and self.lam == other.lam
            and self.omega == other.omega
        )

    def __hash__(self):
        raise TypeError("MMAElement is not hashable")

    def __repr__(self):
        return "MMAElement(tails=%s, heads=%s, degree=%d)" % (
            sorted(self.tails),
            sorted(self.lam),
            self.degree,
        )


def element(tails, lam, omega, degree):
    """Validated constructor; omega is reduced on the way in."""
    tails = frozenset(tails)
    for x, s in lam.items():
        if s.degree != degree:
            raise AlgebraError(
                "head %r holds a series at order %d, element is at %d"
                % (x, s.degree, degree)
            )
        stray = s.letters() - tails
        if stray:
            raise InputError(
                "head %r uses letters %s that are not tails"
                % (x, sorted(stray))
            )
    if omega.degree != degree:
        raise AlgebraError(
            "wheel part at order %d, element is at %d"
            % (omega.degree, degree)
        )
    stray = omega.letters() - tails
    if stray:
        raise InputError(
            "wheel part uses letters %s that are not tails" % sorted(stray)
        )
    return MMAElement(tails, dict(lam), cw_reduce(omega), degree)


def unit_t(u, degree):
    """A bare tail: no heads, no wheels."""
    return MMAElement(frozenset((u,)), {}, cw_zero(degree), degree)


def unit_h(x, degree):
    """A bare head with zero exponent."""
    return MMAElement(frozenset(), {x: lie_zero(degree)}, cw_zero(degree), degree)


def crossing(sign, u, x, degree):
    """The generator with one tail u and one head x carrying x -> sign * u."""
    if sign not in (1, -1):
        raise InputError("crossing sign must be +1 or -1, got %r" % (sign,))
    lam = {x: lie_letter(u, degree).scale(sign)}
    return MMAElement(frozenset((u,)), lam, cw_zero(degree), degree)


def _check_tail(m, u):
    if u not in m.tails:
        raise InputError("no tail %r (have %s)" % (u, sorted(m.tails)))


def _check_head(m, x):
    if x not in m.lam:
        raise InputError("no head %r (have %s)" % (x, sorted(m.lam)))


def merge(a, b):
    """Disjoint union; wheel parts add."""
    if a.degree != b.degree:
        raise AlgebraError(
            "mixed truncation orders %d and %d" % (a.degree, b.degree)
        )
    shared_t = a.tails & b.tails
    if shared_t:
        raise InputError("tails %s appear on both sides" % sorted(shared_t))
    shared_h = frozenset(a.lam) & frozenset(b.lam)
    if shared_h:
        raise InputError("heads %s appear on both sides" % sorted(shared_h))
    lam = dict(a.lam)
    lam.update(b.lam)
    return MMAElement(a.tails | b.tails, lam, a.omega + b.omega, a.degree)


def _rename_tails(m, mapping, new_tails):
    lam = {x: apply_morphism(s, mapping) for x, s in m.lam.items()}
    return MMAElement(new_tails, lam, morph_cyclic(m.omega, mapping), m.degree)


def t_sigma(m, u, v):
    """Rename tail u to v."""
    _check_tail(m, u)
    if v != u and v in m.tails:
        raise InputError("tail label %r is already in use" % (v,))
    if v == u:
        return m
    return _rename_tails(m, {u: v}, (m.tails - {u}) | {v})


def h_sigma(m, x, y):
    """Rename head x to y."""
    _check_head(m, x)
    if y != x and y in m.lam:
        raise InputError("head label %r is already in use" % (y,))
    if y == x:
        return m
    lam = dict(m.lam)
    lam[y] = lam.pop(x)
    return MMAElement(m.tails, lam, m.omega, m.degree)


def t_eta(m, u):
    """Delete tail u; every term that mentions it dies."""
    _check_tail(m, u)
    return _rename_tails(m, {u: None}, m.tails - {u})


def h_eta(m, x):
    """Delete head x."""
    _check_head(m, x)
    lam = dict(m.lam)
    del lam[x]
    return MMAElement(m.tails, lam, m.omega, m.degree)


def tm(m, u, v, w):
    """Merge tails u and v into w (w may be u or v, or fresh)."""
    _check_tail(m, u)
    _check_tail(m, v)
    if u == v:
        raise InputError("tm needs two distinct tails, got %r twice" % (u,))
    if w in m.tails - {u, v}:
        raise InputError("tail label %r is already in use" % (w,))
    mapping = {a: w for a in (u, v) if a != w}
    return _rename_tails(m, mapping, (m.tails - {u, v}) | {w})


def hm(m, x, y, z):
    """Merge heads x and y into z, composing exponents left to right."""
    _check_head(m, x)
    _check_head(m, y)
    if x == y:
        raise InputError("hm needs two distinct heads, got %r twice" % (x,))
    if z in frozenset(m.lam) - {x, y}:
        raise InputError("head label %r is already in use" % (z,))
    lam = dict(m.lam)
    a = lam.pop(x)
    b = lam.pop(y)
    lam[z] = bch(a, b)
    return MMAElement(m.tails, lam, m.omega, m.degree)


def tha(m, u, x):
    """Let head x act on tail u.

    The wheel part gains j_u(lam[x]); then every series, the new wheels
    included, is rewritten by the fixpoint substitution for u.
    """
    _check_tail(m, u)
    _check_head(m, x)
    lx = m.lam[x]
    if not lx:
        return m
    omega = cw_reduce(m.omega + j_u(u, lx))
    image = conj_rc_image(u, lx)
    images = morphism_images({u: image}, m.degree)
    if not images:
        return MMAElement(m.tails, dict(m.lam), omega, m.degree)
    lam = {h: apply_images(s, images) for h, s in m.lam.items()}
    if u in omega.letters():
        omega = cw_reduce(cyc_substitute(omega, images))
    return MMAElement(m.tails, lam, omega, m.degree)


def dm(m, a, b, c):
    """Compose strand a with strand b into strand c: tha, then tm, then hm."""
    for lbl in (a, b):
        if lbl not in m.tails or lbl not in m.lam:
            raise InputError(
                "strand %r needs both a tail and a head" % (lbl,)
            )
    if a == b:
        raise InputError("dm needs two distinct strands, got %r twice" % (a,))
    if c in (m.tails | frozenset(m.lam)) - {a, b}:
        raise InputError("strand label %r is already in use" % (c,))
    out = tha(m, a, b)
    out = tm(out, a, b, c)
    return hm(out, a, b, c)


def to_json(m):
    """A plain-dict form with deterministic ordering."""
    return {
        "degree": m.degree,
        "tails": sorted(m.tails),
        "heads": {
            x: _terms_json(m.lam[x].terms) for x in sorted(m.lam)
        },
        "wheels": _terms_json(m.omega.terms),
    }


def _terms_json(terms):
    return [
        [rat_str(c), list(w)]
        for w, c in sorted(terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]


def _terms_from_json(items, what):
    out = {}
    for pair in items:
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise InputError("%s entries must be [coefficient, word] pairs" % what)
        c, w = pair
        if not (isinstance(w, (list, tuple)) and all(isinstance(s, str) for s in w)):
            raise InputError("%s words must be lists of letter strings" % what)
        try:
            coeff = parse_rat(c)
        except (ValueError, ZeroDivisionError, TypeError):
            raise InputError("bad coefficient %r in %s" % (c, what)) from None
        key = tuple(w)
        out[key] = out.get(key, 0) + coeff
    return out


def from_json(data):
    """Rebuild an element from the to_json form."""
    if not isinstance(data, dict):
        raise InputError("expected an object with tails/heads/wheels/degree")
    try:
        degree = data["degree"]
        tails = data["tails"]
        heads = data["heads"]
        wheels = data["wheels"]
    except KeyError as missing:
        raise InputError("missing field %s" % missing) from None
    if not isinstance(degree, int) or degree < 1:
        raise InputError("degree must be a positive integer")
    if not isinstance(tails, list) or not all(isinstance(t, str) for t in tails):
        raise InputError("tails must be a list of labels")
    if not isinstance(heads, dict):
        raise InputError("heads must map labels to term lists")
    lam = {}
    for x, items in heads.items():
        try:
            lam[x] = lie_from_terms(_terms_from_json(items, "head %r" % x), degree)
        except AlgebraError as err:
            raise InputError("head %r: %s" % (x, err)) from None
    try:
        omega = cw_from_terms(_terms_from_json(wheels, "wheels"), degree)
    except AlgebraError as err:
        raise InputError("wheels: %s" % err) from None
    return element(tails, lam, omega, degree)


def render(m, show_degree=None, wheels_only=False):
    """Human-readable lines, truncated past show_degree when given."""

    def cut(terms):
        if show_degree is None:
            return terms
        return {w: c for w, c in terms.items() if len(w) <= show_degree}

    lines = []
    if not wheels_only:
        lines.append("tails: %s" % (" ".join(sorted(m.tails)) or "(none)"))
        for x in sorted(m.lam):
            s = m.lam[x]
            shown = type(s)(cut(s.terms), s.degree)
            lines.append("head %s: %s" % (x, render_lie(shown)))
    om = m.omega
    shown = type(om)(cut(om.terms), om.degree)
    lines.append("wheels: %s" % render_cyclic(shown))
    return lines
