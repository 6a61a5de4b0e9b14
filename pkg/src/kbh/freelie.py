"""Truncated free Lie series over string letters.

Elements are stored in the Lyndon basis: terms maps a Lyndon word to the
coefficient of its standard bracketing.  Products that land outside the Lie
algebra are detected when projecting back from the word algebra and raised,
never silently dropped.

Three conjugation-flavoured operations act on series by substituting for a
single letter:

* exp_ad(g, x) is e^{ad g}(x), computed by conjugating with exponentials in
  the word algebra.
* conj_c(u, g, x) substitutes u -> e^{ad g}(u) in one shot.
* conj_rc(u, g, x) substitutes u -> U for the unique U with
  U = e^{ad g[u -> U]}(u); it is the inverse of conj_c(u, -g, .) and is
  found by iterating to a fixpoint, which stabilizes within the truncation
  order.  The two differ when g contains u: the one-shot map leaves the
  new copies of u it creates alone, the fixpoint keeps substituting into
  them.
"""

from .errors import AlgebraError
from .freealg import (
    AssocSeries,
    CyclicSeries,
    _merge,
    cyc_substitute,
    cyc_word,
    fa_exp,
    fa_letter,
    fa_log,
    fa_mul,
    fa_substitute,
    fa_zero,
    iota,
    render_word,
)
from .lyndon import expand, lyndon_words, project_lie, standard_factorization

__all__ = [
    "LieSeries",
    "lie_zero",
    "lie_letter",
    "lie_from_terms",
    "lie_from_assoc",
    "bracket",
    "bch",
    "exp_ad",
    "morphism_images",
    "apply_images",
    "apply_morphism",
    "morph_cyclic",
    "conj_c",
    "conj_rc_image",
    "conj_rc",
    "derive",
    "ad_apply",
    "lyndon_words",
    "render_lie",
]


class LieSeries:
    """A truncated free Lie series in Lyndon coordinates."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms, degree):
        self.terms = terms
        self.degree = degree

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, LieSeries)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("LieSeries is not hashable")

    def __add__(self, other):
        _same_degree(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, c)
        return LieSeries(out, self.degree)

    def __sub__(self, other):
        _same_degree(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, -c)
        return LieSeries(out, self.degree)

    def __neg__(self):
        return LieSeries({w: -c for w, c in self.terms.items()}, self.degree)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        if not scalar:
            return LieSeries({}, self.degree)
        return LieSeries({w: c * scalar for w, c in self.terms.items()}, self.degree)

    def letters(self):
        out = set()
        for w in self.terms:
            out.update(w)
        return out

    def __repr__(self):
        return "LieSeries(%s, degree=%d)" % (render_lie(self), self.degree)


def _same_degree(a, b):
    if a.degree != b.degree:
        raise AlgebraError(
            "mixed truncation orders %d and %d" % (a.degree, b.degree)
        )
    return a.degree


def lie_zero(degree):
    return LieSeries({}, degree)


def lie_letter(letter, degree):
    if degree < 1:
        return LieSeries({}, degree)
    return LieSeries({(letter,): 1}, degree)


def lie_from_terms(terms, degree):
    """Build a series from {lyndon word: coefficient}, validating each key."""
    from .lyndon import is_lyndon

    out = {}
    for w, c in terms.items():
        w = tuple(w)
        if not is_lyndon(w):
            raise AlgebraError("%r is not a Lyndon word" % (w,))
        if len(w) > degree:
            raise AlgebraError("word %r exceeds truncation order %d" % (w, degree))
        if c:
            _merge(out, w, c)
    return LieSeries(out, degree)


def lie_from_assoc(a):
    """Project a word series onto the Lyndon basis; raises unless it is Lie."""
    return LieSeries(project_lie(a.terms), a.degree)


def bracket(a, b):
    """[a, b], computed in the word algebra and projected back."""
    _same_degree(a, b)
    x, y = iota(a), iota(b)
    return lie_from_assoc(fa_mul(x, y) - fa_mul(y, x))


def bch(a, b):
    """log(e^a e^b), the truncated Baker-Campbell-Hausdorff series."""
    _same_degree(a, b)
    return lie_from_assoc(fa_log(fa_mul(fa_exp(iota(a)), fa_exp(iota(b)))))


def exp_ad(g, x):
    """e^{ad g}(x) = e^g x e^{-g} in the word algebra, projected back."""
    _same_degree(g, x)
    eg = fa_exp(iota(g))
    einv = fa_exp(iota(-g))
    return lie_from_assoc(fa_mul(fa_mul(eg, iota(x)), einv))


def morphism_images(mapping, degree):
    """Resolve a letter map to word-algebra images.

    Targets may be None (the letter is sent to zero), a letter, or a
    LieSeries.  Identity entries are removed.
    """
    images = {}
    for u, t in mapping.items():
        if isinstance(t, str):
            if t != u:
                images[u] = fa_letter(t, degree)
        elif t is None:
            images[u] = fa_zero(degree)
        else:
            if t.degree != degree:
                raise AlgebraError(
                    "image at order %d for a series at order %d"
                    % (t.degree, degree)
                )
            images[u] = iota(t)
    return images


def apply_images(x, images):
    """Apply resolved morphism images to a Lie series.

    Terms in untouched letters keep their basis coordinates; the rest are
    expanded, substituted, and projected back in one pass.
    """
    if not images:
        return x
    touched = set(images)
    keep = {}
    rest = {}
    for lw, c in x.terms.items():
        if touched.isdisjoint(lw):
            keep[lw] = c
        else:
            rest[lw] = c
    if not rest:
        return LieSeries(keep, x.degree)
    expanded = {}
    for lw, c in rest.items():
        for w, k in expand(lw).items():
            _merge(expanded, w, c * k)
    fa = fa_substitute(AssocSeries(expanded, x.degree), images)
    out = keep
    for lw, c in project_lie(fa.terms).items():
        _merge(out, lw, c)
    return LieSeries(out, x.degree)


def apply_morphism(x, mapping):
    """Apply a letter map (letter -> None | letter | LieSeries) to a Lie series."""
    return apply_images(x, morphism_images(mapping, x.degree))


def morph_cyclic(x, mapping):
    """Apply a letter map (letter -> None | letter | LieSeries) to cyclic words.

    Letter-to-letter maps act by renaming; anything richer opens each touched
    word, substitutes in the word algebra, and closes up again.
    """
    images = morphism_images(mapping, x.degree)
    if not images:
        return x
    simple = {}
    for u, img in images.items():
        if not img.terms:
            simple[u] = None
            continue
        if len(img.terms) == 1:
            ((w, c),) = img.terms.items()
            if len(w) == 1 and c == 1:
                simple[u] = w[0]
                continue
        simple = None
        break
    if simple is None:
        return cyc_substitute(x, images)
    out = {}
    for w, c in x.terms.items():
        if any(simple.get(letter, letter) is None for letter in w):
            continue
        w2 = tuple(simple.get(letter, letter) for letter in w)
        _merge(out, cyc_word(w2), c)
    return CyclicSeries(out, x.degree)


def conj_c(u, g, x):
    """Substitute u -> e^{ad g}(u) in x, in one shot."""
    return apply_morphism(x, {u: exp_ad(g, lie_letter(u, x.degree))})


def conj_rc_image(u, g):
    """The fixpoint U = e^{ad g[u -> U]}(u).

    Each pass feeds the previous iterate back into g; successive iterates
    agree to one degree more, so the loop ends within the truncation order.
    """
    degree = g.degree
    base = lie_letter(u, degree)
    u_in_g = any(u in lw for lw in g.terms)
    cur = base
    for _ in range(degree + 2):
        gcur = apply_morphism(g, {u: cur}) if u_in_g else g
        nxt = exp_ad(gcur, base)
        if nxt == cur:
            return cur
        cur = nxt
    raise AlgebraError("substitution for %r did not stabilize" % (u,))


def conj_rc(u, g, x):
    """Substitute u -> conj_rc_image(u, g) in x; inverse to conj_c(u, -g, .)."""
    return apply_morphism(x, {u: conj_rc_image(u, g)})


def derive(x, u, image_fa):
    """Extend u -> image_fa as a derivation over words.

    x may be an AssocSeries, CyclicSeries, or LieSeries; each occurrence of u
    in a word is replaced by image_fa in turn and the results are summed.
    Cyclic words are opened at their stored rotation, which is harmless
    because a derivation treats every position alike.
    """
    from .freealg import CyclicSeries, cyc_word

    if isinstance(x, LieSeries):
        return lie_from_assoc(derive(iota(x), u, image_fa))
    degree = x.degree
    if image_fa.degree != degree:
        raise AlgebraError(
            "mixed truncation orders %d and %d" % (image_fa.degree, degree)
        )
    cyclic = isinstance(x, CyclicSeries)
    out = {}
    for w, c in x.terms.items():
        room = degree - (len(w) - 1)
        for i, letter in enumerate(w):
            if letter != u:
                continue
            head, tail = w[:i], w[i + 1 :]
            for w2, c2 in image_fa.terms.items():
                if len(w2) > room:
                    continue
                full = head + w2 + tail
                if cyclic:
                    if not full:
                        continue
                    full = cyc_word(full)
                _merge(out, full, c * c2)
    if cyclic:
        return CyclicSeries(out, degree)
    return AssocSeries(out, degree)


def ad_apply(u, g, x):
    """The derivation sending u -> [g, u], applied to x."""
    gu = iota(g)
    ul = fa_letter(u, x.degree)
    image = fa_mul(gu, ul) - fa_mul(ul, gu)
    return derive(x, u, image)


def render_lie(x):
    """Render in bracket notation, e.g. 1/2 [u, [u, v]]."""
    parts = []
    for w, c in sorted(x.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
        text = str(c)
        neg = text.startswith("-")
        mag = text[1:] if neg else text
        word = _bracket_str(w)
        body = word if mag == "1" else mag + " " + word
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _bracket_str(w):
    if len(w) == 1:
        return render_word(w)
    p, q = standard_factorization(w)
    return "[%s, %s]" % (_bracket_str(p), _bracket_str(q))
