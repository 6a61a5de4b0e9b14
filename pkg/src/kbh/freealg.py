"""Truncated free associative series and cyclic words.

An AssocSeries is a finite sum of words (tuples of string letters) with exact
rational coefficients, truncated at a fixed total degree: words longer than
the truncation order are dropped by every operation.  The empty word () holds
the constant term.  A CyclicSeries is the same thing for words read around a
circle: each term is stored on the lexicographically smallest rotation of its
word, and there is no constant term.

Coefficients only need ring arithmetic (+, -, *, ==, bool), so polynomial
coefficients can be threaded through the same code paths when an operation is
computed with a formal parameter.
"""

from .errors import AlgebraError
from .rat import QF, ONE


def _merge(acc, w, c):
    nc = acc.get(w)
    if nc is None:
        acc[w] = c
    else:
        nc = nc + c
        if nc:
            acc[w] = nc
        else:
            del acc[w]


class AssocSeries:
    """A truncated series in the free associative algebra.

    terms maps words to nonzero coefficients, degree is the truncation order.
    Instances are treated as immutable; operations return fresh ones.
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms, degree):
        self.terms = terms
        self.degree = degree

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, AssocSeries)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("AssocSeries is not hashable")

    def __add__(self, other):
        _same_degree(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, c)
        return AssocSeries(out, self.degree)

    def __sub__(self, other):
        _same_degree(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, -c)
        return AssocSeries(out, self.degree)

    def __neg__(self):
        return AssocSeries({w: -c for w, c in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, AssocSeries):
            return fa_mul(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        if not scalar:
            return AssocSeries({}, self.degree)
        return AssocSeries(
            {w: c * scalar for w, c in self.terms.items()}, self.degree
        )

    def constant(self):
        return self.terms.get((), 0)

    def letters(self):
        """The set of letters appearing in any term."""
        out = set()
        for w in self.terms:
            out.update(w)
        return out

    def __repr__(self):
        return "AssocSeries(%s, degree=%d)" % (render_assoc(self), self.degree)


class CyclicSeries:
    """A truncated series of cyclic words.

    Every key is the smallest rotation of its word and has length >= 1.
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms, degree):
        self.terms = terms
        self.degree = degree

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, CyclicSeries)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("CyclicSeries is not hashable")

    def __add__(self, other):
        _same_degree(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, c)
        return CyclicSeries(out, self.degree)

    def __sub__(self, other):
        _same_degree(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _merge(out, w, -c)
        return CyclicSeries(out, self.degree)

    def __neg__(self):
        return CyclicSeries({w: -c for w, c in self.terms.items()}, self.degree)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        if not scalar:
            return CyclicSeries({}, self.degree)
        return CyclicSeries(
            {w: c * scalar for w, c in self.terms.items()}, self.degree
        )

    def letters(self):
        out = set()
        for w in self.terms:
            out.update(w)
        return out

    def __repr__(self):
        return "CyclicSeries(%s, degree=%d)" % (render_cyclic(self), self.degree)


def _same_degree(a, b):
    if a.degree != b.degree:
        raise AlgebraError(
            "mixed truncation orders %d and %d" % (a.degree, b.degree)
        )
    return a.degree


def fa_zero(degree):
    return AssocSeries({}, degree)


def fa_one(degree):
    return AssocSeries({(): ONE}, degree)


def fa_letter(letter, degree):
    if degree < 1:
        return AssocSeries({}, degree)
    return AssocSeries({(letter,): ONE}, degree)


def fa_from_terms(terms, degree):
    """Build a series from a {word: coefficient} dict, validating and pruning."""
    out = {}
    for w, c in terms.items():
        w = tuple(w)
        if len(w) > degree:
            raise AlgebraError("word %r exceeds truncation order %d" % (w, degree))
        if c:
            _merge(out, w, c)
    return AssocSeries(out, degree)


def _buckets(terms):
    out = {}
    for w, c in terms.items():
        out.setdefault(len(w), {})[w] = c
    return out


def fa_mul(a, b):
    """Concatenation product, truncated."""
    degree = _same_degree(a, b)
    out = {}
    for la, ta in _buckets(a.terms).items():
        for lb, tb in _buckets(b.terms).items():
            if la + lb > degree:
                continue
            for w1, c1 in ta.items():
                for w2, c2 in tb.items():
                    _merge(out, w1 + w2, c1 * c2)
    return AssocSeries(out, a.degree)


def fa_exp(a):
    """exp of a series with zero constant term."""
    if a.constant():
        raise AlgebraError("exp needs a vanishing constant term")
    # Horner: 1 + a(1 + a/2(1 + ... (1 + a/D)))
    out = fa_one(a.degree)
    for k in range(a.degree, 0, -1):
        out = fa_one(a.degree) + fa_mul(a, out).scale(QF(1, k))
    return out


def fa_log(a):
    """log of a series with constant term exactly 1."""
    if a.constant() != 1:
        raise AlgebraError("log needs constant term 1")
    x = AssocSeries(
        {w: c for w, c in a.terms.items() if w}, a.degree
    )
    out = fa_zero(a.degree)
    power = fa_one(a.degree)
    for k in range(1, a.degree + 1):
        power = fa_mul(power, x)
        if not power:
            break
        out = out + power.scale(QF(-1 if k % 2 == 0 else 1, k))
    return out


def iota(lie):
    """Expand a Lie series into the associative algebra.

    Accepts anything with a {lyndon word: coefficient} `terms` dict and a
    `degree`; each basis bracket becomes its commutator expansion.
    """
    from .lyndon import expand

    out = {}
    for lw, c in lie.terms.items():
        for w, k in expand(lw).items():
            _merge(out, w, c * k)
    return AssocSeries(out, lie.degree)


def cyc_word(w):
    """The lexicographically smallest rotation of a word."""
    n = len(w)
    if n <= 1:
        return w
    doubled = w + w
    return min(doubled[i : i + n] for i in range(n))


def tr(a):
    """Close a series of words into cyclic words, dropping the constant term."""
    out = {}
    for w, c in a.terms.items():
        if not w:
            continue
        _merge(out, cyc_word(w), c)
    return CyclicSeries(out, a.degree)


def cw_zero(degree):
    return CyclicSeries({}, degree)


def cw_from_terms(terms, degree):
    out = {}
    for w, c in terms.items():
        w = tuple(w)
        if not w:
            raise AlgebraError("cyclic words have no constant term")
        if len(w) > degree:
            raise AlgebraError("word %r exceeds truncation order %d" % (w, degree))
        if c:
            _merge(out, cyc_word(w), c)
    return CyclicSeries(out, degree)


def cw_reduce(a):
    """Project to the quotient where single-letter cyclic words vanish."""
    return CyclicSeries(
        {w: c for w, c in a.terms.items() if len(w) > 1}, a.degree
    )


def fa_substitute(a, images):
    """Substitute letters by series, extended multiplicatively.

    images maps a letter to an AssocSeries at the same truncation order;
    unmapped letters stay themselves.  Words built only from unmapped letters
    pass through unchanged.
    """
    degree = a.degree
    for s in images.values():
        if s.degree != degree:
            raise AlgebraError(
                "substitution image at order %d into a series at order %d"
                % (s.degree, degree)
            )
    touched = set(images)
    out = {}
    cache = {}
    for w, c in a.terms.items():
        if touched.isdisjoint(w):
            _merge(out, w, c)
            continue
        prod = cache.get(w)
        if prod is None:
            prod = fa_one(degree)
            for letter in w:
                img = images.get(letter)
                if img is None:
                    img = fa_letter(letter, degree)
                prod = fa_mul(prod, img)
                if not prod:
                    break
            cache[w] = prod
        for w2, c2 in prod.terms.items():
            _merge(out, w2, c * c2)
    return AssocSeries(out, degree)


def cyc_substitute(a, images):
    """Substitute letters by series inside cyclic words.

    Each cyclic word is opened at its stored rotation, substituted as an
    ordinary word, and closed up again; the result does not depend on the
    rotation chosen because closing up forgets it.
    """
    degree = a.degree
    touched = set(images)
    out = {}
    for w, c in a.terms.items():
        if touched.isdisjoint(w):
            _merge(out, w, c)
            continue
        opened = fa_substitute(AssocSeries({w: ONE}, degree), images)
        for w2, c2 in tr(opened).terms.items():
            _merge(out, w2, c * c2)
    return CyclicSeries(out, degree)


def cyc_rename(a, mapping):
    """Rename letters in cyclic words (letter -> letter), re-canonicalizing."""
    out = {}
    for w, c in a.terms.items():
        w2 = tuple(mapping.get(letter, letter) for letter in w)
        _merge(out, cyc_word(w2), c)
    return CyclicSeries(out, a.degree)


def abelianize(a):
    """Collapse a cyclic series to {length: total coefficient}."""
    out = {}
    for w, c in a.terms.items():
        k = len(w)
        nc = out.get(k, 0) + c
        if nc:
            out[k] = nc
        elif k in out:
            del out[k]
    return out


def render_word(w):
    if not w:
        return "1"
    if all(len(letter) == 1 for letter in w):
        return "".join(w)
    return ".".join(w)


def _render_terms(items, wrap):
    parts = []
    for w, c in items:
        text = str(c)
        neg = text.startswith("-")
        mag = text[1:] if neg else text
        word = wrap(render_word(w)) if w else ""
        if not word:
            body = mag
        elif mag == "1":
            body = word
        else:
            body = mag + " " + word
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _sorted_terms(terms):
    return sorted(terms.items(), key=lambda kv: (len(kv[0]), kv[0]))


def render_assoc(a):
    return _render_terms(_sorted_terms(a.terms), lambda s: s)


def render_cyclic(a):
    return _render_terms(_sorted_terms(a.terms), lambda s: "(%s)" % s)
