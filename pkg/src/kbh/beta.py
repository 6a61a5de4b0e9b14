"""The rational reduction of the tree-and-wheel calculus.

An element here is a matrix of rational functions: one row per tail, one
column per head, plus a scalar omega, everything in variables t_u indexed
by the tails.  Setting every t_u to 1 must give omega = 1 and a zero
matrix; the operations preserve this and the constructor enforces it.

Polynomials are sparse with integer coefficients.  Fractions are kept
reduced by integer content, by their common monomial factor, and by a full
gcd when only one variable is involved; equality never relies on that and
always cross-multiplies.

For a knot presented as a 1-component tangle, the omega of its element is
the Alexander polynomial up to a sign and a power of t, which is what
`normalized_omega` extracts.
"""

from math import gcd

from .errors import AlgebraError, InputError
from .rat import QF

__all__ = [
    "Poly",
    "RatFun",
    "rf_const",
    "rf_var",
    "ratfun",
    "rf_str",
    "parse_ratfun",
    "BetaElement",
    "b_element",
    "b_unit_t",
    "b_unit_h",
    "b_crossing",
    "b_merge",
    "b_t_sigma",
    "b_h_sigma",
    "b_t_eta",
    "b_h_eta",
    "b_tm",
    "b_hm",
    "b_tha",
    "b_dm",
    "unit_equiv",
    "b_to_json",
    "b_from_json",
    "b_render",
    "exp_log_series",
    "omega_log_series",
    "normalized_omega",
]


# ---------------------------------------------------------------- polynomials


class Poly:
    """A sparse integer polynomial in named variables.

    terms maps a monomial to a nonzero integer; a monomial is a tuple of
    (variable, exponent) pairs sorted by variable, exponents >= 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms

    @staticmethod
    def const(n):
        return Poly({(): n} if n else {})

    @staticmethod
    def var(name, power=1):
        return Poly({((name, power),): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        raise TypeError("Poly is not hashable")

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            elif m in out:
                del out[m]
        return Poly(out)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                elif m in out:
                    del out[m]
        return Poly(out)

    def scale(self, n):
        if not n:
            return Poly({})
        return Poly({m: c * n for m, c in self.terms.items()})

    def at_one(self):
        """The integer value with every variable set to 1."""
        return sum(self.terms.values())

    def variables(self):
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def subs(self, mapping):
        """Rename variables (value: new name) or set them to 1 (value: 1)."""
        out = Poly({})
        for m, c in self.terms.items():
            exps = {}
            for v, e in m:
                t = mapping.get(v, v)
                if t == 1:
                    continue
                exps[t] = exps.get(t, 0) + e
            key = tuple(sorted(exps.items()))
            out = out + Poly({key: c})
        return out

    def __repr__(self):
        return "Poly(%s)" % _poly_str(self)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_key(m):
    return (sum(e for _, e in m), m)


def _content(p):
    g = 0
    for c in p.terms.values():
        g = gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _mono_common(p, q):
    """The largest monomial dividing every term of both polynomials."""
    common = None
    for poly in (p, q):
        for m in poly.terms:
            exps = dict(m)
            if common is None:
                common = exps
            else:
                common = {
                    v: min(e, exps[v]) for v, e in common.items() if v in exps
                }
            if not common:
                return ()
    return tuple(sorted((common or {}).items()))


def _mono_divide(p, mono):
    if not mono:
        return p
    drop = dict(mono)
    out = {}
    for m, c in p.terms.items():
        exps = dict(m)
        for v, e in drop.items():
            left = exps[v] - e
            if left:
                exps[v] = left
            else:
                del exps[v]
        out[tuple(sorted(exps.items()))] = c
    return Poly(out)


def _dense(p, var):
    coeffs = []
    for m, c in p.terms.items():
        e = m[0][1] if m else 0
        while len(coeffs) <= e:
            coeffs.append(0)
        coeffs[e] = c
    return coeffs


def _primitive(a):
    while a and not a[-1]:
        a.pop()
    if not a:
        return a
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _prem(a, b):
    """Pseudo-remainder of dense integer polynomial a by b."""
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        if not a[-1]:
            a.pop()
            continue
        shift = len(a) - len(b)
        la = a[-1]
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        while a and not a[-1]:
            a.pop()
    return a


def _gcd_univ(p, q, var):
    a, b = _primitive(_dense(p, var)), _primitive(_dense(q, var))
    while b:
        a, b = b, _primitive(_prem(a, b))
    out = Poly({})
    for e, c in enumerate(a):
        if c:
            key = ((var, e),) if e else ()
            out = out + Poly({key: c})
    return out


def _divide_exact(p, d):
    """Exact division of p by d, in at most one shared variable."""
    if d.terms == {(): 1}:
        return p
    out = Poly({})
    rem = p
    dlead = max(d.terms, key=_mono_key)
    dc = d.terms[dlead]
    while rem:
        m = max(rem.terms, key=_mono_key)
        c = rem.terms[m]
        exps = dict(m)
        for v, e in dlead:
            if exps.get(v, 0) < e:
                raise AlgebraError("inexact polynomial division")
            left = exps[v] - e
            if left:
                exps[v] = left
            else:
                del exps[v]
        if c % dc:
            raise AlgebraError("inexact polynomial division")
        piece = Poly({tuple(sorted(exps.items())): c // dc})
        out = out + piece
        rem = rem - piece * d
    return out


# ----------------------------------------------------------- rational functions


def _fkey(p):
    """A hashable canonical key for a polynomial."""
    return tuple(sorted(p.terms.items()))


def _fpoly(key):
    return Poly(dict(key))


def _fnormalize(p):
    """Split p as scale * primitive, the primitive with a positive lead."""
    c = _content(p)
    lead = max(p.terms, key=_mono_key)
    if p.terms[lead] < 0:
        c = -c
    if c != 1:
        p = Poly({m: v // c for m, v in p.terms.items()})
    return c, p


class RatFun:
    """A fraction of integer polynomials, finite at t = 1.

    The denominator is kept as a positive integer times a multiset of
    primitive polynomial factors.  Denominators only ever arise by
    multiplying earlier ones, so keeping the factors lets later steps
    cancel them by exact trial division instead of needing a full
    multivariate gcd.
    """

    __slots__ = ("num", "dint", "dfac")

    def __init__(self, num, dint, dfac):
        self.num = num
        self.dint = dint
        self.dfac = dfac

    def den_poly(self):
        """The denominator, multiplied out."""
        out = Poly.const(self.dint)
        for key, e in self.dfac:
            f = _fpoly(key)
            for _ in range(e):
                out = out * f
        return out

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        if (
            self.num == other.num
            and self.dint == other.dint
            and self.dfac == other.dfac
        ):
            return True
        a, b = dict(self.dfac), dict(other.dfac)
        left, right = self.num, other.num
        for key in set(a) & set(b):
            drop = min(a[key], b[key])
            a[key] -= drop
            b[key] -= drop
        gi = gcd(self.dint, other.dint)
        left = left.scale(other.dint // gi)
        right = right.scale(self.dint // gi)
        for key, e in b.items():
            f = _fpoly(key)
            for _ in range(e):
                left = left * f
        for key, e in a.items():
            f = _fpoly(key)
            for _ in range(e):
                right = right * f
        return left == right

    def __hash__(self):
        raise TypeError("RatFun is not hashable")

    def __add__(self, other):
        a, b = dict(self.dfac), dict(other.dfac)
        gi = gcd(self.dint, other.dint)
        comp_b = Poly.const(other.dint // gi)
        for key, e in b.items():
            extra = e - min(e, a.get(key, 0))
            f = _fpoly(key)
            for _ in range(extra):
                comp_b = comp_b * f
        comp_a = Poly.const(self.dint // gi)
        for key, e in a.items():
            extra = e - min(e, b.get(key, 0))
            f = _fpoly(key)
            for _ in range(extra):
                comp_a = comp_a * f
        num = self.num * comp_b + other.num * comp_a
        denf = {key: max(a.get(key, 0), b.get(key, 0)) for key in a | b}
        return _ratfun_factored(
            num, self.dint * other.dint // gi, denf.items()
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatFun(-self.num, self.dint, self.dfac)

    def __mul__(self, other):
        denf = dict(self.dfac)
        for key, e in other.dfac:
            denf[key] = denf.get(key, 0) + e
        return _ratfun_factored(
            self.num * other.num, self.dint * other.dint, denf.items()
        )

    def __truediv__(self, other):
        if not other.num:
            raise AlgebraError("division by zero")
        if not other.num.at_one():
            raise AlgebraError("division by a function vanishing at t = 1")
        denf = dict(self.dfac)
        denf[_fkey(other.num)] = denf.get(_fkey(other.num), 0) + 1
        return _ratfun_factored(
            self.num * other.den_poly(), self.dint, denf.items()
        )

    def at_one(self):
        den = self.dint
        for key, e in self.dfac:
            den *= _fpoly(key).at_one() ** e
        return QF(self.num.at_one(), den)

    def variables(self):
        out = set(self.num.variables())
        for key, _ in self.dfac:
            for m, _c in key:
                for v, _e in m:
                    out.add(v)
        return out

    def subs(self, mapping):
        factors = [
            (_fkey(_fpoly(key).subs(mapping)), e) for key, e in self.dfac
        ]
        return _ratfun_factored(self.num.subs(mapping), self.dint, factors)

    def __repr__(self):
        return "RatFun(%s)" % rf_str(self)


def _ratfun_factored(num, dint, factors):
    """Normalize a fraction given by numerator, integer, and den factors."""
    fdict = {}
    for key, e in factors:
        if e <= 0:
            continue
        p = _fpoly(key)
        if not p:
            raise AlgebraError("zero denominator")
        if p.at_one() == 0:
            raise AlgebraError("denominator vanishes at t = 1")
        c, prim = _fnormalize(p)
        dint *= c**e
        if prim.terms != {(): 1}:
            fdict[_fkey(prim)] = fdict.get(_fkey(prim), 0) + e
    if dint < 0:
        num, dint = -num, -dint
    if not num:
        return RatFun(Poly({}), 1, ())
    for key in list(fdict):
        f = _fpoly(key)
        while fdict.get(key, 0) > 0:
            try:
                num = _divide_exact(num, f)
            except AlgebraError:
                break
            fdict[key] -= 1
            if not fdict[key]:
                del fdict[key]
    if fdict:
        allvars = set(num.variables())
        for key in fdict:
            for m, _c in key:
                for v, _e in m:
                    allvars.add(v)
        if len(allvars) == 1:
            var = next(iter(allvars))
            den = Poly.const(1)
            for key, e in fdict.items():
                f = _fpoly(key)
                for _ in range(e):
                    den = den * f
            g = _gcd_univ(num, den, var)
            if g.terms and g.terms not in ({(): 1}, {(): -1}):
                num = _divide_exact(num, g)
                den = _divide_exact(den, g)
                _, prim = _fnormalize(den)
                fdict = (
                    {} if prim.terms == {(): 1} else {_fkey(prim): 1}
                )
    g = gcd(_content(num), dint)
    if g > 1:
        num = Poly({m: c // g for m, c in num.terms.items()})
        dint //= g
    return RatFun(num, dint, tuple(sorted(fdict.items())))


def ratfun(num, den):
    """Build a reduced RatFun from numerator and denominator polynomials."""
    if not den:
        raise AlgebraError("zero denominator")
    return _ratfun_factored(num, 1, ((_fkey(den), 1),))


def rf_const(n):
    return RatFun(Poly.const(n), 1, ())


def rf_var(name):
    return RatFun(Poly.var(name), 1, ())


RF_ZERO = rf_const(0)
RF_ONE = rf_const(1)


def _poly_str(p):
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=_mono_key, reverse=True):
        c = p.terms[m]
        body = "*".join(
            "t_%s" % v if e == 1 else "t_%s^%d" % (v, e) for v, e in m
        )
        if not body:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = "%d*%s" % (abs(c), body)
        if not parts:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append(("- " if c < 0 else "+ ") + text)
    return " ".join(parts)


def rf_str(rf):
    if rf.dint == 1 and not rf.dfac:
        return _poly_str(rf.num)
    return "(%s)/(%s)" % (_poly_str(rf.num), _poly_str(rf.den_poly()))


# A tiny expression parser for the textual form: integers, t_<label>,
# + - * / ^ and parentheses.  Exponents are nonnegative integers.

class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])

    def take_name(self):
        self.pos += 2
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if start == self.pos:
            raise InputError("t_ without a label at position %d" % start)
        return self.text[start : self.pos]


def parse_ratfun(text):
    """Parse the textual form produced by rf_str."""
    if not isinstance(text, str):
        raise InputError("expected a rational-function string, got %r" % (text,))
    sc = _Scanner(text)
    value = _parse_sum(sc)
    if sc.peek():
        raise InputError(
            "unexpected %r at position %d in %r" % (sc.peek(), sc.pos, text)
        )
    return value


def _parse_sum(sc):
    value = _parse_product(sc)
    while True:
        ch = sc.peek()
        if ch == "+":
            sc.pos += 1
            value = value + _parse_product(sc)
        elif ch == "-":
            sc.pos += 1
            value = value - _parse_product(sc)
        else:
            return value


def _parse_product(sc):
    value = _parse_factor(sc)
    while True:
        ch = sc.peek()
        if ch == "*":
            sc.pos += 1
            value = value * _parse_factor(sc)
        elif ch == "/":
            sc.pos += 1
            value = value / _parse_factor(sc)
        else:
            return value


def _parse_factor(sc):
    ch = sc.peek()
    if ch == "-":
        sc.pos += 1
        return -_parse_factor(sc)
    if ch == "+":
        sc.pos += 1
        return _parse_factor(sc)
    if ch == "(":
        sc.pos += 1
        value = _parse_sum(sc)
        if sc.peek() != ")":
            raise InputError("missing ) at position %d" % sc.pos)
        sc.pos += 1
    elif ch.isdigit():
        value = rf_const(sc.take_int())
    elif ch == "t" and sc.text[sc.pos : sc.pos + 2] == "t_":
        value = rf_var(sc.take_name())
    else:
        raise InputError("unexpected %r at position %d" % (ch, sc.pos))
    if sc.peek() == "^":
        sc.pos += 1
        if sc.peek() == "-":
            raise InputError("negative exponents are written as divisions")
        if not sc.peek().isdigit():
            raise InputError("missing exponent at position %d" % sc.pos)
        power = sc.take_int()
        out = RF_ONE
        for _ in range(power):
            out = out * value
        return out
    return value


# ------------------------------------------------------------------- elements


class BetaElement:
    """A matrix of rational functions with a scalar omega."""

    __slots__ = ("tails", "heads", "omega", "entries")

    def __init__(self, tails, heads, omega, entries):
        self.tails = tails
        self.heads = heads
        self.omega = omega
        self.entries = entries

    def entry(self, u, x):
        return self.entries.get((u, x), RF_ZERO)

    def __eq__(self, other):
        if not isinstance(other, BetaElement):
            return NotImplemented
        if (
            self.tails != other.tails
            or self.heads != other.heads
            or self.omega != other.omega
        ):
            return False
        keys = set(self.entries) | set(other.entries)
        return all(
            self.entries.get(k, RF_ZERO) == other.entries.get(k, RF_ZERO)
            for k in keys
        )

    def __hash__(self):
        raise TypeError("BetaElement is not hashable")

    def __repr__(self):
        return "BetaElement(tails=%s, heads=%s)" % (
            sorted(self.tails),
            sorted(self.heads),
        )


def b_element(tails, heads, omega, entries):
    """Validated constructor.

    Labels must line up, omega must be 1 when every t is 1, and each row-u
    entry must vanish at t_u = 1 on its own.  The row condition is what the
    operations actually preserve; it is why deleting an unrelated tail
    commutes with everything.
    """
    tails = frozenset(tails)
    heads = frozenset(heads)
    if omega.at_one() != 1:
        raise AlgebraError("omega must be 1 when every t is 1")
    if omega.variables() - tails:
        raise InputError(
            "omega uses variables %s that are not tails"
            % sorted(omega.variables() - tails)
        )
    clean = {}
    for (u, x), rf in entries.items():
        if u not in tails or x not in heads:
            raise InputError("entry [%r, %r] is off the matrix" % (u, x))
        if rf.variables() - tails:
            raise InputError(
                "entry [%r, %r] uses variables %s that are not tails"
                % (u, x, sorted(rf.variables() - tails))
            )
        if rf.subs({u: 1}):
            raise AlgebraError(
                "entry [%r, %r] must vanish at t_%s = 1" % (u, x, u)
            )
        if rf:
            clean[(u, x)] = rf
    return BetaElement(tails, heads, omega, clean)


def b_unit_t(u):
    return BetaElement(frozenset((u,)), frozenset(), RF_ONE, {})


def b_unit_h(x):
    return BetaElement(frozenset(), frozenset((x,)), RF_ONE, {})


def b_crossing(sign, u, x):
    """The generator: a single entry t_u - 1 (or its inverse counterpart)."""
    if sign == 1:
        entry = ratfun(Poly.var(u) - Poly.const(1), Poly.const(1))
    elif sign == -1:
        entry = ratfun(Poly.const(1) - Poly.var(u), Poly.var(u))
    else:
        raise InputError("crossing sign must be +1 or -1, got %r" % (sign,))
    return BetaElement(
        frozenset((u,)), frozenset((x,)), RF_ONE, {(u, x): entry}
    )


def _check_b_tail(m, u):
    if u not in m.tails:
        raise InputError("no tail %r (have %s)" % (u, sorted(m.tails)))


def _check_b_head(m, x):
    if x not in m.heads:
        raise InputError("no head %r (have %s)" % (x, sorted(m.heads)))


def b_merge(a, b):
    shared = (a.tails & b.tails) | (a.heads & b.heads)
    if shared:
        raise InputError("labels %s appear on both sides" % sorted(shared))
    entries = dict(a.entries)
    entries.update(b.entries)
    return BetaElement(
        a.tails | b.tails, a.heads | b.heads, a.omega * b.omega, entries
    )


def _subs_all(m, mapping, tails, heads, move):
    omega = m.omega.subs(mapping)
    entries = {}
    for (u, x), rf in m.entries.items():
        u2, x2 = move(u, x)
        if u2 is None:
            continue
        rf2 = rf.subs(mapping)
        if not rf2:
            continue
        key = (u2, x2)
        entries[key] = entries[key] + rf2 if key in entries else rf2
    return BetaElement(tails, heads, omega, entries)


def b_t_sigma(m, u, v):
    """Rename tail u (and its variable) to v."""
    _check_b_tail(m, u)
    if v != u and v in m.tails:
        raise InputError("tail label %r is already in use" % (v,))
    if v == u:
        return m
    return _subs_all(
        m,
        {u: v},
        (m.tails - {u}) | {v},
        m.heads,
        lambda r, c: (v if r == u else r, c),
    )


def b_h_sigma(m, x, y):
    _check_b_head(m, x)
    if y != x and y in m.heads:
        raise InputError("head label %r is already in use" % (y,))
    if y == x:
        return m
    entries = {
        ((u, y) if c == x else (u, c)): rf
        for (u, c), rf in m.entries.items()
    }
    return BetaElement(m.tails, (m.heads - {x}) | {y}, m.omega, entries)


def b_t_eta(m, u):
    """Delete row u and set its variable to 1."""
    _check_b_tail(m, u)
    return _subs_all(
        m,
        {u: 1},
        m.tails - {u},
        m.heads,
        lambda r, c: (None, None) if r == u else (r, c),
    )


def b_h_eta(m, x):
    _check_b_head(m, x)
    entries = {
        (u, c): rf for (u, c), rf in m.entries.items() if c != x
    }
    return BetaElement(m.tails, m.heads - {x}, m.omega, entries)


def b_tm(m, u, v, w):
    """Add rows u and v into row w; t_u and t_v both become t_w."""
    _check_b_tail(m, u)
    _check_b_tail(m, v)
    if u == v:
        raise InputError("tm needs two distinct tails, got %r twice" % (u,))
    if w in m.tails - {u, v}:
        raise InputError("tail label %r is already in use" % (w,))
    mapping = {a: w for a in (u, v) if a != w}
    return _subs_all(
        m,
        mapping,
        (m.tails - {u, v}) | {w},
        m.heads,
        lambda r, c: (w if r in (u, v) else r, c),
    )


def b_hm(m, x, y, z):
    """Combine columns x and y into z = x + y + <x> y."""
    _check_b_head(m, x)
    _check_b_head(m, y)
    if x == y:
        raise InputError("hm needs two distinct heads, got %r twice" % (x,))
    if z in m.heads - {x, y}:
        raise InputError("head label %r is already in use" % (z,))
    total_x = RF_ZERO
    for u in m.tails:
        total_x = total_x + m.entry(u, x)
    entries = {}
    for (u, c), rf in m.entries.items():
        if c not in (x, y):
            entries[(u, c)] = rf
    for u in m.tails:
        a = m.entry(u, x)
        b = m.entry(u, y)
        val = a + b + total_x * b
        if val:
            entries[(u, z)] = val
    return BetaElement(m.tails, (m.heads - {x, y}) | {z}, m.omega, entries)


def b_tha(m, u, x):
    """Feed row u through column x."""
    _check_b_tail(m, u)
    _check_b_head(m, x)
    alpha = m.entry(u, x)
    one_plus = RF_ONE + alpha
    total_rest = RF_ZERO
    for v in m.tails:
        if v != u:
            total_rest = total_rest + m.entry(v, x)
    scale_row = RF_ONE + total_rest / one_plus
    entries = {}
    for (v, c), rf in m.entries.items():
        if v == u and c == x:
            val = alpha * scale_row
        elif v == u:
            val = rf * scale_row
        elif c == x:
            val = rf / one_plus
        else:
            val = rf - m.entry(v, x) * m.entry(u, c) / one_plus
        if val:
            entries[(v, c)] = val
    for v in m.tails:
        if v == u:
            continue
        for c in m.heads:
            if c == x or (v, c) in m.entries:
                continue
            gv = m.entry(v, x)
            bc = m.entry(u, c)
            if gv and bc:
                val = -(gv * bc) / one_plus
                if val:
                    entries[(v, c)] = val
    return BetaElement(m.tails, m.heads, m.omega * one_plus, entries)


def b_dm(m, a, b, c):
    """Strand composition: tha, then tm, then hm, on the same labels."""
    for lbl in (a, b):
        if lbl not in m.tails or lbl not in m.heads:
            raise InputError("strand %r needs both a tail and a head" % (lbl,))
    if a == b:
        raise InputError("dm needs two distinct strands, got %r twice" % (a,))
    if c in (m.tails | m.heads) - {a, b}:
        raise InputError("strand label %r is already in use" % (c,))
    out = b_tha(m, a, b)
    out = b_tm(out, a, b, c)
    return b_hm(out, a, b, c)


def unit_equiv(a, b):
    """Equality up to multiplying omega by +-(a monomial in the t's)."""
    if a.tails != b.tails or a.heads != b.heads:
        return False
    keys = set(a.entries) | set(b.entries)
    if any(
        a.entries.get(k, RF_ZERO) != b.entries.get(k, RF_ZERO) for k in keys
    ):
        return False
    p = a.omega.num * b.omega.den_poly()
    q = b.omega.num * a.omega.den_poly()
    p = _mono_divide(p, _mono_common(p, p))
    q = _mono_divide(q, _mono_common(q, q))
    return p == q or p == -q


# ------------------------------------------------------------- serialization


def b_to_json(m):
    entries = {}
    for (u, x), rf in sorted(m.entries.items()):
        entries.setdefault(u, {})[x] = rf_str(rf)
    return {
        "tails": sorted(m.tails),
        "heads": sorted(m.heads),
        "omega": rf_str(m.omega),
        "entries": entries,
    }


def b_from_json(data):
    if not isinstance(data, dict):
        raise InputError("expected an object with tails/heads/omega/entries")
    try:
        tails = data["tails"]
        heads = data["heads"]
        omega = data["omega"]
        entries = data["entries"]
    except KeyError as missing:
        raise InputError("missing field %s" % missing) from None
    for field, val in (("tails", tails), ("heads", heads)):
        if not isinstance(val, list) or not all(
            isinstance(s, str) and s for s in val
        ):
            raise InputError("%s must be a list of labels" % field)
    if not isinstance(entries, dict):
        raise InputError("entries must map tails to {head: value}")
    parsed = {}
    for u, row in entries.items():
        if not isinstance(row, dict):
            raise InputError("entries[%r] must map heads to values" % (u,))
        for x, text in row.items():
            parsed[(u, x)] = parse_ratfun(text)
    try:
        return b_element(tails, heads, parse_ratfun(omega), parsed)
    except AlgebraError as err:
        raise InputError(str(err)) from None


def b_render(m):
    """Human-readable lines."""
    lines = [
        "tails: %s" % (" ".join(sorted(m.tails)) or "(none)"),
        "heads: %s" % (" ".join(sorted(m.heads)) or "(none)"),
        "omega: %s" % rf_str(m.omega),
    ]
    for (u, x) in sorted(m.entries):
        lines.append("entry [%s, %s]: %s" % (u, x, rf_str(m.entries[(u, x)])))
    return lines


# ------------------------------------------------------------ series bridges


def exp_log_series(pairs, degree):
    """log of sum_k c_k e^{k s} as {power: coefficient} up to the degree.

    pairs is an iterable of (integer exponent, exact coefficient) with a
    nonzero coefficient total.  The value at s = 0 is divided out first,
    so the result never has a constant term.
    """
    series = [QF(0)] * (degree + 1)
    for k, c in pairs:
        power = QF(1)
        fact = QF(1)
        for j in range(degree + 1):
            if j:
                fact = fact * QF(j)
                power = power * QF(k)
            series[j] += QF(c) * power / fact
    if not series[0]:
        raise AlgebraError("the series vanishes at s = 0, no log exists")
    scale = series[0]
    series = [c / scale for c in series]
    # d/ds log f = f'/f, integrated term by term
    log = [QF(0)] * (degree + 1)
    deriv = [series[j + 1] * QF(j + 1) for j in range(degree)]
    inv = _series_inverse(series, degree)
    dlog = _series_mul(deriv, inv, degree)
    for j in range(1, degree + 1):
        log[j] = dlog[j - 1] / QF(j)
    return {j: c for j, c in enumerate(log) if c}


def _series_mul(a, b, degree):
    out = [QF(0)] * (degree + 1)
    for i, ca in enumerate(a):
        if not ca or i > degree:
            continue
        for j, cb in enumerate(b):
            if i + j > degree:
                break
            if cb:
                out[i + j] += ca * cb
    return out


def _series_inverse(a, degree):
    if not a[0]:
        raise AlgebraError("no series inverse: constant term is zero")
    out = [QF(0)] * (degree + 1)
    out[0] = QF(1) / a[0]
    for j in range(1, degree + 1):
        acc = QF(0)
        for i in range(1, j + 1):
            if i < len(a) and a[i]:
                acc += a[i] * out[j - i]
        out[j] = -acc / a[0]
    return out


def _poly_exp_pairs(p, var):
    pairs = []
    for m, c in p.terms.items():
        if not m:
            pairs.append((0, c))
        elif len(m) == 1 and m[0][0] == var:
            pairs.append((m[0][1], c))
        else:
            raise AlgebraError("the series bridge needs one variable only")
    return pairs


def omega_log_series(rf, degree):
    """log of a one-variable rf with t -> e^s, as {power >= 1: coefficient}.

    rf must take the value 1 at t = 1, which kills the constant term.
    """
    allvars = rf.variables()
    if len(allvars) > 1:
        raise AlgebraError(
            "the series bridge needs one variable, got %s" % sorted(allvars)
        )
    if rf.at_one() != 1:
        raise AlgebraError("need the value 1 at t = 1, got %s" % rf.at_one())
    var = next(iter(allvars)) if allvars else None
    top = exp_log_series(_poly_exp_pairs(rf.num, var), degree)
    bottom = exp_log_series(_poly_exp_pairs(rf.den_poly(), var), degree)
    out = {}
    for j in range(1, degree + 1):
        c = top.get(j, QF(0)) - bottom.get(j, QF(0))
        if c:
            out[j] = c
    return out


def normalized_omega(rf):
    """Pin down omega as a symmetric Laurent polynomial, positive at t = 1.

    Returns {exponent: int}.  The input must be a unit multiple of an
    actual polynomial (its denominator a monomial up to sign); the output
    is symmetric under t -> 1/t with the exponents centered, which forces
    the overall power of t, and the sign is set by a positive value at 1.
    """
    allvars = rf.variables()
    if len(allvars) > 1:
        raise AlgebraError(
            "normalization needs one variable, got %s" % sorted(allvars)
        )
    den = rf.den_poly()
    if len(den.terms) != 1:
        raise AlgebraError(
            "not a unit multiple of a polynomial: denominator %s"
            % _poly_str(den)
        )
    ((dmono, dcoeff),) = den.terms.items()
    if abs(dcoeff) != 1:
        raise AlgebraError(
            "not a unit multiple of a polynomial: denominator %s"
            % _poly_str(den)
        )
    shift = dmono[0][1] if dmono else 0
    coeffs = {}
    for m, c in rf.num.terms.items():
        e = m[0][1] if m else 0
        coeffs[e - shift] = c * dcoeff
    lo, hi = min(coeffs), max(coeffs)
    if (lo + hi) % 2:
        raise AlgebraError("exponent span is odd, cannot center symmetrically")
    mid = (lo + hi) // 2
    out = {e - mid: c for e, c in coeffs.items()}
    if any(out.get(-e) != c for e, c in out.items()):
        raise AlgebraError("not symmetric under t -> 1/t")
    total = sum(out.values())
    if total < 0:
        out = {e: -c for e, c in out.items()}
    elif total == 0:
        raise AlgebraError("vanishes at t = 1, cannot fix the sign")
    return out
