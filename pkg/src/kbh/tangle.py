"""Tangles as crossing lists with a sewing plan, and their invariants.

A tangle is declared piece by piece.  Each crossing line introduces two
strand pieces, a `strand` line introduces one, and a virtual crossing
introduces two pieces that do not interact.  The plan then sews pieces
end to end: `sew a b c` joins the head of a to the tail of b and calls
the result c.  Whatever is never sewn away remains an open strand.

Text form, one directive per line, `#` starts a comment:

    X+ a b      positive crossing, strand piece a passes over piece b
    X- a b      negative crossing, strand piece a passes over piece b
    V a b       virtual crossing: the pieces do not interact
    strand a    a piece with no crossings
    sew a b c   join piece a then piece b into c

The same data fits in JSON as {"crossings": [{"sign": "+", "over": ...,
"under": ...}], "strands": [...], "plan": [[a, b, c], ...]}.
"""

import re

from .beta import (
    b_crossing,
    b_dm,
    b_merge,
    b_unit_h,
    b_unit_t,
    normalized_omega,
)
from .errors import InputError
from .mma import crossing, dm, merge, unit_h, unit_t

__all__ = [
    "Tangle",
    "parse_tangle",
    "tangle_from_json",
    "tangle_to_json",
    "piece_labels",
    "open_strands",
    "zeta_of_tangle",
    "beta_of_tangle",
    "alexander",
    "render_alexander",
]

_LABEL = re.compile(r"[A-Za-z0-9_]+\Z")


class Tangle:
    """An immutable bag of crossings, bare strands, and the sewing plan."""

    __slots__ = ("crossings", "strands", "plan")

    def __init__(self, crossings, strands, plan):
        self.crossings = tuple(crossings)
        self.strands = tuple(strands)
        self.plan = tuple(plan)

    def __eq__(self, other):
        return (
            isinstance(other, Tangle)
            and self.crossings == other.crossings
            and self.strands == other.strands
            and self.plan == other.plan
        )

    def __repr__(self):
        return "Tangle(%d crossings, %d strands, %d sews)" % (
            len(self.crossings),
            len(self.strands),
            len(self.plan),
        )


def _check_label(label, where):
    if not isinstance(label, str) or not _LABEL.match(label):
        raise InputError(
            "%s: label %r must be letters, digits, or _" % (where, label)
        )
    return label


def piece_labels(t):
    """Every declared piece, in declaration order."""
    out = []
    for _, over, under in t.crossings:
        out.append(over)
        out.append(under)
    out.extend(t.strands)
    return tuple(out)


def _validate(t):
    pieces = piece_labels(t)
    if not pieces:
        raise InputError("the tangle has no strands or crossings")
    seen = set()
    for p in pieces:
        if p in seen:
            raise InputError("piece %r is declared twice" % (p,))
        seen.add(p)
    for _, over, under in t.crossings:
        if over == under:
            raise InputError(
                "crossing %r over itself; a self-crossing needs two pieces"
                % (over,)
            )
    live = set(pieces)
    for i, (a, b, c) in enumerate(t.plan, 1):
        where = "sew step %d" % i
        if a == b:
            raise InputError("%s: cannot sew %r to itself" % (where, a))
        for lbl in (a, b):
            if lbl not in live:
                raise InputError(
                    "%s: %r is not a live strand here" % (where, lbl)
                )
        if c in live - {a, b}:
            raise InputError("%s: label %r is already in use" % (where, c))
        live -= {a, b}
        live.add(c)
    return t


def open_strands(t):
    """The strand labels left after the whole plan runs."""
    live = set(piece_labels(t))
    for a, b, c in t.plan:
        live -= {a, b}
        live.add(c)
    return tuple(sorted(live))


def parse_tangle(text):
    """Parse the line-oriented text form."""
    crossings, strands, plan = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        op, args = parts[0], parts[1:]
        where = "line %d" % lineno

        def need(count):
            if len(args) != count:
                raise InputError(
                    "%s: %s takes %d labels, got %d"
                    % (where, op, count, len(args))
                )
            return [_check_label(a, where) for a in args]

        if op in ("X+", "X-"):
            over, under = need(2)
            crossings.append((1 if op == "X+" else -1, over, under))
        elif op == "V":
            strands.extend(need(2))
        elif op == "strand":
            strands.extend(need(1))
        elif op == "sew":
            plan.append(tuple(need(3)))
        else:
            raise InputError("%s: unknown directive %r" % (where, op))
    return _validate(Tangle(crossings, strands, plan))


def tangle_from_json(data):
    if not isinstance(data, dict):
        raise InputError("expected an object with crossings/strands/plan")
    crossings = []
    for i, item in enumerate(data.get("crossings", []), 1):
        where = "crossing %d" % i
        if not isinstance(item, dict):
            raise InputError("%s: expected an object" % where)
        sign = item.get("sign")
        if sign in ("+", 1):
            sign = 1
        elif sign in ("-", -1):
            sign = -1
        else:
            raise InputError("%s: sign must be '+' or '-'" % where)
        crossings.append(
            (
                sign,
                _check_label(item.get("over"), where),
                _check_label(item.get("under"), where),
            )
        )
    strands = [
        _check_label(s, "strand %d" % i)
        for i, s in enumerate(data.get("strands", []), 1)
    ]
    plan = []
    for i, step in enumerate(data.get("plan", []), 1):
        where = "sew step %d" % i
        if not isinstance(step, list) or len(step) != 3:
            raise InputError("%s: expected [from, then, into]" % where)
        plan.append(tuple(_check_label(s, where) for s in step))
    return _validate(Tangle(crossings, strands, plan))


def tangle_to_json(t):
    return {
        "crossings": [
            {"sign": "+" if sign == 1 else "-", "over": over, "under": under}
            for sign, over, under in t.crossings
        ],
        "strands": list(t.strands),
        "plan": [list(step) for step in t.plan],
    }


def zeta_of_tangle(t, degree):
    """The tree-and-wheel invariant, built crossing by crossing."""
    m = None
    for sign, over, under in t.crossings:
        piece = merge(
            merge(crossing(sign, over, under, degree), unit_t(under, degree)),
            unit_h(over, degree),
        )
        m = piece if m is None else merge(m, piece)
    for s in t.strands:
        piece = merge(unit_t(s, degree), unit_h(s, degree))
        m = piece if m is None else merge(m, piece)
    for a, b, c in t.plan:
        m = dm(m, a, b, c)
    return m


def beta_of_tangle(t):
    """The matrix form of the same invariant."""
    m = None
    for sign, over, under in t.crossings:
        piece = b_merge(
            b_merge(b_crossing(sign, over, under), b_unit_t(under)),
            b_unit_h(over),
        )
        m = piece if m is None else b_merge(m, piece)
    for s in t.strands:
        piece = b_merge(b_unit_t(s), b_unit_h(s))
        m = piece if m is None else b_merge(m, piece)
    for a, b, c in t.plan:
        m = b_dm(m, a, b, c)
    return m


def alexander(t):
    """The Alexander polynomial of a tangle sewn into one open strand,
    as {exponent: coefficient}, symmetric in t -> 1/t and positive at 1."""
    live = open_strands(t)
    if len(live) != 1:
        raise InputError(
            "the alexander polynomial needs one open strand, got %s"
            % (list(live) or "none")
        )
    return normalized_omega(beta_of_tangle(t).omega)


def render_alexander(coeffs):
    """Lay out {exponent: coefficient} as a one-line Laurent polynomial."""
    parts = []
    for e in sorted(coeffs):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            power = "t" if e == 1 else "t^%d" % e
            body = power if abs(c) == 1 else "%d %s" % (abs(c), power)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) or "0"
