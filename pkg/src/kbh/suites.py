"""Identity sweeps shared by the self-test command and the test suite.

Every check runs seeded random examples through one family of identities
and returns a list of failure descriptions; an empty list means the family
holds on every sample.  The acceptance tests call these with fixed seeds
and the degrees and sample counts they need, the kbh selftest command calls
them with friendlier defaults.
"""

import random

from .beta import (
    b_crossing,
    b_h_eta,
    b_h_sigma,
    b_hm,
    b_merge,
    b_t_eta,
    b_t_sigma,
    b_tha,
    b_tm,
    b_unit_h,
    b_unit_t,
    unit_equiv,
)
from .cyclic import div_u, j_integrand, j_u
from .freealg import cw_zero
from .freelie import (
    ad_apply,
    apply_morphism,
    bch,
    bracket,
    conj_rc,
    exp_ad,
    lie_letter,
    lie_zero,
    morph_cyclic,
)
from .mma import (
    crossing,
    h_eta,
    h_sigma,
    hm,
    merge,
    t_eta,
    t_sigma,
    tha,
    tm,
    unit_h,
    unit_t,
)
from .randgen import random_beta, random_lie, random_mma
from .rat import QF

__all__ = [
    "check_mma_axioms",
    "check_generator_relations",
    "check_j_identities",
    "check_div_identities",
    "check_beta_axioms",
    "coefficient_weights",
    "all_checks",
]


def coefficient_weights(nodes, power):
    """Exact weights w with sum_k w_k p(nodes[k]) = [x^power] p
    for every polynomial p of degree < len(nodes)."""
    n = len(nodes)
    rows = [
        [QF(x) ** j for x in nodes] + [QF(1) if j == power else QF(0)]
        for j in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [v / pv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def c_push(u, g, x):
    """x || C_u^{-g}: substitute u -> e^{-ad g}(u) in a cyclic series."""
    return morph_cyclic(x, {u: exp_ad(-g, lie_letter(u, x.degree))})


def check_mma_axioms(degree=4, samples=20, seed=0):
    """The meta-monoid-action axioms, on random elements."""
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        note = lambda name: failures.append("%s (sample %d)" % (name, i))
        m = random_mma(rng, "uvw", "xyz", degree)

        if hm(hm(m, "x", "y", "x"), "x", "z", "x") != hm(
            hm(m, "y", "z", "y"), "x", "y", "x"
        ):
            note("hm associativity")
        if tm(tm(m, "u", "v", "u"), "u", "w", "u") != tm(
            tm(m, "v", "w", "v"), "u", "v", "u"
        ):
            note("tm associativity")
        if tm(m, "u", "v", "t") != tm(m, "v", "u", "t"):
            note("tm symmetry")
        if tha(tha(m, "u", "x"), "v", "y") != tha(tha(m, "v", "y"), "u", "x"):
            note("tha tha commute")
        if tha(tm(m, "u", "v", "u"), "u", "x") != tm(
            tha(tha(m, "u", "x"), "v", "x"), "u", "v", "u"
        ):
            note("tail action")
        if tha(hm(m, "x", "y", "x"), "u", "x") != hm(
            tha(tha(m, "u", "x"), "u", "y"), "x", "y", "x"
        ):
            note("head action")

        if tm(merge(m, unit_t("p", degree)), "p", "v", "s") != t_sigma(
            m, "v", "s"
        ) or tm(merge(m, unit_t("p", degree)), "v", "p", "s") != t_sigma(
            m, "v", "s"
        ):
            note("tail unit")
        if hm(merge(m, unit_h("p", degree)), "p", "y", "s") != h_sigma(
            m, "y", "s"
        ) or hm(merge(m, unit_h("p", degree)), "y", "p", "s") != h_sigma(
            m, "y", "s"
        ):
            note("head unit")

        if t_sigma(t_sigma(m, "u", "p"), "p", "q") != t_sigma(m, "u", "q"):
            note("t_sigma composes")
        if h_sigma(h_sigma(m, "x", "p"), "p", "q") != h_sigma(m, "x", "q"):
            note("h_sigma composes")
        if h_sigma(hm(m, "x", "y", "x"), "x", "q") != hm(m, "x", "y", "q"):
            note("hm then rename")
        if t_eta(t_sigma(m, "u", "p"), "p") != t_eta(m, "u"):
            note("rename then delete")

        if tha(t_eta(m, "w"), "u", "x") != t_eta(tha(m, "u", "x"), "w"):
            note("tha commutes with t_eta on a distinct tail")
        if tha(h_eta(m, "z"), "u", "x") != h_eta(tha(m, "u", "x"), "z"):
            note("tha commutes with h_eta on a distinct head")
        if hm(tm(m, "u", "v", "u"), "x", "y", "x") != tm(
            hm(m, "x", "y", "x"), "u", "v", "u"
        ):
            note("tm commutes with hm")

        m2 = random_mma(rng, "pq", "rs", degree)
        if merge(m, m2) != merge(m2, m):
            note("merge symmetry")
        m3 = random_mma(rng, "ab", "cd", degree)
        if merge(merge(m, m2), m3) != merge(m, merge(m2, m3)):
            note("merge associativity")
        if merge(hm(m, "x", "y", "x"), m2) != hm(merge(m, m2), "x", "y", "x"):
            note("merge commutes with hm")
        if merge(tha(m, "u", "x"), m2) != tha(merge(m, m2), "u", "x"):
            note("merge commutes with tha")
    return failures


def check_generator_relations(degree=4, seed=0):
    """The defining relations, evaluated on generator values."""
    failures = []
    rng = random.Random(seed)

    for sign in (1, -1):
        r = crossing(sign, "u", "x", degree)
        if t_sigma(h_sigma(r, "x", "y"), "u", "v") != crossing(
            sign, "v", "y", degree
        ):
            failures.append("relabelling (sign %+d)" % sign)
        if h_eta(r, "x") != unit_t("u", degree):
            failures.append("cutting (sign %+d)" % sign)
        if t_eta(r, "u") != unit_h("x", degree):
            failures.append("puncturing (sign %+d)" % sign)
        if tha(r, "u", "x") != r:
            failures.append("framing independence (sign %+d)" % sign)

    pair = merge(crossing(1, "u", "x", degree), crossing(-1, "v", "y", degree))
    if hm(tm(pair, "u", "v", "w"), "x", "y", "z") != merge(
        unit_t("w", degree), unit_h("z", degree)
    ):
        failures.append("inverse pair collapses")

    for s1 in (1, -1):
        for s2 in (1, -1):
            lhs = merge(
                merge(crossing(s1, "u", "x", degree), crossing(s2, "v", "y", degree)),
                crossing(s2, "w", "z", degree),
            )
            lhs = tha(hm(tm(lhs, "v", "w", "v"), "x", "y", "x"), "u", "z")
            rhs = merge(
                merge(crossing(s2, "v", "x", degree), crossing(s2, "w", "z", degree)),
                crossing(s1, "u", "y", degree),
            )
            rhs = hm(tm(rhs, "v", "w", "v"), "x", "y", "x")
            if lhs != rhs:
                failures.append("conjugation (signs %+d %+d)" % (s1, s2))

    # the positive-signs conjugation relation, step by step
    u, v = lie_letter("u", degree), lie_letter("v", degree)
    lhs = merge(
        merge(crossing(1, "u", "x", degree), crossing(1, "v", "y", degree)),
        crossing(1, "w", "z", degree),
    )
    lhs = hm(tm(lhs, "v", "w", "v"), "x", "y", "x")
    if lhs.lam["x"] != bch(u, v) or lhs.lam["z"] != v:
        failures.append("conjugation intermediate value")
    moved = tha(lhs, "u", "z")
    if moved.lam["x"] != bch(exp_ad(v, u), v) or moved.lam["x"] != bch(v, u):
        failures.append("conjugation final value")

    m = random_mma(rng, "uv", "xy", degree)
    if tm(m, "u", "v", "w") != tm(m, "v", "u", "w"):
        failures.append("tail commutativity")
    return failures


def check_j_identities(degree=4, samples=10, seed=0):
    """The three coupling identities for j_u, its linearization, and the
    degree bound on the integrand."""
    failures = []
    rng = random.Random(seed)

    if j_u("u", lie_zero(degree)) != cw_zero(degree):
        failures.append("j of zero")
    if j_u("u", lie_letter("v", degree)):
        failures.append("j of a foreign letter")
    if j_u("u", lie_letter("u", degree)).terms != {("u",): 1}:
        failures.append("j of the letter itself")

    weights = coefficient_weights(list(range(degree + 1)), 1)
    for i in range(samples):
        a = random_lie(rng, "uv", degree)
        b = random_lie(rng, "uv", degree)

        lhs = j_u("u", bch(a, b))
        rhs = j_u("u", a) + c_push("u", a, j_u("u", conj_rc("u", a, b)))
        if lhs != rhs:
            failures.append("j of bch (sample %d)" % i)

        lhs = j_u("u", a) - c_push("v", b, j_u("u", conj_rc("v", b, a)))
        rhs = j_u("v", b) - c_push("u", a, j_u("v", conj_rc("u", a, b)))
        if lhs != rhs:
            failures.append("j exchange (sample %d)" % i)

        tmerge = {"u": "w", "v": "w"}
        lhs = j_u("w", apply_morphism(a, tmerge))
        inner = j_u("u", a) + c_push("u", a, j_u("v", conj_rc("u", a, a)))
        if lhs != morph_cyclic(inner, tmerge):
            failures.append("j of merged tails (sample %d)" % i)

        acc = cw_zero(degree)
        for k, wgt in enumerate(weights):
            acc = acc + j_u("u", a.scale(QF(k))).scale(wgt)
        if acc != div_u("u", a):
            failures.append("j linearizes to div (sample %d)" % i)

        for power, series in j_integrand("u", a).coeffs.items():
            if any(len(w) <= power for w in series.terms):
                failures.append("integrand degree bound (sample %d)" % i)
                break
    return failures


def check_div_identities(degree=4, samples=10, seed=0):
    """The cocycle property of div and its behaviour under tail merges."""
    failures = []
    rng = random.Random(seed)
    for i in range(samples):
        a = random_lie(rng, "uv", degree)
        b = random_lie(rng, "uv", degree)

        for u, v in (("u", "v"), ("u", "u")):
            lhs = ad_apply(v, b, div_u(u, a)) - ad_apply(u, a, div_u(v, b))
            rhs = div_u(u, ad_apply(v, b, a)) - div_u(v, ad_apply(u, a, b))
            if u == v:
                rhs = rhs + div_u(u, bracket(a, b))
            if lhs != rhs:
                failures.append(
                    "div cocycle, tails %s %s (sample %d)" % (u, v, i)
                )

        tmerge = {"u": "w", "v": "w"}
        lhs = div_u("w", apply_morphism(a, tmerge))
        rhs = morph_cyclic(div_u("u", a), tmerge) + morph_cyclic(
            div_u("v", a), tmerge
        )
        if lhs != rhs:
            failures.append("div of merged tails (sample %d)" % i)
    return failures


def _beta_state_errors(m, where):
    """The shape every element keeps: omega is 1 when every t is 1, and a
    row-u entry vanishes at t_u = 1 on its own."""
    failures = []
    if m.omega.at_one() != 1:
        failures.append("omega of %s is not 1 at t = 1" % where)
    for (u, x), rf in m.entries.items():
        if rf.subs({u: 1}):
            failures.append("entry [%s, %s] of %s at t_%s = 1" % (u, x, where, u))
        if rf.variables() - m.tails:
            failures.append("entry [%s, %s] of %s uses foreign t" % (u, x, where))
    if m.omega.variables() - m.tails:
        failures.append("omega of %s uses foreign t" % where)
    return failures


def check_beta_axioms(samples=20, seed=0):
    """The same axioms and defining relations, in the matrix calculus."""
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        note = lambda name: failures.append("%s (sample %d)" % (name, i))
        m = random_beta(rng, ("u", "v", "w"), ("x", "y", "z"))

        if b_hm(b_hm(m, "x", "y", "x"), "x", "z", "x") != b_hm(
            b_hm(m, "y", "z", "y"), "x", "y", "x"
        ):
            note("hm associativity")
        if b_tm(b_tm(m, "u", "v", "u"), "u", "w", "u") != b_tm(
            b_tm(m, "v", "w", "v"), "u", "v", "u"
        ):
            note("tm associativity")
        if b_tm(m, "u", "v", "t") != b_tm(m, "v", "u", "t"):
            note("tm symmetry")
        if b_tha(b_tha(m, "u", "x"), "v", "y") != b_tha(
            b_tha(m, "v", "y"), "u", "x"
        ):
            note("tha tha commute")
        if b_tha(b_tm(m, "u", "v", "u"), "u", "x") != b_tm(
            b_tha(b_tha(m, "u", "x"), "v", "x"), "u", "v", "u"
        ):
            note("tail action")
        if b_tha(b_hm(m, "x", "y", "x"), "u", "x") != b_hm(
            b_tha(b_tha(m, "u", "x"), "u", "y"), "x", "y", "x"
        ):
            note("head action")

        if b_tm(b_merge(m, b_unit_t("p")), "p", "v", "s") != b_t_sigma(
            m, "v", "s"
        ) or b_tm(b_merge(m, b_unit_t("p")), "v", "p", "s") != b_t_sigma(
            m, "v", "s"
        ):
            note("tail unit")
        if b_hm(b_merge(m, b_unit_h("p")), "p", "y", "s") != b_h_sigma(
            m, "y", "s"
        ) or b_hm(b_merge(m, b_unit_h("p")), "y", "p", "s") != b_h_sigma(
            m, "y", "s"
        ):
            note("head unit")

        if b_t_sigma(b_t_sigma(m, "u", "p"), "p", "q") != b_t_sigma(m, "u", "q"):
            note("t_sigma composes")
        if b_h_sigma(b_h_sigma(m, "x", "p"), "p", "q") != b_h_sigma(m, "x", "q"):
            note("h_sigma composes")
        if b_h_sigma(b_hm(m, "x", "y", "x"), "x", "q") != b_hm(m, "x", "y", "q"):
            note("hm then rename")
        if b_t_eta(b_t_sigma(m, "u", "p"), "p") != b_t_eta(m, "u"):
            note("rename then delete")

        if b_tha(b_t_eta(m, "w"), "u", "x") != b_t_eta(b_tha(m, "u", "x"), "w"):
            note("tha commutes with t_eta on a distinct tail")
        if b_tha(b_h_eta(m, "z"), "u", "x") != b_h_eta(b_tha(m, "u", "x"), "z"):
            note("tha commutes with h_eta on a distinct head")
        if b_hm(b_tm(m, "u", "v", "u"), "x", "y", "x") != b_tm(
            b_hm(m, "x", "y", "x"), "u", "v", "u"
        ):
            note("tm commutes with hm")

        m2 = random_beta(rng, ("p", "q"), ("r", "s"))
        if b_merge(m, m2) != b_merge(m2, m):
            note("merge symmetry")
        if b_merge(b_tha(m, "u", "x"), m2) != b_tha(b_merge(m, m2), "u", "x"):
            note("merge commutes with tha")

        failures.extend(_beta_state_errors(b_tha(m, "u", "x"), "tha sample %d" % i))
        failures.extend(
            _beta_state_errors(b_tm(m, "u", "v", "t"), "tm sample %d" % i)
        )
        failures.extend(
            _beta_state_errors(b_hm(m, "x", "y", "s"), "hm sample %d" % i)
        )
        failures.extend(
            _beta_state_errors(b_t_eta(m, "u"), "t_eta sample %d" % i)
        )

    for sign in (1, -1):
        r = b_crossing(sign, "u", "x")
        if b_t_sigma(b_h_sigma(r, "x", "y"), "u", "v") != b_crossing(sign, "v", "y"):
            failures.append("relabelling (sign %+d)" % sign)
        if b_h_eta(r, "x") != b_unit_t("u"):
            failures.append("cutting (sign %+d)" % sign)
        if b_t_eta(r, "u") != b_unit_h("x"):
            failures.append("puncturing (sign %+d)" % sign)
        if not unit_equiv(b_tha(r, "u", "x"), r):
            failures.append("framing independence (sign %+d)" % sign)

    pair = b_merge(b_crossing(1, "u", "x"), b_crossing(-1, "v", "y"))
    if b_hm(b_tm(pair, "u", "v", "w"), "x", "y", "z") != b_merge(
        b_unit_t("w"), b_unit_h("z")
    ):
        failures.append("inverse pair collapses")

    for s1 in (1, -1):
        for s2 in (1, -1):
            lhs = b_merge(
                b_merge(b_crossing(s1, "u", "x"), b_crossing(s2, "v", "y")),
                b_crossing(s2, "w", "z"),
            )
            lhs = b_tha(b_hm(b_tm(lhs, "v", "w", "v"), "x", "y", "x"), "u", "z")
            rhs = b_merge(
                b_merge(b_crossing(s2, "v", "x"), b_crossing(s2, "w", "z")),
                b_crossing(s1, "u", "y"),
            )
            rhs = b_hm(b_tm(rhs, "v", "w", "v"), "x", "y", "x")
            if lhs != rhs:
                failures.append("conjugation (signs %+d %+d)" % (s1, s2))
    return failures


def all_checks(degree=4, samples=10, seed=0):
    """Every suite, as (name, failures) pairs."""
    return [
        ("mma axioms", check_mma_axioms(degree, samples, seed)),
        ("generator relations", check_generator_relations(degree, seed)),
        ("j identities", check_j_identities(degree, samples, seed)),
        ("div identities", check_div_identities(degree, samples, seed)),
        ("beta axioms", check_beta_axioms(samples, seed)),
    ]
