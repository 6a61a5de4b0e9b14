"""Shared builders for the test suite."""

from hypothesis import strategies as st

from kbh.freelie import lie_from_terms
from kbh.lyndon import lyndon_words
from kbh.rat import QF


def W(s):
    """A word from a string of single-character letters."""
    return tuple(s)


def coefficient_weights(nodes, power):
    """Exact weights w with sum_k w_k p(nodes[k]) = [x^power] p
    for every polynomial p of degree < len(nodes)."""
    n = len(nodes)
    rows = [
        [QF(x) ** j for x in nodes]
        + [QF(1) if j == power else QF(0)]
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


def lie_strategy(letters, degree, span=3):
    """Hypothesis strategy for small Lie series over the given letters."""
    basis = lyndon_words(letters, degree)
    coeff = st.integers(-span, span)
    return st.builds(
        lambda cs: lie_from_terms(
            {w: QF(c) for w, c in zip(basis, cs) if c}, degree
        ),
        st.tuples(*([coeff] * len(basis))),
    )
