"""Exact rational scalars.

All series coefficients in this package are exact rationals.  gmpy2's mpq is
used when available (it is several times faster than fractions.Fraction);
otherwise we fall back to the stdlib.  Both types hash and compare equal to
each other, accept "p/q" strings, and render back to the same format.
"""

try:
    from gmpy2 import mpq as QF
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as QF

ZERO = QF(0)
ONE = QF(1)


def rat_str(c):
    """Render a rational as "p" or "p/q"."""
    return str(c)


def parse_rat(s):
    """Parse the output of rat_str back into a rational."""
    return QF(s)
