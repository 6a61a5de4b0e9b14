"""Exact computation of a universal invariant of knotted balloons and hoops.

The layers, bottom up:

* lyndon / freealg / freelie: truncated free associative and free Lie series
  over string letters, with exact rational coefficients.
* cyclic: cyclic words, divergence, and the wheel correction j_u.
* mma: elements pairing head exponents (Lie series) with wheel parts (cyclic
  words), and the operations that glue them.
* beta: the rational reduction of the same operations, whose wheel part
  recovers the Alexander polynomial.
* tangle: text and JSON descriptions of tangles, and their invariants.
* cli: the kbh command line tool.
"""

from .errors import AlgebraError, InputError, KbhError

__version__ = "0.1.0"

__all__ = ["AlgebraError", "InputError", "KbhError", "__version__"]
