"""Error types shared across the package."""


class KbhError(Exception):
    """Base class for all errors raised by this package."""


class InputError(KbhError):
    """Malformed user input: files, labels, JSON payloads."""


class AlgebraError(KbhError):
    """An algebraic precondition failed (bad constant term, non-Lie residue, ...)."""
