"""Exceptions raised by interlacepy.

Every error derives from :class:`InterlaceError`; most also derive from the
built-in exception with the same meaning, so callers catching ``ValueError``
or ``KeyError`` keep working.
"""


class InterlaceError(Exception):
    """Base class of all interlacepy errors."""


class InvalidIndexError(InterlaceError, KeyError):
    """A label is not part of the index set / vertex set / ground set."""

    def __init__(self, label, where="index set"):
        self.label = label
        super().__init__(f"Unknown label {label!r} in {where}")

    def __str__(self):
        return self.args[0]


class PivotNotDefinedError(InterlaceError, ValueError):
    """The principal submatrix indexed by ``subset`` is singular, or the
    requested graph pivot is not on an edge."""

    def __init__(self, subset, reason="principal submatrix is singular"):
        self.subset = tuple(subset)
        super().__init__(f"Pivot on {list(self.subset)} is not defined: {reason}")


class UnsupportedPivotError(InterlaceError, ValueError):
    """Pivot requested on an edge with a looped endpoint."""


class UnsupportedInputError(InterlaceError, ValueError):
    """The operation does not accept this kind of input (e.g. looped graphs)."""


class ResourceLimitError(InterlaceError, RuntimeError):
    """A configured size cap was exceeded.

    :param cap_name: name of the cap as it appears in the config file
    :param cap: value of the cap
    :param partial: partial result computed before the cap was hit, if any
    """

    def __init__(self, cap_name, cap, partial=None):
        self.cap_name = cap_name
        self.cap = cap
        self.partial = partial
        super().__init__(f"Size cap '{cap_name}' = {cap} exceeded")


class HostValidationError(InterlaceError, ValueError):
    """A 4-regular host, two-in two-out digraph or plane graph is malformed."""


class NotInterlacedError(InterlaceError, ValueError):
    """Transposition requested on a pair of non-interlaced vertices."""


class InvalidSystemError(InterlaceError, ValueError):
    """An isotropic system fails isotropy or has the wrong dimension, or a
    vector argument has a forbidden zero entry."""


class UndefinedDistanceError(InterlaceError, ValueError):
    """A set system has no feasible set, so distances are undefined."""

    def __init__(self, message, loop_complemented=()):
        self.loop_complemented = tuple(loop_complemented)
        super().__init__(message)


class NotAMatroidError(InterlaceError, ValueError):
    """Feasible sets are not the bases of a matroid."""


class FormatParseError(InterlaceError, ValueError):
    """Input text does not follow the declared format."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class MismatchError(InterlaceError, AssertionError):
    """Two pipelines, or the two sides of an identity, disagree."""

    def __init__(self, what, left, right):
        self.what = what
        self.left = left
        self.right = right
        super().__init__(f"{what}: {left} != {right}")


class UsageError(InterlaceError, ValueError):
    """A command was given options it cannot run with."""
