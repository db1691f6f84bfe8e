"""Exception hierarchy shared across the package.

Input problems derive from both :class:`CombnullError` and ``ValueError`` so
callers may catch either.  ``TheoremViolation`` is deliberately *not* an input
error: it fires when an unconditional identity fails, which means the
arithmetic itself is broken and the process should fail loudly.
"""


class CombnullError(Exception):
    """Base class for every error raised by this package."""


class InputError(CombnullError, ValueError):
    """Invalid user-supplied input (maps to CLI exit code 2)."""


class NotPrime(InputError):
    """Requested prime-field modulus is composite or < 2."""


class FieldMismatch(InputError):
    """Two objects live over different fields."""


class ArityMismatch(InputError):
    """Variable counts disagree (polynomial vs. polynomial, grid or point)."""


class SizeMismatch(InputError):
    """Two parallel sequences have different lengths."""


class NotAMember(InputError):
    """An element was expected to belong to a given set and does not."""


class OutOfRange(InputError):
    """A numeric argument lies outside its documented range."""


class BadGridShape(InputError):
    """Grid does not have the shape an operation requires."""


class EmptyInput(InputError):
    """A nonempty collection was required."""


class RequiresDistinctSets(InputError):
    """Operation is only stated for two distinct sets."""


class BadLength(InputError):
    """A sequence has the wrong length for the requested operation."""


class BadInput(InputError):
    """Catch-all for malformed arguments with no more specific class."""


class HypothesisViolated(InputError):
    """Solver input lies outside the hypotheses of the underlying theorem."""


class OddCycle(HypothesisViolated):
    """Cycle selection is only guaranteed for an even number of vertices."""


class BadCount(InputError):
    """A collection has an unusable cardinality (e.g. not 2**n + 1 sets)."""


class MonochromaticInput(InputError):
    """A two-coloring was required but only one color is present."""


class SchemaError(InputError):
    """Malformed structured input (CLI flags, documents, polynomial text)."""


class ResourceLimit(CombnullError):
    """Work refused because it exceeds a configured cap (CLI exit code 3)."""


class GridTooLarge(ResourceLimit):
    """Grid point count exceeds the configured enumeration cap."""


class TheoremViolation(CombnullError):
    """An unconditional identity failed.

    This is an internal assertion, not a user error: every raise names the
    identity that broke so the failure points at the arithmetic bug.
    """
