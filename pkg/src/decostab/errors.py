"""Exception hierarchy.

Every input-contract violation raises a subclass of ValidationError;
the CLI maps ValidationError to exit code 2 and TooManyStatesError to 3.
"""


class DecostabError(Exception):
    pass


class ValidationError(DecostabError):
    pass


class MixedRankError(ValidationError):
    """Leaves of a representation expression disagree on the rank r."""


class InhomogeneousError(ValidationError):
    """The centre acts with more than one degree; carries the degree set."""

    def __init__(self, degrees):
        self.degrees = frozenset(degrees)
        super().__init__(f"inhomogeneous representation, degrees {sorted(self.degrees)}")


class NoSolutionsError(ValidationError):
    """No exponent vector solves the homogenisation equation."""


class IndexOutOfRangeError(ValidationError):
    pass


class NotOrderedError(ValidationError):
    """Weight vector entries are not non-decreasing."""


class NonZeroSumError(ValidationError):
    """Weight vector entries do not sum to zero."""


class LengthMismatchError(ValidationError):
    pass


class EmptySupportError(ValidationError):
    """The declared state support is empty (would encode the zero decoration)."""


class ChiNotInAError(ValidationError):
    pass


class RankOrderError(ValidationError):
    """Filtration ranks are not strictly increasing inside 1..r-1."""


class SigmaNotNormalizedError(ValidationError):
    pass


class NonpositiveDeltaError(ValidationError):
    pass


class NoCriticalTypeError(ValidationError):
    """Vanishing flags match none of the five critical patterns."""


class TooManyStatesError(DecostabError):
    """Subset enumeration exceeded the configured budget."""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"state subset enumeration exceeded budget {limit}")


class SchemaError(ValidationError):
    """JSON document violates a command schema; carries a JSON pointer."""

    def __init__(self, pointer, message):
        self.pointer = pointer
        super().__init__(f"{pointer}: {message}")
