"""Exception types shared across the package."""


class PermdiagError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPermutationError(PermdiagError, ValueError):
    """A sequence does not describe a permutation of {1..n}."""


class EmptyPermutationError(InvalidPermutationError):
    pass


class DuplicateValueError(InvalidPermutationError):
    pass


class OutOfRangeError(InvalidPermutationError):
    pass


class InvalidPathError(PermdiagError, ValueError):
    """A step sequence does not describe a Dyck path."""


class UnbalancedPathError(InvalidPathError):
    pass


class BelowAxisError(InvalidPathError):
    pass


class Not321AvoidingError(PermdiagError, ValueError):
    pass


class Not132AvoidingError(PermdiagError, ValueError):
    pass


class DoesNotFitStaircaseError(PermdiagError, ValueError):
    pass


class MalformedMinimaError(PermdiagError, ValueError):
    pass


class UnfillableError(PermdiagError, ValueError):
    pass


class SizeTooLargeError(PermdiagError, ValueError):
    pass


class PreconditionViolatedError(PermdiagError, ValueError):
    pass


class BadArgumentError(PermdiagError, ValueError):
    """An argument is outside the range an operation supports."""
