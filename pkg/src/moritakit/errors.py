"""Exception hierarchy shared by every subpackage.

The CLI maps the three families onto exit codes:
``ValidationError`` -> 1, ``OracleDisagreement``/``PropertyViolation`` -> 2,
``LimitExceeded`` -> 3.
"""


class MoritaKitError(Exception):
    """Base class for all library errors."""


class ValidationError(MoritaKitError):
    """Input data violates an axiom; ``witness`` names the offending data."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# categories
class MissingComposite(ValidationError):
    pass


class NonAssociative(ValidationError):
    pass


class BadIdentity(ValidationError):
    pass


class UnknownName(ValidationError):
    pass


class NotIdempotent(ValidationError):
    pass


class NotAFunctor(ValidationError):
    pass


# simplicial sets
class BadParameters(ValidationError):
    pass


class IllFormed(ValidationError):
    pass


class NotSimplicial(ValidationError):
    pass


# operads
class NotClosed(ValidationError):
    pass


class NotEquivariant(ValidationError):
    pass


class BadUnit(ValidationError):
    pass


class NotAnOperadMap(ValidationError):
    pass


class BadTree(ValidationError):
    pass


class BadAlgebra(ValidationError):
    pass


# theories / bar constructions
class IndexOutOfRange(ValidationError):
    pass


class BoundTooSmall(MoritaKitError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LimitExceeded(MoritaKitError):
    """An enumeration produced more candidates than allowed."""


class OracleDisagreement(MoritaKitError):
    """Two independent routes disagree. Always an implementation bug."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PropertyViolation(MoritaKitError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
