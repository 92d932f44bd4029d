"""Exception types shared across the package."""


class BchKitError(Exception):
    """Base class for all domain errors raised by bchkit."""


# -- field construction / arithmetic ---------------------------------------

class NotPrime(BchKitError):
    pass


class DegreeZero(BchKitError):
    pass


class FieldTooLarge(BchKitError):
    pass


class DoesNotDivide(BchKitError):
    pass


class NotASubfield(BchKitError):
    pass


class DivideByZeroPoly(BchKitError):
    pass


class FieldMismatch(BchKitError):
    pass


# -- modular / coset arithmetic ---------------------------------------------

class NotCoprime(BchKitError):
    pass


class ModulusTooLarge(BchKitError):
    pass


class OutOfRange(BchKitError):
    pass


class TooLargeToMaterialize(BchKitError):
    pass


class BadDivisor(BchKitError):
    pass


class PreconditionViolated(BchKitError):
    pass


# -- closed-form catalogs ----------------------------------------------------

class OutOfStatedRange(BchKitError):
    pass


class DegenerateQ(BchKitError):
    pass


class EvenM(BchKitError):
    pass


class NotALeader(BchKitError):
    pass


class HypothesisViolated(BchKitError):
    pass


class BranchAmbiguity(BchKitError):
    pass


# -- code construction --------------------------------------------------------

class NotNegationClosed(BchKitError):
    pass


class WrongLengthFamily(BchKitError):
    pass


class BudgetExceeded(BchKitError):
    pass
