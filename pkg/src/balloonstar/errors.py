"""Exception hierarchy shared by the package."""


class BalloonError(ValueError):
    """Base class for all errors raised by balloonstar."""


class DivisionByNonUnit(BalloonError):
    """Series division by a series whose constant term is (numerically) zero."""


class BranchViolation(BalloonError):
    """Series logarithm requested for a constant term off the principal branch."""


class NonvanishingInner(BalloonError):
    """Composition with an inner series that has a nonzero constant term."""


class NonUnitDerivative(BalloonError):
    """Reversion of a series whose linear coefficient is (numerically) zero."""


class ParamOutOfDisk(BalloonError):
    """A Schwarz/Schur parameter lies outside the closed unit disk."""


class SchwarzViolation(BalloonError):
    """A coefficient prefix fails the Schwarz-function coefficient inequalities."""


class OriginExcluded(BalloonError):
    """The point w = 0 is not in the balloon domain's ambient set."""


class DomainError(BalloonError):
    """Argument outside the open interval where a substitution is defined."""


class InsufficientCoefficients(BalloonError):
    """Coefficient stream too short for the requested determinant."""
