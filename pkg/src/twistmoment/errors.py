"""Exception types shared across the package."""


class TwistMomentError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotInvertible(TwistMomentError):
    """Modular inverse requested for a residue that is not a unit."""


class ModulusMismatch(TwistMomentError):
    """Twisted exponential sum needs the phase denominator to divide the modulus."""


class PoleAtOne(TwistMomentError):
    """Evaluation requested at (or too close to) the simple pole at s = 1."""


class PoleAtNonpositiveInteger(TwistMomentError):
    """log-Gamma requested at a pole of the Gamma function."""


class TermAtZero(TwistMomentError):
    """A shifted zeta sum contains a term 1/0 that the character does not kill."""


class NonPositiveArgument(TwistMomentError):
    """Argument must be a positive real."""


class InvalidParams(TwistMomentError):
    """Moment parameters violate a documented invariant."""


class PoleOnPath(TwistMomentError):
    """Contour evaluation would cross a pole (c = q in the twisted zeta factor)."""


class ContourTruncationError(TwistMomentError):
    """Residue series of the contour T-sum did not converge within its term cap."""
