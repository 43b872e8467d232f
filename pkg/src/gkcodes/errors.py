"""Exception hierarchy shared by the package."""


class GKCodesError(Exception):
    """Base class for every error raised by gkcodes."""


# finite fields
class NotPrime(GKCodesError, ValueError):
    pass


class DegreeOutOfRange(GKCodesError, ValueError):
    pass


class DivisionByZero(GKCodesError, ZeroDivisionError):
    pass


class FieldMismatch(GKCodesError, TypeError):
    pass


class NotADivisor(GKCodesError, ValueError):
    pass


# curve
class NotPrimePower(GKCodesError, ValueError):
    pass


class PointNotOnCurve(GKCodesError, ValueError):
    pass


class ExponentOutOfRange(GKCodesError, ValueError):
    pass


class PoleAtPoint(GKCodesError, ValueError):
    pass


class InfinityNotEvaluable(GKCodesError, ValueError):
    pass


# semigroups / Riemann-Roch
class NotCoprimeGenerators(GKCodesError, ValueError):
    pass


class OracleViolation(GKCodesError, AssertionError):
    """An internal cross-check failed; this signals a bug, not bad input."""


class DegreeTooLarge(GKCodesError, ValueError):
    pass


# codes / search
class HypothesisFailed(GKCodesError):
    """A hypothesis of the improved distance bound does not hold.

    ``which`` names the hypothesis ("gap", "dimension" or "b-range") and
    ``t`` is the offending offset for the b-range hypothesis.
    """

    def __init__(self, which: str, t: int | None = None, detail: str = ""):
        self.which = which
        self.t = t
        msg = f"hypothesis {which!r} failed"
        if t is not None:
            msg += f" at t={t}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class TooManyCoordinates(GKCodesError, ValueError):
    pass


class DimensionDropMismatch(GKCodesError):
    pass


class TooLarge(GKCodesError, ValueError):
    pass


class SRangeTooLarge(GKCodesError, ValueError):
    pass
