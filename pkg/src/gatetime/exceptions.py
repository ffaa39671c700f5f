"""Exception hierarchy.

Everything derives from :class:`GateTimeError`, itself a ``ValueError`` so
callers treating bad input generically keep working.
"""


class GateTimeError(ValueError):
    pass


class InvalidInput(GateTimeError):
    pass


class WrongDimension(InvalidInput):
    pass


class NotHermitian(InvalidInput):
    pass


class NotUnitary(InvalidInput):
    pass


class LengthMismatch(InvalidInput):
    pass


class OddN(InvalidInput):
    pass


class InvalidProtocol(InvalidInput):
    pass


class OrderingViolation(GateTimeError):
    """Parameters fall outside the Weyl chamber (or h_x >= h_y >= |h_z| fails)."""


class NumericalFailure(GateTimeError, ArithmeticError):
    pass


class NoConvergence(NumericalFailure):
    pass


class NoCanonicalRepresentative(NumericalFailure):
    pass


class AmbiguousBoundary(GateTimeError):
    """Raised only in strict mode; by default ambiguity is reported as a flag."""


class NotEntangling(GateTimeError):
    pass


class Infeasible(GateTimeError):
    pass
