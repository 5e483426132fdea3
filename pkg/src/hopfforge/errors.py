"""Exception hierarchy shared by every module."""


class HopfForgeError(Exception):
    """Base class for all library errors."""


class FieldMismatch(HopfForgeError):
    pass


class ResidualDegreeTooHigh(HopfForgeError):
    """A factor of degree >= 3 without rational roots was left over."""

    def __init__(self, residual, message=None):
        self.residual = list(residual)
        super().__init__(message or f"irreducible residual of degree {len(self.residual) - 1}: {self.residual}")


class NotARoot(HopfForgeError):
    pass


class NegativePower(HopfForgeError):
    pass


class StepLimitExceeded(HopfForgeError):
    pass


class InvalidParameter(HopfForgeError):
    pass


class AxiomFailure(HopfForgeError):
    def __init__(self, violations):
        self.violations = violations
        super().__init__(f"{len(violations)} Hopf axiom violation(s), first: {violations[0]}")


class WindowTooLarge(HopfForgeError):
    pass


class NotSkewPrimitive(HopfForgeError):
    pass


class ClassificationFailure(HopfForgeError):
    pass


class NoRelation(HopfForgeError):
    pass


class DegenerateF(HopfForgeError):
    pass


class InsufficientData(HopfForgeError):
    pass


class DimensionCap(HopfForgeError):
    pass


class NoWitness(HopfForgeError):
    pass


class ParseError(HopfForgeError):
    def __init__(self, message, pos):
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


class UnknownGenerator(HopfForgeError):
    pass
