"""Exception types shared across the package."""


class CurveformError(Exception):
    pass


class DivisionByZero(CurveformError, ZeroDivisionError):
    pass


class ParameterOffCurve(CurveformError, ValueError):
    """Raised when (q, p) does not satisfy p^2 = q^2 + q^3; carries the residual."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"point is off the curve, residual p^2 - q^2 - q^3 = {residual}")


class ArityMismatch(CurveformError, ValueError):
    pass


class ParseError(CurveformError, ValueError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        super().__init__(f"{message} at position {position}"
                         + (f" (expected one of: {', '.join(self.expected)})" if expected else ""))


class FuelExhausted(CurveformError, RuntimeError):
    """Reduction ran out of fuel; carries the partially reduced element and step count."""

    def __init__(self, partial, steps):
        self.partial = partial
        self.steps = steps
        super().__init__(f"reduction fuel exhausted after {steps} steps")


class NonOrientable(CurveformError, RuntimeError):
    """Completion found a difference polynomial with no admissible left-hand side."""

    def __init__(self, difference):
        self.difference = difference
        super().__init__(f"no monomial of {difference} is eligible as a rule lhs")


class LimitExceeded(CurveformError, RuntimeError):
    pass


class DiamondFailure(CurveformError, RuntimeError):
    def __init__(self, report):
        self.report = report
        super().__init__("diamond lemma check failed: unresolved ambiguities remain")
