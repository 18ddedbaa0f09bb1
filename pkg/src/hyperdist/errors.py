"""Exception hierarchy shared by every hyperdist module."""


class HyperdistError(Exception):
    pass


class ParseError(HyperdistError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class ValidationError(HyperdistError):
    pass


class InvalidSeries(ValidationError):
    """Lower parameter is a nonpositive integer, or parameters are not concrete."""


class DomainError(HyperdistError):
    pass


class PoleError(DomainError):
    pass


class UnboundSymbol(HyperdistError):
    pass


class DivergentSeries(HyperdistError):
    pass


class PrecisionExhausted(HyperdistError):
    pass


class InvalidSpec(HyperdistError):
    pass


class NotIntegerDifference(HyperdistError):
    pass


class VanishingPochhammer(HyperdistError):
    pass


class DuplicateParameter(HyperdistError):
    pass


class SideConditionViolated(HyperdistError):
    pass


class PoleInRHS(HyperdistError):
    pass


class ConstraintViolated(HyperdistError):
    pass


class EvaluationError(HyperdistError):
    def __init__(self, side, cause):
        self.side = side
        self.cause = cause
        super().__init__(f"{side}: {type(cause).__name__}: {cause}")
