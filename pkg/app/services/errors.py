# app/services/errors.py
"""Exception hierarchy shared by every engine module.

Routers map EngineError to HTTP 400 (GuardError to 413); the CLI maps it to exit code 2.
"""


class EngineError(ValueError):
    pass


class DivisionByZeroError(EngineError, ZeroDivisionError):
    pass


class PoleError(EngineError):
    pass


class SizeMismatchError(EngineError):
    pass


class IndexRangeError(EngineError):
    pass


class NotRefinementError(EngineError):
    pass


class ExpressionSyntaxError(EngineError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GuardError(EngineError):
    pass


class ConstructionError(EngineError):
    pass


class InvalidLabelError(EngineError):
    pass


def check_same_n(a: int, b: int) -> None:
    if a != b:
        raise SizeMismatchError(f"size mismatch: {a} != {b}")
