"""Exception types shared across the package."""

from __future__ import annotations


class Tft2dError(Exception):
    """Base class for every error raised by this package."""


class ScalarFormatError(Tft2dError, ValueError):
    def __init__(self, text: str):
        super().__init__(f"malformed scalar literal {text!r}")
        self.text = text


class NotHermitian(Tft2dError, ValueError):
    pass


class KindMismatch(Tft2dError, ValueError):
    pass


class InvalidAlgebra(Tft2dError, ValueError):
    def __init__(self, report):
        super().__init__(f"invalid algebra: {report}")
        self.report = report


class InvalidFrobenius(Tft2dError, ValueError):
    def __init__(self, report):
        super().__init__(f"invalid Frobenius structure: {report}")
        self.report = report


class NotEven(Tft2dError, ValueError):
    pass


class InvalidTrivialization(Tft2dError, ValueError):
    def __init__(self, report):
        super().__init__(f"invalid trivialization: {report}")
        self.report = report


class KindPayloadMismatch(Tft2dError, ValueError):
    pass


class ValidationFailed(Tft2dError, ValueError):
    def __init__(self, report):
        super().__init__(f"validation failed: {report}")
        self.report = report


class UntaggedReality(Tft2dError, ValueError):
    pass


class IllDefinedOnCocenter(Tft2dError, ValueError):
    pass


class UnsupportedKind(Tft2dError, ValueError):
    pass


class OutOfRange(Tft2dError, ValueError):
    pass


class UnsupportedTwoGroup(Tft2dError, ValueError):
    pass


class InputSyntaxError(Tft2dError, ValueError):
    """Malformed JSON text, located by 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"syntax error at line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class SchemaError(Tft2dError, ValueError):
    def __init__(self, field: str, message: str = ""):
        detail = f": {message}" if message else ""
        super().__init__(f"schema error in field {field!r}{detail}")
        self.field = field
