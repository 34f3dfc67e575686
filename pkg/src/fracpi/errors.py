"""Exceptions raised by the type checkers, evaluators and parser."""


class PiError(Exception):
    pass


class TypeMismatch(PiError):
    """Two types that must agree (e.g. the middle of a sequence) do not."""

    def __init__(self, location, expected, found):
        self.location = location
        self.expected = expected
        self.found = found
        super().__init__(f"{location}: expected {expected}, found {found}")


class PointMismatch(PiError):
    """Pointed types agree in shape but disagree in the value in focus.

    This is the static rejection that stands in for the runtime check of
    the fractional language.
    """

    def __init__(self, expected, found, location="composition"):
        self.location = location
        self.expected = expected
        self.found = found
        super().__init__(
            f"{location}: expected focus {expected}, found focus {found}")


class IllTyped(PiError):
    """A value was supplied where it does not inhabit the required type."""


class ParseError(PiError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{line}:{column}: {message}")
