"""Exception types shared across the package."""


class HosoyaError(Exception):
    """Base class for all errors raised by this package."""


class SizeLimitError(HosoyaError):
    """An exponential routine was asked to work beyond its vertex cap."""


class UnsupportedStructureError(HosoyaError):
    """The input graph does not have the shape an operation requires."""


class NotApplicableError(HosoyaError):
    """A rewrite rule was applied to a spec that lacks its pattern."""


class ParseError(HosoyaError, ValueError):
    """Malformed text literal.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
