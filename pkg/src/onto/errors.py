"""Exception types raised across the package."""

from __future__ import annotations

PARSE_ERROR_KINDS = (
    "BadIndentation",
    "BadEntityHeader",
    "BadFieldName",
    "CountMismatch",
    "UnterminatedBacktick",
    "TabCharacter",
    "DuplicateField",
    "EmptyGroup",
    "StrayContent",
)


class OntoError(ValueError):
    """Base class for every error this package raises on bad input."""


class ParseError(OntoError):
    """Malformed ONTO text. ``line`` and ``column`` are 1-based."""

    def __init__(self, kind: str, line: int, column: int, message: str):
        if kind not in PARSE_ERROR_KINDS:
            raise ValueError(f"unknown parse error kind {kind!r}")
        self.kind = kind
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{kind} at line {line}, column {column}: {message}")


class HeterogeneousRecords(OntoError):
    def __init__(self, index: int, path: str, message: str):
        self.index = index
        self.path = path
        super().__init__(f"record {index}, field {path!r}: {message}")


class UnrepresentableValue(OntoError):
    """A value has no ONTO spelling (NaN, one-element array, newline in a string, ...)."""


class MalformedRankFile(OntoError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"rank file line {line}: {message}")


class UnknownProvenance(OntoError):
    """Byte roles were requested for text that did not come from our emitters."""
