"""Byte-role bookkeeping shared by all emitters.

Every emitter can produce an :class:`Emitted` value: the text plus the role
of each piece that went into it. The composition analyzer relies on these
roles instead of guessing them back from the text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum


class Role(IntEnum):
    # lower value wins ties during token attribution
    KEY = 0
    PUNCTUATION = 1
    STRUCTURE_INDENT = 2
    WHITESPACE = 3
    VALUE = 4

    @property
    def label(self) -> str:
        return self.name.lower()


FORMATS = ("json", "yaml", "onto")


@dataclass(frozen=True)
class Emitted:
    format: str
    pieces: tuple
    text: str = field(init=False, repr=False)

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "text", "".join(t for t, _ in self.pieces))

    def byte_roles(self) -> bytes:
        """One role code per UTF-8 byte of :attr:`text`."""
        out = bytearray()
        for text, role in self.pieces:
            n = len(text) if text.isascii() else len(text.encode("utf-8"))
            out += bytes((role,)) * n
        return bytes(out)


class PieceWriter:
    """Accumulates ``(text, role)`` pieces, merging neighbours with equal roles."""

    def __init__(self):
        self._pieces: list = []

    def add(self, text: str, role: Role) -> None:
        if not text:
            return
        if self._pieces and self._pieces[-1][1] is role:
            self._pieces[-1] = (self._pieces[-1][0] + text, role)
        else:
            self._pieces.append((text, role))

    def done(self, fmt: str) -> Emitted:
        return Emitted(fmt, self._pieces)
