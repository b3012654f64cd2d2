"""Split a document's token count into keys / punctuation / values / indentation / whitespace.

Byte roles come from the emitter that produced the text (see
:mod:`onto.roles`); a token is charged to the role owning most of its
bytes, ties going to the lower :class:`~onto.roles.Role` value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownProvenance
from .roles import FORMATS, Emitted, Role
from .tokenizer import TokenizerModel

CATEGORIES = tuple(r.label for r in Role)


def classify_bytes(fmt: str, text) -> bytes:
    """Per-byte role codes (``Role`` values) for emitter output ``text``."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if not isinstance(text, Emitted):
        raise UnknownProvenance(
            "byte roles are only known for text produced by this package's emitters"
        )
    if text.format != fmt:
        raise UnknownProvenance(f"text was emitted as {text.format}, not {fmt}")
    return text.byte_roles()


@dataclass(frozen=True)
class CompositionReport:
    format: str
    keys: int
    punctuation: int
    values: int
    structure_indent: int
    whitespace: int

    @property
    def total(self) -> int:
        return self.keys + self.punctuation + self.values + self.structure_indent + self.whitespace

    def as_dict(self) -> dict:
        return {
            "format": self.format,
            "keys": self.keys,
            "punctuation": self.punctuation,
            "values": self.values,
            "structure_indent": self.structure_indent,
            "whitespace": self.whitespace,
            "total": self.total,
        }


_ATTR = {
    Role.KEY: "keys",
    Role.PUNCTUATION: "punctuation",
    Role.VALUE: "values",
    Role.STRUCTURE_INDENT: "structure_indent",
    Role.WHITESPACE: "whitespace",
}


def _owner(roles: bytes) -> int:
    if len(roles) == 1:
        return roles[0]
    counts = [0] * len(Role)
    for r in roles:
        counts[r] += 1
    best = max(counts)
    return counts.index(best)


def compose(model: TokenizerModel, fmt: str, text: Emitted) -> CompositionReport:
    roles = classify_bytes(fmt, text)
    totals = [0] * len(Role)
    for _, (start, end) in model.encode_with_spans(text.text):
        totals[_owner(roles[start:end])] += 1
    return CompositionReport(fmt, **{_ATTR[Role(i)]: n for i, n in enumerate(totals)})
