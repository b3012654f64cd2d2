"""ONTO text -> :class:`~onto.model.OntoDocument`.

The grammar is line oriented. Top-level lines are entity headers
(``Name[N]:``); every other line is a field line indented by exactly four
spaces per level. A field line whose payload is empty and which is followed
by a deeper line opens a group; any other field line is a leaf carrying N
pipe-separated values.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ParseError
from .model import (
    INT64_MAX,
    INT64_MIN,
    MAX_DEPTH,
    EntityBlock,
    Group,
    Leaf,
    OntoDocument,
    is_identifier,
)

INDENT = 4

HEADER_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_.-]*)\[(0|[1-9][0-9]*)\]:")
INT_RE = re.compile(r"-?[0-9]+")
FLOAT_RE = re.compile(r"-?[0-9]+\.[0-9]+(?:[eE][+-]?[0-9]+)?|-?[0-9]+[eE][+-]?[0-9]+")


def _unquote(raw: str, line: int, column: int) -> str:
    """Inner text of a backtick span that makes up all of ``raw``."""
    i = 1
    end = len(raw)
    while True:
        k = raw.find("`", i)
        if k < 0:
            raise ParseError("UnterminatedBacktick", line, column, "backtick string is not closed")
        if k + 1 < end and raw[k + 1] == "`":
            i = k + 2
            continue
        if k + 1 != end:
            raise ParseError(
                "StrayContent", line, column + k + 1, "text after closing backtick"
            )
        return raw[1:k].replace("``", "`")


def infer_scalar(raw: str, *, line: int = 1, column: int = 1):
    """Type of one delimiter-free element.

    Empty -> None, backticked -> str, ``true``/``false`` -> bool, then int
    (signed 64-bit), float, and str for everything else.
    """
    if not raw:
        return None
    if raw[0] == "`":
        return _unquote(raw, line, column)
    if raw == "true":
        return True
    if raw == "false":
        return False
    if INT_RE.fullmatch(raw):
        value = int(raw)
        if INT64_MIN <= value <= INT64_MAX:
            return value
        return raw
    if FLOAT_RE.fullmatch(raw):
        value = float(raw)
        return value if math.isfinite(value) else raw
    return raw


def _scan(payload: str, line: int, col0: int) -> list:
    """Split a leaf payload into segments of ``(raw_element, column)`` lists."""
    segments = []
    elements = []
    i = 0
    n = len(payload)
    while True:
        if i < n and payload[i] == "`":
            j = i + 1
            while True:
                k = payload.find("`", j)
                if k < 0:
                    raise ParseError(
                        "UnterminatedBacktick", line, col0 + i, "backtick string is not closed"
                    )
                if k + 1 < n and payload[k + 1] == "`":
                    j = k + 2
                    continue
                break
            end = k + 1
            if end < n and payload[end] not in "|^":
                raise ParseError("StrayContent", line, col0 + end, "text after closing backtick")
        else:
            end = i
            while end < n and payload[end] not in "|^":
                if payload[end] == "`":
                    raise ParseError(
                        "StrayContent", line, col0 + end,
                        "backtick inside an unquoted value; quote the whole value",
                    )
                end += 1
            raw = payload[i:end]
            if raw and (raw[0].isspace() or raw[-1].isspace()):
                raise ParseError(
                    "StrayContent", line, col0 + i,
                    "unquoted value with leading or trailing whitespace",
                )
        elements.append((payload[i:end], col0 + i))
        if end >= n:
            segments.append(elements)
            return segments
        if payload[end] == "|":
            segments.append(elements)
            elements = []
        i = end + 1


def _values(payload: str, line: int, col0: int) -> list:
    out = []
    for elements in _scan(payload, line, col0):
        items = [infer_scalar(raw, line=line, column=col) for raw, col in elements]
        out.append(items[0] if len(items) == 1 else items)
    return out


def split_values(line_payload: str) -> list:
    """Values of one leaf line payload (the text after ``name:``)."""
    return _values(line_payload, 1, 1)


@dataclass
class _FieldLine:
    line: int
    depth: int
    name: str
    payload: str
    payload_col: int


class _Entity:
    def __init__(self, name: str, count: int, line: int):
        self.name = name
        self.count = count
        self.line = line
        self.last_line = line
        self.fields: list[_FieldLine] = []


def _field_line(text: str, lineno: int, depth: int) -> _FieldLine:
    start = depth * INDENT
    content = text[start:]
    colon = content.find(":")
    if colon < 0:
        raise ParseError("StrayContent", lineno, start + 1, "expected 'name:' field line")
    name = content[:colon]
    if not is_identifier(name):
        raise ParseError("BadFieldName", lineno, start + 1, f"invalid field name {name!r}")
    rest = content[colon + 1:]
    payload = rest.lstrip(" ")
    payload_col = start + colon + 2 + (len(rest) - len(payload))
    return _FieldLine(lineno, depth, name, payload, payload_col)


def _build(entity: _Entity, pos: int, depth: int, prefix: str):
    entries = entity.fields
    nodes = []
    names = set()
    while pos < len(entries) and entries[pos].depth == depth:
        entry = entries[pos]
        if entry.name in names:
            raise ParseError("DuplicateField", entry.line, depth * INDENT + 1,
                             f"field {prefix + entry.name!r} declared twice")
        names.add(entry.name)
        if pos + 1 < len(entries) and entries[pos + 1].depth == depth + 1:
            children, pos = _build(entity, pos + 1, depth + 1, prefix + entry.name + ".")
            nodes.append(Group(entry.name, children))
            continue
        if entry.payload == "" and entity.count == 0:
            values = []
        else:
            values = _values(entry.payload, entry.line, entry.payload_col)
        if len(values) != entity.count:
            column = entry.payload_col if entry.payload else depth * INDENT + len(entry.name) + 1
            raise ParseError(
                "CountMismatch", entry.line, column,
                f"field {prefix + entry.name!r} has {len(values)} values, "
                f"expected {entity.count}",
            )
        nodes.append(Leaf(entry.name, values))
        pos += 1
    return tuple(nodes), pos


def _finish(entity: _Entity) -> EntityBlock:
    if entity.count and not entity.fields:
        raise ParseError("EmptyGroup", entity.line, 1,
                         f"entity {entity.name!r} declares {entity.count} records but no fields")
    fields, _ = _build(entity, 0, 1, "")
    return EntityBlock(entity.name, entity.count, fields)


def loads(source: str) -> OntoDocument:
    """Parse ONTO text. The first problem found raises :class:`ParseError`."""
    lines = source.replace("\r\n", "\n").split("\n")
    entities: list[_Entity] = []
    current: _Entity | None = None
    blank_at = None
    for lineno, text in enumerate(lines, start=1):
        if "\r" in text:
            raise ParseError("StrayContent", lineno, text.index("\r") + 1, "carriage return inside a line")
        stripped = text.lstrip(" ")
        if not stripped:
            if current is not None and blank_at is None:
                blank_at = lineno
            continue
        leading = len(text) - len(stripped)
        indent = text[: len(text) - len(text.lstrip(" \t"))]
        if "\t" in indent:
            raise ParseError("TabCharacter", lineno, indent.index("\t") + 1, "tab in indentation")
        if leading % INDENT:
            raise ParseError("BadIndentation", lineno, leading + 1,
                             f"indentation of {leading} spaces is not a multiple of {INDENT}")
        depth = leading // INDENT

        if depth == 0:
            m = HEADER_RE.fullmatch(text)
            if m is None:
                raise ParseError("BadEntityHeader", lineno, 1, "expected 'Name[N]:' entity header")
            if any(e.name == m.group(1) for e in entities):
                raise ParseError("DuplicateField", lineno, 1, f"entity {m.group(1)!r} declared twice")
            current = _Entity(m.group(1), int(m.group(2)), lineno)
            entities.append(current)
            blank_at = None
            continue

        if current is None:
            raise ParseError("StrayContent", lineno, leading + 1, "field line before any entity header")
        if blank_at is not None:
            raise ParseError("StrayContent", blank_at, 1, "blank line inside an entity block")
        if depth > MAX_DEPTH:
            raise ParseError("BadIndentation", lineno, leading + 1,
                             f"nesting deeper than {MAX_DEPTH} levels")
        previous = current.fields[-1] if current.fields else None
        parent_depth = previous.depth if previous else 0
        if depth > parent_depth + 1:
            raise ParseError("BadIndentation", lineno, leading + 1,
                             "indented more than one level below the previous line")
        if previous is not None and depth == parent_depth + 1 and previous.payload:
            raise ParseError("BadIndentation", lineno, leading + 1,
                             f"indented under leaf field {previous.name!r}")
        current.fields.append(_field_line(text, lineno, depth))
        current.last_line = lineno

    blocks = tuple(_finish(e) for e in entities)
    spans = tuple((e.line, e.last_line) for e in entities)
    return OntoDocument(blocks, source_spans=spans)
