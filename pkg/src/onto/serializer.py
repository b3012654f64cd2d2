"""Canonical ONTO emission."""

from __future__ import annotations

from typing import Sequence, Union

from .errors import UnrepresentableValue
from .model import EntityBlock, Leaf, OntoDocument, block_of, check_value
from .parser import FLOAT_RE, INT_RE, INDENT
from .roles import Emitted, PieceWriter, Role

P = Role.PUNCTUATION
V = Role.VALUE
K = Role.KEY
WS = Role.WHITESPACE
IND = Role.STRUCTURE_INDENT

_RESERVED = frozenset("|^`")


def needs_backticks(s: str) -> bool:
    """True when ``s`` would not read back as the same string if written bare."""
    if not s:
        return True
    if s[0].isspace() or s[-1].isspace():
        return True
    if not _RESERVED.isdisjoint(s):
        return True
    if s == "true" or s == "false":
        return True
    return INT_RE.fullmatch(s) is not None or FLOAT_RE.fullmatch(s) is not None


def _write_scalar(w: PieceWriter, value) -> None:
    if value is None:
        return
    if value is True:
        w.add("true", V)
    elif value is False:
        w.add("false", V)
    elif isinstance(value, (int, float)):
        # repr() of a float is the shortest string that round-trips
        w.add(repr(value), V)
    elif needs_backticks(value):
        w.add("`", P)
        w.add(value.replace("`", "``"), V)
        w.add("`", P)
    else:
        w.add(value, V)


def format_value(value) -> str:
    """ONTO spelling of one leaf value (scalar or array)."""
    w = PieceWriter()
    _write_value(w, check_value(value))
    return w.done("onto").text


def _write_value(w: PieceWriter, value) -> None:
    if isinstance(value, tuple):
        for i, item in enumerate(value):
            if i:
                w.add("^", P)
            _write_scalar(w, item)
    else:
        _write_scalar(w, value)


def _write_fields(w: PieceWriter, nodes, depth: int) -> None:
    for node in nodes:
        w.add(" " * (INDENT * depth), IND)
        w.add(node.name, K)
        w.add(":", P)
        if isinstance(node, Leaf):
            if node.values and not (len(node.values) == 1 and node.values[0] is None):
                w.add(" ", WS)
                for i, value in enumerate(node.values):
                    if i:
                        w.add("|", P)
                    _write_value(w, value)
            w.add("\n", WS)
        else:
            w.add("\n", WS)
            _write_fields(w, node.children, depth + 1)


def _write_block(w: PieceWriter, block: EntityBlock) -> None:
    w.add(block.name, K)
    w.add(f"[{block.count}]:", P)
    w.add("\n", WS)
    _write_fields(w, block.fields, 1)


def emit_onto(doc: Union[OntoDocument, EntityBlock]) -> Emitted:
    """Canonical ONTO text of ``doc`` together with its byte roles."""
    blocks = (doc,) if isinstance(doc, EntityBlock) else doc.entities
    w = PieceWriter()
    for block in blocks:
        _write_block(w, block)
    return w.done("onto")


def dumps_records(entity_name: str, records: Sequence[dict]) -> str:
    return emit_onto(block_of(entity_name, records)).text


def dumps(data, entity: str | None = None) -> str:
    """Serialize a document, a single block, or a list of dicts.

    A list of dicts needs ``entity``, the name written in the header::

        onto.dumps([{"a": 1}, {"a": 2}], entity="Rows")
    """
    if isinstance(data, (OntoDocument, EntityBlock)):
        if entity is not None:
            raise TypeError("entity= only applies to a list of records")
        return emit_onto(data).text
    if entity is None:
        raise TypeError("dumps() of a record list needs entity=<name>")
    if isinstance(data, dict):
        raise UnrepresentableValue("expected a list of records, got a single dict")
    return dumps_records(entity, data)
