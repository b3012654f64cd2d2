"""JSON and block-style YAML emitters used as token-count baselines.

Both are written by hand (rather than calling ``json.dumps`` / PyYAML) so that
every emitted byte carries a role for the composition analyzer. The test
suite checks the JSON output byte-for-byte against ``json.dumps`` and reads
the YAML back with PyYAML.
"""

from __future__ import annotations

import json
import math
import re
from typing import Any, Sequence

from .errors import UnrepresentableValue
from .roles import Emitted, PieceWriter, Role

P = Role.PUNCTUATION
V = Role.VALUE
K = Role.KEY
WS = Role.WHITESPACE
IND = Role.STRUCTURE_INDENT

JSON_STYLES = ("compact", "spaced", "indented")


def _number(value: Any) -> str:
    if isinstance(value, float):
        if not math.isfinite(value):
            raise UnrepresentableValue(f"non-finite float {value!r}")
        return repr(value)
    return str(value)


# --------------------------------------------------------------------- JSON

def _json_string(w: PieceWriter, s: str, role: Role) -> None:
    body = json.dumps(s, ensure_ascii=False)
    if role is K:
        w.add(body, K)
    else:
        w.add('"', P)
        w.add(body[1:-1], role)
        w.add('"', P)


def _json_value(w: PieceWriter, value: Any, style: str, width: int, level: int) -> None:
    if value is None:
        w.add("null", V)
    elif value is True:
        w.add("true", V)
    elif value is False:
        w.add("false", V)
    elif isinstance(value, (int, float)):
        w.add(_number(value), V)
    elif isinstance(value, str):
        _json_string(w, value, V)
    elif isinstance(value, (list, tuple)):
        _json_container(w, "[]", list(value), style, width, level)
    elif isinstance(value, dict):
        _json_container(w, "{}", list(value.items()), style, width, level)
    else:
        raise UnrepresentableValue(f"no JSON form for {type(value).__name__}")


def _json_container(w, brackets, items, style, width, level):
    w.add(brackets[0], P)
    if not items:
        w.add(brackets[1], P)
        return
    is_object = brackets == "{}"
    for i, item in enumerate(items):
        if i:
            w.add(",", P)
            if style == "spaced":
                w.add(" ", WS)
        if style == "indented":
            w.add("\n", WS)
            w.add(" " * (width * (level + 1)), IND)
        if is_object:
            key, item = item
            if not isinstance(key, str):
                raise UnrepresentableValue(f"JSON keys must be strings, got {key!r}")
            _json_string(w, key, K)
            w.add(":", P)
            if style != "compact":
                w.add(" ", WS)
        _json_value(w, item, style, width, level + 1)
    if style == "indented":
        w.add("\n", WS)
        w.add(" " * (width * level), IND)
    w.add(brackets[1], P)


def emit_json(records: Sequence[Any], style: str = "spaced", width: int = 2) -> Emitted:
    """JSON array of ``records`` (a dict is written as a JSON object instead).

    ``compact`` has no whitespace, ``spaced`` uses ``", "`` and ``": "`` on a
    single line, ``indented`` puts each item on its own line, ``width``
    spaces per level (the layout of ``json.dumps(indent=width)``).
    """
    if style not in JSON_STYLES:
        raise ValueError(f"unknown JSON style {style!r}; expected one of {JSON_STYLES}")
    w = PieceWriter()
    _json_value(w, records if isinstance(records, dict) else list(records), style, width, 0)
    return w.done("json")


def to_json(records: Sequence[Any], style: str = "spaced", width: int = 2) -> str:
    return emit_json(records, style, width).text


# --------------------------------------------------------------------- YAML

_PLAIN = re.compile(r"[A-Za-z_][A-Za-z0-9_ ./-]*")
_RESERVED_WORDS = frozenset(
    "y n yes no true false on off null ~".split()
)
_YAML_NON_PRINTABLE = re.compile(
    "[^\x09\x20-\x7E\xA0-\uD7FF\uE000-\uFEFE\uFF00-\uFFFD\U00010000-\U0010FFFF]"
)
_YAML_ESCAPES = {
    "\0": "\\0", "\x07": "\\a", "\b": "\\b", "\t": "\\t", "\n": "\\n",
    "\x0b": "\\v", "\x0c": "\\f", "\r": "\\r", "\x1b": "\\e", '"': '\\"',
    "\\": "\\\\", "\x85": "\\N", "\xa0": "\\_", "\u2028": "\\L", "\u2029": "\\P",
}


def _yaml_double(s: str) -> str:
    out = []
    for ch in s:
        if ch in _YAML_ESCAPES:
            out.append(_YAML_ESCAPES[ch])
        elif _YAML_NON_PRINTABLE.match(ch):
            code = ord(ch)
            if code <= 0xFF:
                out.append(f"\\x{code:02X}")
            elif code <= 0xFFFF:
                out.append(f"\\u{code:04X}")
            else:
                out.append(f"\\U{code:08X}")
        else:
            out.append(ch)
    return "".join(out)


def _yaml_string(w: PieceWriter, s: str, role: Role) -> None:
    if _PLAIN.fullmatch(s) and not s.endswith(" ") and s.lower() not in _RESERVED_WORDS:
        w.add(s, role)
    elif _YAML_NON_PRINTABLE.search(s) is None:
        w.add("'", P)
        w.add(s.replace("'", "''"), role)
        w.add("'", P)
    else:
        w.add('"', P)
        w.add(_yaml_double(s), role)
        w.add('"', P)


def _yaml_scalar(w: PieceWriter, value: Any) -> None:
    if value is None:
        w.add("null", V)
    elif value is True:
        w.add("true", V)
    elif value is False:
        w.add("false", V)
    elif isinstance(value, float):
        text = _number(value)
        if "e" in text and "." not in text:
            # YAML 1.1 floats need a fraction part
            text = text.replace("e", ".0e")
        w.add(text, V)
    elif isinstance(value, int):
        w.add(str(value), V)
    elif isinstance(value, str):
        _yaml_string(w, value, V)
    else:
        raise UnrepresentableValue(f"no YAML form for {type(value).__name__}")


def _yaml_flow(w: PieceWriter, value: Any) -> None:
    if isinstance(value, (list, tuple)):
        w.add("[", P)
        for i, item in enumerate(value):
            if i:
                w.add(",", P)
                w.add(" ", WS)
            _yaml_flow(w, item)
        w.add("]", P)
    elif isinstance(value, dict):
        w.add("{", P)
        for i, (key, item) in enumerate(value.items()):
            if i:
                w.add(",", P)
                w.add(" ", WS)
            _yaml_key(w, key)
            w.add(":", P)
            w.add(" ", WS)
            _yaml_flow(w, item)
        w.add("}", P)
    else:
        _yaml_scalar(w, value)


def _yaml_key(w: PieceWriter, key: Any) -> None:
    if not isinstance(key, str):
        raise UnrepresentableValue(f"mapping keys must be strings, got {key!r}")
    _yaml_string(w, key, K)


def _yaml_mapping(w: PieceWriter, mapping: dict, indent: int, inline_first: bool) -> None:
    for i, (key, value) in enumerate(mapping.items()):
        if i or not inline_first:
            w.add(" " * indent, IND)
        _yaml_key(w, key)
        w.add(":", P)
        if isinstance(value, dict) and value:
            w.add("\n", WS)
            _yaml_mapping(w, value, indent + 2, False)
            continue
        w.add(" ", WS)
        _yaml_flow(w, value)
        w.add("\n", WS)


def emit_yaml(records: Sequence[Any]) -> Emitted:
    """Block-style YAML sequence with one ``- key: value`` mapping per record."""
    w = PieceWriter()
    records = list(records)
    if not records:
        w.add("[]", P)
        w.add("\n", WS)
        return w.done("yaml")
    for record in records:
        w.add("-", P)
        w.add(" ", WS)
        if isinstance(record, dict) and record:
            _yaml_mapping(w, record, 2, True)
        else:
            _yaml_flow(w, record)
            w.add("\n", WS)
    return w.done("yaml")


def to_yaml(records: Sequence[Any]) -> str:
    return emit_yaml(records).text
