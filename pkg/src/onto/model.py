"""In-memory data model shared by the parser, serializer and generators.

Values are plain Python objects: ``None``, ``bool``, ``int``, ``float``,
``str``, ``list`` (array of scalars) and ``dict`` (record). Inside a
:class:`Leaf` arrays are frozen to tuples so that blocks stay immutable.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence, Union

from .errors import HeterogeneousRecords, UnrepresentableValue

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*")
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1
# deepest field line the text format allows (4 spaces per level)
MAX_DEPTH = 8

Scalar = Union[None, bool, int, float, str]
Value = Union[Scalar, list, dict]


def is_identifier(name: str) -> bool:
    return isinstance(name, str) and IDENTIFIER.fullmatch(name) is not None


def _check_scalar(value: Any, where: str) -> Scalar:
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, int):
        if not INT64_MIN <= value <= INT64_MAX:
            raise UnrepresentableValue(f"{where}: integer {value} outside signed 64-bit range")
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise UnrepresentableValue(f"{where}: non-finite float {value!r}")
        return value
    if isinstance(value, str):
        if "\n" in value or "\r" in value:
            raise UnrepresentableValue(f"{where}: strings cannot contain line breaks")
        return value
    raise UnrepresentableValue(f"{where}: unsupported value type {type(value).__name__}")


def check_value(value: Any, where: str = "value") -> Any:
    """Validate a leaf value and return it in frozen form (arrays become tuples)."""
    if isinstance(value, (list, tuple)):
        if len(value) < 2:
            raise UnrepresentableValue(
                f"{where}: arrays need at least two elements (got {len(value)})"
            )
        return tuple(_check_scalar(v, where) for v in value)
    if isinstance(value, dict):
        raise UnrepresentableValue(f"{where}: records cannot appear inside a leaf")
    return _check_scalar(value, where)


def _thaw(value: Any) -> Any:
    return list(value) if isinstance(value, tuple) else value


@dataclass(frozen=True, eq=False)
class Leaf:
    name: str
    values: tuple

    def __post_init__(self):
        if not is_identifier(self.name):
            raise UnrepresentableValue(f"field name {self.name!r} is not an identifier")
        frozen = tuple(check_value(v, self.name) for v in self.values)
        object.__setattr__(self, "values", frozen)

    # strict so that 1, 1.0 and True (or 0.0 and -0.0) never compare equal
    def __eq__(self, other):
        if not isinstance(other, Leaf):
            return NotImplemented
        return self.name == other.name and same_value(self.values, other.values)

    def __hash__(self):
        return hash((self.name, len(self.values)))


@dataclass(frozen=True)
class Group:
    name: str
    children: tuple

    def __post_init__(self):
        if not is_identifier(self.name):
            raise UnrepresentableValue(f"field name {self.name!r} is not an identifier")
        children = tuple(self.children)
        if not children:
            raise UnrepresentableValue(f"group {self.name!r} has no fields")
        _check_unique(children, self.name)
        object.__setattr__(self, "children", children)


FieldNode = Union[Leaf, Group]


def _check_unique(nodes: Sequence[FieldNode], where: str) -> None:
    seen = set()
    for node in nodes:
        if node.name in seen:
            raise UnrepresentableValue(f"duplicate field {node.name!r} in {where}")
        seen.add(node.name)


def iter_leaves(nodes: Iterable[FieldNode], prefix: str = ""):
    """Yield ``(dotted_path, leaf)`` for every leaf, depth first, in order."""
    for node in nodes:
        path = prefix + node.name
        if isinstance(node, Leaf):
            yield path, node
        else:
            yield from iter_leaves(node.children, path + ".")


@dataclass(frozen=True)
class EntityBlock:
    name: str
    count: int
    fields: tuple = ()

    def __post_init__(self):
        if not is_identifier(self.name):
            raise UnrepresentableValue(f"entity name {self.name!r} is not an identifier")
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 0:
            raise UnrepresentableValue(f"record count must be a non-negative integer, got {self.count!r}")
        fields = tuple(self.fields)
        if not fields and self.count:
            raise UnrepresentableValue(f"entity {self.name!r} has {self.count} records but no fields")
        _check_unique(fields, self.name)
        if _depth(fields) > MAX_DEPTH:
            raise UnrepresentableValue(
                f"entity {self.name!r} nests fields deeper than {MAX_DEPTH} levels"
            )
        for path, leaf in iter_leaves(fields):
            if len(leaf.values) != self.count:
                raise UnrepresentableValue(
                    f"{self.name}.{path}: {len(leaf.values)} values, expected {self.count}"
                )
        object.__setattr__(self, "fields", fields)

    def schema(self) -> "EntityBlock":
        """Same field tree with zero records."""
        return EntityBlock(self.name, 0, _empty_tree(self.fields))


def _depth(nodes) -> int:
    return max((1 + (_depth(n.children) if isinstance(n, Group) else 0) for n in nodes), default=0)


def _empty_tree(nodes: Sequence[FieldNode]) -> tuple:
    return tuple(
        Leaf(n.name, ()) if isinstance(n, Leaf) else Group(n.name, _empty_tree(n.children))
        for n in nodes
    )


@dataclass(frozen=True)
class OntoDocument:
    entities: tuple = ()
    # (first_line, last_line) per entity, filled in by the parser
    source_spans: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        entities = tuple(self.entities)
        names = [e.name for e in entities]
        if len(set(names)) != len(names):
            raise UnrepresentableValue(f"duplicate entity names in {names}")
        object.__setattr__(self, "entities", entities)

    def __getitem__(self, name: str) -> EntityBlock:
        for entity in self.entities:
            if entity.name == name:
                return entity
        raise KeyError(name)


def records_of(block: EntityBlock) -> list[dict]:
    """Row view of a block: ``block.count`` dicts with nested groups as dicts."""

    def build(nodes, i):
        return {
            n.name: _thaw(n.values[i]) if isinstance(n, Leaf) else build(n.children, i)
            for n in nodes
        }

    return [build(block.fields, i) for i in range(block.count)]


def _shape(record: dict, where: str) -> list:
    shape = []
    for key, value in record.items():
        if isinstance(value, dict):
            if not value:
                raise UnrepresentableValue(f"{where}{key}: empty record has no ONTO form")
            shape.append((key, _shape(value, f"{where}{key}.")))
        else:
            shape.append((key, None))
    return shape


def _compare(shape: list, record: Any, index: int, prefix: str) -> None:
    if not isinstance(record, dict):
        raise HeterogeneousRecords(index, prefix.rstrip(".") or "<root>", "expected a record")
    keys = list(record)
    for pos, (name, sub) in enumerate(shape):
        if pos >= len(keys):
            raise HeterogeneousRecords(index, prefix + name, "field missing")
        if keys[pos] != name:
            path = keys[pos] if keys[pos] not in dict(shape) else name
            raise HeterogeneousRecords(index, prefix + path, "field set or order differs")
        value = record[name]
        if sub is None and isinstance(value, dict):
            raise HeterogeneousRecords(index, prefix + name, "record where a scalar was expected")
        if sub is not None:
            _compare(sub, value, index, prefix + name + ".")
    if len(keys) > len(shape):
        raise HeterogeneousRecords(index, prefix + keys[len(shape)], "unexpected field")


def block_of(entity_name: str, records: Sequence[dict]) -> EntityBlock:
    """Pivot homogeneous records into a columnar block (inverse of :func:`records_of`)."""
    records = list(records)
    if not records:
        return EntityBlock(entity_name, 0, ())
    if not isinstance(records[0], dict):
        raise HeterogeneousRecords(0, "<root>", "expected a record")
    shape = _shape(records[0], "")
    for index, record in enumerate(records[1:], start=1):
        _compare(shape, record, index, "")

    def columns(sub_shape, rows):
        nodes = []
        for name, sub in sub_shape:
            column = [row[name] for row in rows]
            if sub is None:
                nodes.append(Leaf(name, column))
            else:
                nodes.append(Group(name, columns(sub, column)))
        return tuple(nodes)

    return EntityBlock(entity_name, len(records), columns(shape, records))


def same_value(a: Any, b: Any) -> bool:
    """Strict equality: types, key order and float bit patterns must all match.

    Plain ``==`` is too lenient here (``1 == 1.0 == True``, dict order ignored).
    """
    if type(a) is not type(b):
        if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
            pass
        else:
            return False
    if isinstance(a, float):
        return math.copysign(1.0, a) == math.copysign(1.0, b) and a == b
    if isinstance(a, dict):
        return list(a) == list(b) and all(same_value(a[k], b[k]) for k in a)
    if isinstance(a, (list, tuple)):
        return len(a) == len(b) and all(same_value(x, y) for x, y in zip(a, b))
    return a == b
