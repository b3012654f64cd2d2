"""ONTO: a columnar, schema-once text notation for feeding records to LLMs.

    >>> import onto
    >>> print(onto.dumps([{"a": 1, "b": "x"}, {"a": 2, "b": None}], entity="Rows"), end="")
    Rows[2]:
        a: 1|2
        b: x|
"""

__version__ = "0.1.0"

from .errors import (
    HeterogeneousRecords,
    MalformedRankFile,
    OntoError,
    ParseError,
    UnknownProvenance,
    UnrepresentableValue,
)
from .model import EntityBlock, Group, Leaf, OntoDocument, block_of, records_of, same_value
from .parser import infer_scalar, loads, split_values
from .serializer import dumps, dumps_records, emit_onto

__all__ = [
    "EntityBlock",
    "Group",
    "HeterogeneousRecords",
    "Leaf",
    "MalformedRankFile",
    "OntoDocument",
    "OntoError",
    "ParseError",
    "UnknownProvenance",
    "UnrepresentableValue",
    "block_of",
    "dumps",
    "dumps_records",
    "emit_onto",
    "infer_scalar",
    "loads",
    "records_of",
    "same_value",
    "split_values",
]
