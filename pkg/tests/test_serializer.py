import pytest
from hypothesis import given, settings

from onto import (
    EntityBlock,
    Group,
    HeterogeneousRecords,
    Leaf,
    OntoDocument,
    UnrepresentableValue,
    block_of,
    dumps,
    dumps_records,
    emit_onto,
    infer_scalar,
    loads,
    split_values,
)
from onto.datagen import DatasetSpec, generate
from onto.model import same_value
from onto.roles import Role
from onto.serializer import format_value, needs_backticks

from conftest import REFERENCE_LISTING, REFERENCE_RECORDS
from strategies import ADVERSARIAL, homogeneous_records, identifiers, leaf_values, random_dataset, scalars


def test_reference_block_reproduces_listing():
    assert dumps(block_of("Telemetry", REFERENCE_RECORDS)) == REFERENCE_LISTING
    assert dumps_records("Telemetry", REFERENCE_RECORDS) == REFERENCE_LISTING
    assert dumps(REFERENCE_RECORDS, entity="Telemetry") == REFERENCE_LISTING


def test_numeric_string_is_backticked():
    block = EntityBlock("E", 2, (Leaf("f", ("123", 123)),))
    assert dumps(block) == "E[2]:\n    f: `123`|123\n"


def test_empty_string():
    assert dumps(EntityBlock("E", 1, (Leaf("f", ("",)),))) == "E[1]:\n    f: ``\n"


def test_empty_records():
    assert dumps_records("M", []) == "M[0]:\n"


def test_heterogeneous_records():
    with pytest.raises(HeterogeneousRecords):
        dumps_records("E", [{"a": 1}, {"b": 1}])


def test_null_only_leaf_has_no_trailing_space():
    assert dumps(EntityBlock("E", 1, (Leaf("f", (None,)),))) == "E[1]:\n    f:\n"
    assert dumps(EntityBlock("E", 0, (Leaf("f", ()),))) == "E[0]:\n    f:\n"
    assert dumps(EntityBlock("E", 2, (Leaf("f", (None, None)),))) == "E[2]:\n    f: |\n"


def test_multi_entity_document():
    doc = OntoDocument((
        EntityBlock("A", 1, (Leaf("x", (1,)),)),
        EntityBlock("B", 2, (Group("g", (Leaf("y", ("p", "q")),)),)),
    ))
    text = dumps(doc)
    assert text == "A[1]:\n    x: 1\nB[2]:\n    g:\n        y: p|q\n"
    assert loads(text) == doc


@pytest.mark.parametrize("value, spelled", [
    (None, ""),
    (True, "true"),
    (False, "false"),
    (0, "0"),
    (-(2**63), "-9223372036854775808"),
    (0.1, "0.1"),
    (-0.0, "-0.0"),
    (1e16, "1e+16"),
    (1.5e-7, "1.5e-07"),
    (-122.41, "-122.41"),
    ("plain text", "plain text"),
    ("true", "`true`"),
    ("1e5", "`1e5`"),
    ("-0", "`-0`"),
    ("1.", "1."),
    ("a|b", "`a|b`"),
    ("a^b", "`a^b`"),
    ("a`b", "`a``b`"),
    ("`", "````"),
    (" pad", "` pad`"),
    ("\ttab", "`\ttab`"),
    (["a", "b"], "a^b"),
    ([None, None], "^"),
    ([1, "2", None], "1^`2`^"),
])
def test_format_value(value, spelled):
    assert format_value(value) == spelled


@pytest.mark.parametrize("bad", [[1], [], float("nan"), float("-inf"), 2**64, [[1, 2], 3]])
def test_unrepresentable_values(bad):
    with pytest.raises(UnrepresentableValue):
        format_value(bad)
    with pytest.raises(UnrepresentableValue):
        dumps_records("E", [{"f": bad}])


def test_dumps_argument_errors():
    with pytest.raises(TypeError):
        dumps(REFERENCE_RECORDS)
    with pytest.raises(TypeError):
        dumps(block_of("E", REFERENCE_RECORDS), entity="E")


def test_adversarial_strings_round_trip():
    records = [{"s": s} for s in ADVERSARIAL]
    back = loads(dumps_records("E", records))["E"]
    assert back.fields[0].values == tuple(ADVERSARIAL)


def test_needs_backticks_matches_inference():
    for s in ADVERSARIAL:
        if not needs_backticks(s):
            assert infer_scalar(s) == s and isinstance(infer_scalar(s), str)


# ------------------------------------------------------------ properties

def test_round_trip_seeded_datasets():
    for seed in range(1000):
        name, records = random_dataset(seed)
        block = block_of(name, records)
        text = dumps(block)
        assert loads(text)[name] == block, seed
        assert dumps(loads(text)) == text, seed


@settings(max_examples=150)
@given(identifiers, homogeneous_records(max_records=20))
def test_round_trip_property(name, records):
    text = dumps_records(name, records)
    assert same_value(loads(text)[name], block_of(name, records))
    assert dumps(loads(text)) == text


@settings(max_examples=300)
@given(scalars)
def test_inference_stability_scalars(value):
    spelled = format_value(value)
    if "^" in spelled and not spelled.startswith("`"):
        pytest.fail(f"scalar spelled as array: {spelled!r}")
    assert same_value(split_values(spelled)[0], value)


@settings(max_examples=300)
@given(leaf_values)
def test_inference_stability_leaf_values(value):
    [back] = split_values(format_value(value))
    assert same_value(back, value)


def _key_pieces(emitted):
    return [text for text, role in emitted.pieces if role == Role.KEY]


def _node_names(nodes):
    for node in nodes:
        yield node.name
        if isinstance(node, Group):
            yield from _node_names(node.children)


def test_schema_once_key_occurrences():
    for seed in range(300):
        name, records = random_dataset(seed)
        block = block_of(name, records)
        keys = _key_pieces(emit_onto(block))
        assert keys == [name, *_node_names(block.fields)]


@pytest.mark.parametrize("kind", ["iot", "metrics", "logs"])
def test_field_names_appear_once_whatever_n(kind):
    texts = [dumps_records("E", generate(DatasetSpec(kind, n, 1000))) for n in (1, 10, 200)]
    names = list(_node_names(block_of("E", generate(DatasetSpec(kind, 1, 1000))).fields))
    for text in texts:
        for field in names:
            lines = [ln for ln in text.splitlines() if ln.strip().startswith(field + ":")]
            assert len(lines) == 1, field


def test_emitted_text_matches_dumps():
    block = block_of("Telemetry", REFERENCE_RECORDS)
    emitted = emit_onto(block)
    assert emitted.format == "onto"
    assert emitted.text == REFERENCE_LISTING
    assert len(emitted.byte_roles()) == len(REFERENCE_LISTING.encode())


def test_package_docstring_example():
    import doctest

    import onto

    assert doctest.testmod(onto).failed == 0
