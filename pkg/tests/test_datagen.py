import json
import re
from collections import Counter

import pytest

from onto import block_of, dumps_records
from onto.datagen import (
    ENTITY_NAMES,
    KINDS,
    LOG_LEVELS,
    SERVICES,
    STATUS_CODES,
    DatasetSpec,
    SplitMix64,
    generate,
)
from onto.model import iter_leaves

FIELD_PATHS = {
    "iot": ["device_id", "timestamp", "temperature", "humidity", "pressure", "battery_level",
            "location.lat", "location.lon"],
    "metrics": ["host", "timestamp", "cpu_percent", "memory_percent", "disk_io_read",
                "disk_io_write", "network_in", "network_out"],
    "logs": ["timestamp", "level", "service", "message", "request_id", "duration_ms",
             "status_code"],
}


def test_splitmix64_reference_vectors():
    # published outputs of the reference C implementation
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821,
    ]


def test_splitmix64_helpers_stay_in_range():
    rng = SplitMix64(42)
    for _ in range(2000):
        assert 0.0 <= rng.random() < 1.0
        assert 3 <= rng.randint(3, 7) <= 7
        assert 1.5 <= rng.uniform(1.5, 2.5) <= 2.5
        assert 0 <= rng.decade_int(4) < 10**4


def test_decade_int_spreads_digit_counts():
    rng = SplitMix64(7)
    digits = Counter(len(str(rng.decade_int(9))) for _ in range(9000))
    assert set(digits) == set(range(1, 10))
    assert min(digits.values()) > 800


def test_weighted_choice_follows_weights():
    rng = SplitMix64(3)
    counts = Counter(rng.choice("abc", (1, 0, 3)) for _ in range(4000))
    assert counts["b"] == 0
    assert 2700 < counts["c"] < 3300


@pytest.mark.parametrize("kind", KINDS)
def test_field_tree(kind):
    records = generate(DatasetSpec(kind, 3, 1000))
    assert len(records) == 3
    block = block_of(ENTITY_NAMES[kind], records)
    assert [p for p, _ in iter_leaves(block.fields)] == FIELD_PATHS[kind]


def test_metrics_scale_is_flat():
    records = generate(DatasetSpec("metrics", 1000, 1000))
    assert len(records) == 1000
    assert all(not isinstance(v, dict) for r in records for v in r.values())
    assert all(len(r) == 8 for r in records)


@pytest.mark.parametrize("kind", KINDS)
def test_determinism(kind):
    spec = DatasetSpec(kind, 200, 1003)
    assert dumps_records("E", generate(spec)) == dumps_records("E", generate(spec))
    assert generate(DatasetSpec(kind, 200, 1004)) != generate(spec)


@pytest.mark.parametrize("kind", KINDS)
def test_prefix_stability(kind):
    # a larger dataset starts with the smaller one for the same seed
    assert generate(DatasetSpec(kind, 1000, 1000))[:100] == generate(DatasetSpec(kind, 100, 1000))


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("seed", [1000, 1001, 1002, 1003, 1004])
def test_homogeneous(kind, seed):
    block_of("E", generate(DatasetSpec(kind, 500, seed)))


def test_iot_value_shapes():
    records = generate(DatasetSpec("iot", 1000, 1000))
    assert records[0]["device_id"] == "sensor-001"
    assert records[50]["device_id"] == "sensor-001"
    assert records[0]["timestamp"] == "2024-01-15T00:00:00Z"
    assert records[1]["timestamp"] == "2024-01-15T00:01:00Z"
    for r in records:
        assert 15.0 <= r["temperature"] <= 35.0 and round(r["temperature"], 1) == r["temperature"]
        assert 30.0 <= r["humidity"] <= 70.0
        assert 980.0 <= r["pressure"] <= 1040.0
        assert isinstance(r["battery_level"], int) and 0 <= r["battery_level"] <= 100
        assert 37.70 <= r["location"]["lat"] <= 37.80
        assert -122.50 <= r["location"]["lon"] <= -122.40


def test_metrics_value_shapes():
    records = generate(DatasetSpec("metrics", 1000, 1000))
    assert records[19]["host"] == "host-20" and records[20]["host"] == "host-01"
    for r in records:
        assert 0.0 <= r["cpu_percent"] <= 100.0
        for key in ("disk_io_read", "disk_io_write", "network_in", "network_out"):
            assert isinstance(r[key], int) and 0 <= r[key] < 10**9


def test_logs_value_shapes():
    records = generate(DatasetSpec("logs", 2000, 1000))
    levels = Counter(r["level"] for r in records)
    assert set(levels) == set(LOG_LEVELS)
    assert levels["INFO"] > levels["DEBUG"] > levels["WARN"]
    for r in records:
        assert r["service"] in SERVICES
        assert re.fullmatch(r"[0-9a-f]{8}", r["request_id"])
        assert 1 <= r["duration_ms"] <= 5000
        assert r["status_code"] in STATUS_CODES
        assert "{}" not in r["message"]


def test_generated_records_are_json_clean():
    for kind in KINDS:
        records = generate(DatasetSpec(kind, 50, 1000))
        assert json.loads(json.dumps(records)) == records


@pytest.mark.parametrize("kwargs", [
    {"kind": "weather", "n_records": 1},
    {"kind": "iot", "n_records": 0},
    {"kind": "iot", "n_records": True},
    {"kind": "iot", "n_records": 1.5},
    {"kind": "iot", "n_records": 1, "seed": -1},
])
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        DatasetSpec(**kwargs)


def test_spec_entity_names():
    assert [DatasetSpec(k, 1).entity for k in KINDS] == ["Telemetry", "Metrics", "Logs"]
