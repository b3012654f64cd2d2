"""Seeded synthetic datasets: IoT telemetry, system metrics and log entries.

Randomness comes from :class:`SplitMix64`, a fully specified 64-bit generator,
so a ``(kind, n_records, seed)`` triple yields the same records on every
platform and Python version.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timedelta, timezone

MASK64 = (1 << 64) - 1

KINDS = ("iot", "metrics", "logs")

ENTITY_NAMES = {"iot": "Telemetry", "metrics": "Metrics", "logs": "Logs"}

EPOCH = datetime(2024, 1, 15, tzinfo=timezone.utc)
STEP = timedelta(seconds=60)

LOG_LEVELS = ("DEBUG", "INFO", "WARN", "ERROR")
LOG_LEVEL_WEIGHTS = (2, 6, 1, 1)
SERVICES = (
    "auth-service", "api-gateway", "user-service", "order-service",
    "payment-service", "inventory-service", "notification-service", "search-service",
)
MESSAGES = (
    "Request processed in {} ms",
    "User {} logged in",
    "Cache miss for key {}",
    "Retry attempt {}",
    "Pool size is {}",
    "Order {} created",
    "Payment {} authorized",
    "Item {} reserved",
    "Email queued for user {}",
    "Search returned {} results",
    "Slow query took {} ms",
    "Session {} refreshed",
    "Rate limit hit for client {}",
    "Health check took {} ms",
    "Upstream timeout after {} ms",
    "Queue depth is {}",
    "Config version {} loaded",
    "Disk usage at {} percent",
    "Worker {} started",
    "Batch wrote {} records",
)
# counters stay below 10**9
COUNTER_DIGITS = 9
STATUS_CODES = (200, 201, 400, 404, 500)
STATUS_WEIGHTS = (70, 10, 8, 7, 5)


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014).

    ``state += 0x9E3779B97F4A7C15``, then the output is ``state`` pushed
    through two xor-shift-multiply rounds. All arithmetic is modulo 2**64.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` (modulo reduction; bias < 2**-32 here)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def decade_int(self, max_digits: int) -> int:
        """Integer with a uniformly chosen digit count (1..max_digits), uniform within it.

        Integer arithmetic only, so it is bit-identical everywhere.
        """
        digits = self.randint(1, max_digits)
        lo = 0 if digits == 1 else 10 ** (digits - 1)
        return self.randint(lo, 10**digits - 1)

    def choice(self, items, weights=None):
        if weights is None:
            return items[self.next_u64() % len(items)]
        target = self.next_u64() % sum(weights)
        for item, weight in zip(items, weights):
            if target < weight:
                return item
            target -= weight
        raise AssertionError("unreachable")


@dataclass(frozen=True)
class DatasetSpec:
    kind: str
    n_records: int
    seed: int = 1000

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown dataset kind {self.kind!r}; expected one of {KINDS}")
        if isinstance(self.n_records, bool) or not isinstance(self.n_records, int) or self.n_records < 1:
            raise ValueError(f"n_records must be a positive integer, got {self.n_records!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed!r}")

    @property
    def entity(self) -> str:
        return ENTITY_NAMES[self.kind]


def _timestamp(i: int) -> str:
    return (EPOCH + STEP * i).strftime("%Y-%m-%dT%H:%M:%SZ")


def _iot(rng: SplitMix64, i: int) -> dict:
    return {
        "device_id": f"sensor-{i % 50 + 1:03d}",
        "timestamp": _timestamp(i),
        "temperature": round(rng.uniform(15.0, 35.0), 1),
        "humidity": round(rng.uniform(30.0, 70.0), 1),
        "pressure": round(rng.uniform(980.0, 1040.0), 1),
        "battery_level": rng.randint(0, 100),
        "location": {
            "lat": round(rng.uniform(37.70, 37.80), 2),
            "lon": round(rng.uniform(-122.50, -122.40), 2),
        },
    }


def _metrics(rng: SplitMix64, i: int) -> dict:
    return {
        "host": f"host-{i % 20 + 1:02d}",
        "timestamp": _timestamp(i),
        "cpu_percent": round(rng.uniform(0.0, 100.0), 1),
        "memory_percent": round(rng.uniform(0.0, 100.0), 1),
        "disk_io_read": rng.decade_int(COUNTER_DIGITS),
        "disk_io_write": rng.decade_int(COUNTER_DIGITS),
        "network_in": rng.decade_int(COUNTER_DIGITS),
        "network_out": rng.decade_int(COUNTER_DIGITS),
    }


def _logs(rng: SplitMix64, i: int) -> dict:
    template = rng.choice(MESSAGES)
    return {
        "timestamp": _timestamp(i),
        "level": rng.choice(LOG_LEVELS, LOG_LEVEL_WEIGHTS),
        "service": rng.choice(SERVICES),
        "message": template.format(rng.randint(1, 999)),
        "request_id": f"{rng.next_u64() & 0xFFFFFFFF:08x}",
        "duration_ms": rng.randint(1, 5000),
        "status_code": rng.choice(STATUS_CODES, STATUS_WEIGHTS),
    }


_GENERATORS = {"iot": _iot, "metrics": _metrics, "logs": _logs}


def generate(spec: DatasetSpec) -> list[dict]:
    rng = SplitMix64(spec.seed)
    make = _GENERATORS[spec.kind]
    return [make(rng, i) for i in range(spec.n_records)]
