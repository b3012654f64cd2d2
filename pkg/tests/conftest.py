import os
import sys
from pathlib import Path

import pytest

from onto.tokenizer import RANK_FILE_ENV, load_model

DATA = Path(__file__).parent / "data"

# Places a cl100k_base rank file is commonly found when $ONTO_RANK_FILE is unset.
_CANDIDATES = [
    Path.home() / ".cache" / "onto" / "cl100k_base.tiktoken",
    Path("/usr/local/lib/python3.10/dist-packages/marimo/_lsp/copilot/cl100k_base.tiktoken"),
]

REFERENCE_LISTING = """\
Telemetry[3]:
    device_id: sensor-001|sensor-002|sensor-003
    temperature: 23.5|24.1|22.9
    humidity: 45.2|43.8|46.1
    location:
        lat: 37.77|37.78|37.79
        lon: -122.41|-122.42|-122.43
"""

REFERENCE_RECORDS = [
    {"device_id": "sensor-001", "temperature": 23.5, "humidity": 45.2,
     "location": {"lat": 37.77, "lon": -122.41}},
    {"device_id": "sensor-002", "temperature": 24.1, "humidity": 43.8,
     "location": {"lat": 37.78, "lon": -122.42}},
    {"device_id": "sensor-003", "temperature": 22.9, "humidity": 46.1,
     "location": {"lat": 37.79, "lon": -122.43}},
]


def find_rank_file():
    env = os.environ.get(RANK_FILE_ENV)
    if env:
        return Path(env)
    for path in _CANDIDATES:
        if path.is_file():
            return path
    return None


@pytest.fixture(scope="session")
def rank_file():
    path = find_rank_file()
    if path is None:
        pytest.skip(f"cl100k_base rank file not found; set {RANK_FILE_ENV}")
    return path


@pytest.fixture(scope="session")
def cl100k(rank_file):
    return load_model(rank_file)


@pytest.fixture
def tiny_rank_file():
    return DATA / "tiny.tiktoken"


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance suite's PASS/FAIL/SKIP lines after the run."""
    module = sys.modules.get("test_acceptance")
    lines = list(getattr(module, "RESULTS", []))
    for report in terminalreporter.stats.get("skipped", []):
        if "test_acceptance" in report.nodeid:
            lines.append(f"SKIP  {report.nodeid.split('::')[-1]}: {report.longrepr[-1]}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
