import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schurlift.fixtures import load_fixture  # noqa: E402

FIXTURE_NAMES = ["trivial", "a4", "s4", "psl27", "sl29", "v1080"]


@pytest.fixture(scope="session")
def tables():
    return {name: load_fixture(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def a4(tables):
    return tables["a4"]


@pytest.fixture(scope="session")
def v1080(tables):
    return tables["v1080"]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
