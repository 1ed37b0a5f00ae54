import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
sys.path.insert(0, os.path.dirname(__file__))

FIXDIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")

FIXTURE_NAMES = [
    "circle", "digon", "torus", "klein", "grid-diag", "grid-antidiag",
    "isolated-hole", "labelled-grid", "labelled-grid-fine", "segment2",
    "empty",
]


def fixture_path(name: str) -> str:
    return os.path.join(FIXDIR, name + ".json")


@pytest.fixture(scope="session")
def fixdir():
    return FIXDIR
