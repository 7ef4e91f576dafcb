"""Acceptance criteria, one test per criterion.

The shared run builds the fully certified tool chain once (default sweep
bounds, so the golden-floor relation is checked against the exact oracle up
to 10**6) and verifies all six arrays; each test then asserts its
criterion's line and prints it.
"""

import pytest

from stolarsky.acceptance import run_all


@pytest.fixture(scope="module")
def acceptance_lines(tmp_path_factory):
    store = tmp_path_factory.mktemp("acceptance-store")
    lines = run_all(store)
    return {line.criterion: line for line in lines}


@pytest.mark.parametrize(
    "criterion",
    [1, 2, 3, 4, 5, 6, 7, 8, 9],
    ids=[
        "tables",
        "bootstrap",
        "lemmas",
        "eval-suite",
        "state-counts",
        "pipeline",
        "classification",
        "inference",
        "script",
    ],
)
def test_criterion(acceptance_lines, criterion):
    line = acceptance_lines[criterion]
    print(line.render())
    assert line.passed, line.render()
