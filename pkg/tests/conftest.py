from fractions import Fraction

import pytest

_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    ok = call.excinfo is None
    previous = _criteria.get(number, (title, True))
    _criteria[number] = (title, previous[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")


def exact_stop_weights(hazards):
    """Stop weights by exact rational arithmetic, walking the browsing chain."""
    reach = Fraction(1)
    weights = []
    for p in hazards:
        p = Fraction(p)
        weights.append(reach * p)
        reach *= 1 - p
    return weights, reach


@pytest.fixture
def fixture_paths():
    from pathlib import Path

    root = Path(__file__).parent / "data"
    return {
        "qrels": str(root / "qrels.txt"),
        "run": str(root / "run.txt"),
        "empty_run": str(root / "empty_run.txt"),
    }
