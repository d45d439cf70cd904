from pathlib import Path

import pytest

from matroid_k0.matroid import from_graph

DATA = Path(__file__).resolve().parent.parent / "data"

# edges a..e of the 4-cycle with a chord, labelled 1..5
SQUARE_EDGES = [(0, 3, 1), (3, 2, 2), (2, 1, 3), (1, 0, 4), (3, 1, 5)]
SQUARE_BASES = {
    frozenset(s)
    for s in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (1, 3, 5), (5, 2, 4), (5, 3, 4)]
}
SQUARE_POLY = "x^3 + 2*x^2 + 2*x*y + x + y^2 + y"


@pytest.fixture
def square():
    return from_graph(4, SQUARE_EDGES)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, detail = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
