import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from kwiener.graph import Graph, is_connected  # noqa: E402

ACCEPTANCE_RESULTS = {}


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if connected:
        # thread a random spanning path so the graph is always connected
        order = draw(st.permutations(range(n)))
        path = {tuple(sorted(p)) for p in zip(order, order[1:])}
        chosen = sorted(set(chosen) | path)
    g = Graph.from_edges(n, chosen)
    if connected:
        assert is_connected(g)
    return g


@pytest.fixture
def record_criterion():
    def record(number, title, passed, detail=""):
        ACCEPTANCE_RESULTS[number] = (title, passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed, detail = ACCEPTANCE_RESULTS[number]
        mark = "PASS" if passed else "FAIL"
        line = f"[{mark}] AC{number}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
