import pytest

from circlerep.graph import build_graph
from circlerep.words import parse_word

TAU_STAR = "s u s x v x t u t w v w"
GSTAR_EDGES = [("s", "u"), ("t", "u"), ("u", "v"), ("v", "x"), ("v", "w")]


@pytest.fixture
def gstar():
    return build_graph(["s", "t", "u", "v", "w", "x"], GSTAR_EDGES)


@pytest.fixture
def tau_star():
    return parse_word(TAU_STAR)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = next((m for n, m in sys.modules.items() if n.endswith("test_acceptance")), None)
    rows = getattr(mod, "RESULTS", [])
    if rows:
        terminalreporter.section("acceptance criteria")
        for row in rows:
            terminalreporter.write_line(row)
