import random

import pytest

from homlab.extremal import POOL
from homlab.graphs import SimpleGraph


@pytest.fixture(scope="session")
def pool():
    return POOL


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_forest(rng: random.Random, n: int) -> SimpleGraph:
    edges = []
    for v in range(1, n):
        if rng.random() < 0.85:
            edges.append((rng.randrange(v), v))
    perm = list(range(n))
    rng.shuffle(perm)
    return SimpleGraph(n, [(perm[u], perm[v]) for u, v in edges])


# lines recorded by the acceptance suite, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
