import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from twinwidth import Trigraph  # noqa: E402


def path(n):
    return Trigraph.from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return Trigraph.from_edge_list(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n):
    return Trigraph.from_edge_list(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def random_edges(rng: random.Random, n: int, p: float | None = None):
    if p is None:
        p = rng.random()
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]


def random_corpus(count: int, max_n: int = 8, seed: int = 2023):
    """``count`` random graphs as ``(n, edges)``, sizes 1..max_n weighted toward max_n."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice([max_n] * 3 + list(range(1, max_n + 1)))
        out.append((n, random_edges(rng, n)))
    return out


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def c5():
    return cycle(5)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line per criterion; printed in the terminal summary."""
    import time

    start = time.perf_counter()
    holder = {}

    def record(number: int, ok: bool, detail: str, limit_s: float):
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < limit_s
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s / {limit_s:g}s) {detail}"
        holder["line"] = line
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    yield record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
