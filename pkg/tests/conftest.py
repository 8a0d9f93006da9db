import pytest
from hypothesis import strategies as st

from tricount.families import random_points

# lines printed by the acceptance suite, replayed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)


@st.composite
def point_sets(draw, min_n=3, max_n=7):
    """Seeded random point sets in general position."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_points(n, seed)


@pytest.fixture
def tmp_cache(tmp_path, monkeypatch):
    path = tmp_path / "cache.jsonl"
    monkeypatch.setenv("TRICOUNT_CACHE", str(path))
    return path
