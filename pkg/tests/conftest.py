from pathlib import Path

import pytest

from subtopes.cycles import load_cycle, random_cycle

DATA = Path(__file__).resolve().parent.parent / "data"
CYCLE6_FILE = DATA / "cycle6.cycle"

# fixed seeds for the random symmetric cycles used by property suites
RANDOM_SEEDS = (11, 23, 37)

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def cycle6():
    """Symmetric 12-cycle in H(6,2) starting at (-,+,+,+,-,+)."""
    return load_cycle(CYCLE6_FILE)


@pytest.fixture(scope="session")
def cycle6_path():
    return str(CYCLE6_FILE)


def random_cycles(t):
    return [random_cycle(t, seed) for seed in RANDOM_SEEDS]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
