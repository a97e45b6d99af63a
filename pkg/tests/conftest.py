from pathlib import Path

import pytest

from semisep import Semigroup, parse_semigroup
from semisep.corpus import corpus_up_to

DATA = Path(__file__).parent / "data"

ACCEPTANCE: dict[str, list[tuple[bool, str]]] = {}


def record(criterion: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(criterion, []).append((passed, detail))


@pytest.fixture(scope="session")
def example():
    """The 4-element semigroup {0, a, b, 1} with indices 0..3."""
    return parse_semigroup((DATA / "example.tbl").read_text())


@pytest.fixture(scope="session")
def left_zero():
    return Semigroup([[0, 0], [1, 1]])


@pytest.fixture(scope="session")
def semilattice():
    return Semigroup([[0, 0], [0, 1]])


@pytest.fixture(scope="session")
def trivial():
    return Semigroup([[0]])


@pytest.fixture(scope="session")
def corpus3():
    return corpus_up_to(3)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE, key=lambda c: int(c.split()[0])):
        rows = ACCEPTANCE[crit]
        ok = all(p for p, _ in rows)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {crit}")
        for p, detail in rows:
            if detail:
                terminalreporter.write_line(f"        {'ok ' if p else 'BAD'} {detail}")
