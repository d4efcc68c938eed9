from importlib import resources

import pytest
from hypothesis import settings, strategies as st

from afnorm.presentation import FreeWord, Presentation, parse_presentation

settings.register_profile("default", deadline=None)
settings.load_profile("default")

FIXTURES = resources.files("afnorm") / "fixtures"


def fixture_path(name: str):
    return FIXTURES / name


def load(name: str) -> Presentation:
    return parse_presentation((FIXTURES / f"{name}.pres").read_text())


def presentation_fixtures() -> list[str]:
    return sorted(p.name[:-5] for p in FIXTURES.iterdir() if p.name.endswith(".pres"))


def words(m: int = 3, max_size: int = 8):
    letter = st.tuples(st.integers(0, m - 1), st.integers(-3, 3).filter(bool))
    return st.lists(letter, max_size=max_size).map(lambda ls: FreeWord(tuple(ls)))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
