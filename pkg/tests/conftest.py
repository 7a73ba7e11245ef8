import pytest

from garside_lcm import preset


@pytest.fixture(scope="session")
def a2t():
    return preset("A2t")


@pytest.fixture(scope="session")
def b3():
    return preset("B3")


@pytest.fixture(scope="session")
def a3():
    return preset("A3")


def words(p, *texts):
    """Parse positive words over ``p``'s alphabet."""
    parsed = tuple(p.alphabet.parse(t) for t in texts)
    return parsed[0] if len(parsed) == 1 else parsed


# -- acceptance report --------------------------------------------------------

ACCEPTANCE = []


class criterion:
    """Record one acceptance line: PASS if the block finishes, FAIL otherwise."""

    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.details = []

    def note(self, text):
        self.details.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        verdict = "PASS" if exc_type is None else "FAIL"
        detail = "; ".join(self.details)
        if exc_type is not None:
            detail = (detail + "; " if detail else "") + f"{exc_type.__name__}: {exc}"
        line = f"[{verdict}] criterion {self.number}: {self.title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE.append(line)
        print(line)
        return False


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
