import pytest

from horocox.builtin import example_document
from horocox.document import build


@pytest.fixture(scope="session")
def sl3():
    return build(example_document("sl3"))


@pytest.fixture(scope="session")
def p1xp1():
    return build(example_document("p1xp1"))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
