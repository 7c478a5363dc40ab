import pytest

from equivqp.corpus import rotation_period_ten, swap_antidiagonal, swap_empty, three_lines_negation


@pytest.fixture
def three_lines():
    return three_lines_negation()


@pytest.fixture
def swap_line():
    return swap_antidiagonal()


@pytest.fixture
def rotation():
    return rotation_period_ten()


@pytest.fixture
def swap_nothing():
    return swap_empty()


def pytest_terminal_summary(terminalreporter):
    import sys
    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance") and getattr(mod, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for line in mod.RESULTS:
                terminalreporter.write_line(line)
