import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--run-e8", action="store_true", default=False, help="run the E8 enumeration (tens of minutes)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-e8"):
        return
    skip = pytest.mark.skip(reason="needs --run-e8")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
