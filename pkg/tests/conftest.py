from pathlib import Path

import pytest

from mvskew import DataMatrix, load_csv

DATA_DIR = Path(__file__).resolve().parents[1] / "data"

# outcome of each acceptance criterion test, for the terminal summary
_acceptance: dict[str, str] = {}


@pytest.fixture(scope="session")
def iris_path() -> Path:
    return DATA_DIR / "iris.csv"


@pytest.fixture(scope="session")
def iris(iris_path) -> DataMatrix:
    return load_csv(iris_path, columns=[1, 2, 3, 4])


@pytest.fixture(scope="session")
def setosa(iris) -> DataMatrix:
    return iris.select_rows(range(50))


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        outcome = _acceptance[name].upper()
        terminalreporter.write_line(f"{name}: {outcome}")
