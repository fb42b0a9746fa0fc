from pathlib import Path

import pytest

from heptacyc.bandfile import load_band_file, load_dense_csv

from helpers import ACCEPTANCE

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def dense_A():
    return load_dense_csv(FIXTURES / "A.csv")


@pytest.fixture(scope="session")
def dense_B():
    return load_dense_csv(FIXTURES / "B.csv")


@pytest.fixture(scope="session")
def hepta_A():
    return load_band_file(FIXTURES / "A.json")


@pytest.fixture(scope="session")
def hepta_B():
    return load_band_file(FIXTURES / "B.json")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
