"""
Test configuration and shared fixtures for the griesmer-lab test suite.

Provides small fields and codes used across modules, a helper that writes
codefiles into a temporary directory, and a command-line runner.
"""

import pytest
from pathlib import Path
from typing import Callable

from src.buildkit import counterexample_ck, simplex
from src.cli.main import run
from src.codekit import Code, write_code
from src.fieldcore import field_new


# Field Fixtures
@pytest.fixture
def gf2():
    return field_new(2)


@pytest.fixture
def gf3():
    return field_new(3)


@pytest.fixture
def gf4():
    """GF(4) built from x^2 + x + 1; element 2 is x, element 3 is x + 1."""
    return field_new(4)


# Code Fixtures
@pytest.fixture
def repetition3() -> Code:
    return Code.binary(["000", "111"])


@pytest.fixture
def even_weight3() -> Code:
    """The [3, 2, 2] parity code, systematic on its first two coordinates."""
    return Code.binary(["000", "011", "101", "110"], systematic_coords=[0, 1])


@pytest.fixture
def simplex3() -> Code:
    return simplex(3).span()


@pytest.fixture(scope="session")
def c4() -> Code:
    return counterexample_ck(4)


@pytest.fixture
def codefile(tmp_path) -> Callable[[Code, str], Path]:
    """Write a code to ``tmp_path / name`` and return the path."""

    def _write(code: Code, name: str = "code.txt") -> Path:
        return write_code(code, tmp_path / name)

    return _write


# Command-line Fixtures
@pytest.fixture
def cli(capsys, monkeypatch):
    """Run the command line with a single worker; returns (exit_code, stdout)."""
    monkeypatch.setenv("GRIESMER_LAB_THREADS", "1")

    def _run(*argv: str):
        code = run([str(a) for a in argv])
        return code, capsys.readouterr().out

    return _run


def pytest_configure(config):
    """
    Configure custom pytest markers.
    """
    config.addinivalue_line(
        "markers", "unit: marks tests as unit tests (deselect with '-m \"not unit\"')"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests (deselect with '-m \"not integration\"')"
    )
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "acceptance: marks reproductions of published values"
    )


def pytest_collection_modifyitems(config, items):
    """
    Automatically mark tests based on their location.
    """
    for item in items:
        path = str(item.fspath)
        if "/unit/" in path:
            item.add_marker(pytest.mark.unit)
        elif "/integration/" in path:
            item.add_marker(pytest.mark.integration)
        if "acceptance" in Path(path).name:
            item.add_marker(pytest.mark.acceptance)
