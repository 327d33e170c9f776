import subprocess
import sys

import pytest

_CRITERION_LINES = []


def record_criterion(line: str) -> None:
    _CRITERION_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def tables(tmp_path_factory):
    """Figure tables produced through the eitnoise command line.

    The renderer consumes the producing tool only via its public CLI, so
    the fixture shells out rather than importing it.
    """
    root = tmp_path_factory.mktemp("tables")
    for name in ("fig2", "fig3", "fig4", "fig5"):
        proc = subprocess.run(
            [sys.executable, "-m", "eitnoise.cli", "figure", name,
             "--defaults", "--out", str(root / f"{name}.csv")],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
    return root
