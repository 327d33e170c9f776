"""Shared fixtures and the acceptance-line reporter."""

import sys
from pathlib import Path

import numpy as np
import pytest

from eitnoise import ModelParams

sys.path.insert(0, str(Path(__file__).parent))

_CRITERION_LINES: list[str] = []


def record_criterion(line: str) -> None:
    """Collect a one-line acceptance verdict for the terminal summary."""
    _CRITERION_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in _CRITERION_LINES:
        terminalreporter.write_line(line)


def draw_params(rng: np.random.Generator, equal_drives: bool = False) -> ModelParams:
    """Random physical parameter draw used by identity sweeps."""
    om1 = float(rng.uniform(0.2, 3.0)) * float(rng.choice([-1.0, 1.0]))
    if equal_drives:
        om2 = om1
    else:
        om2 = float(rng.uniform(0.2, 3.0)) * float(rng.choice([-1.0, 1.0]))
    return ModelParams(
        omega1=om1, omega2=om2,
        coupling_density=float(rng.uniform(0.5, 2.0)),
        r=float(rng.uniform(0.0, 2.0)),
        eta=float(rng.uniform(0.0, 1.0)),
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260814)
