import math

import numpy as np
import pytest

from risbeam import design, reference_inputs, sample_to_grid

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def reference_setup():
    """Reference two-spot setup: 32x32 array, 128x128 grid, normal incidence."""
    inp = reference_inputs(32, 4)
    grid = sample_to_grid(inp.pattern, inp.grid, inp.ris)
    v, report = design(inp.pattern, inp.ris, inp.grid, inp.incidents)
    return inp, grid, v, report


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


PI = math.pi
