import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repo", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much]
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def example_run():
    """Worked 3-D example, three projected sequences (kappa is symbolic; 1 only sets the plateau metric)."""
    from nsseq import reference as R
    from nsseq.sequence import run_sequences

    return run_sequences(R.example_v0(), 1.0, 3, 1e-300)


@pytest.fixture(scope="session")
def frozen_run():
    from nsseq import reference as R
    from nsseq.sequence import run_sequences

    return run_sequences(R.example_v0(), 1.0, 2, 1e-300, freeze_gradient=True)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
