import sys
import time
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from abelcurves.curves import find_invariant_curves, verify_invariance  # noqa: E402
from abelcurves.families import random_instance  # noqa: E402
from abelcurves.frontend import POLY_GAUSSIAN, POLY_RATIONAL, TRIG  # noqa: E402

settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")

ACCEPTANCE_LINES = []

POOL_SIZE = 500
RINGS = (POLY_RATIONAL, POLY_GAUSSIAN, TRIG)


def record(line):
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="session")
def pool():
    """500 generated instances per ring with their found curves and the wall time."""
    start = time.perf_counter()
    out = []
    for ring in RINGS:
        for seed in range(POOL_SIZE):
            eq, prescribed = random_instance(seed, ring)
            found = find_invariant_curves(eq)
            residuals = [verify_invariance(c.p, -1, eq)[1] for c in prescribed]
            out.append({"ring": ring, "seed": seed, "eq": eq, "prescribed": prescribed,
                        "found": found, "residuals": residuals})
    return out, time.perf_counter() - start


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
