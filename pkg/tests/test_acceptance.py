"""All thirteen acceptance criteria, each run at its runtime bound.

Every test prints one PASS/FAIL line; the lines are repeated in the terminal
summary (see conftest.py) so they appear together at the end of the run.
"""
import pytest

from boomerang.acceptance import CRITERIA, run_criterion

RESULT_LINES = []


@pytest.mark.parametrize("number", [n for n, *_ in CRITERIA], ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number):
    result = run_criterion(number, seed=0, fast=False)
    line = result.line(timing=True)
    RESULT_LINES.append(line)
    print(line)
    assert result.passed, result.details[:5]
    assert result.seconds < result.bound, f"took {result.seconds:.2f}s, bound {result.bound}s"
