"""Timing checks for the full pipeline on the shipped specs."""

import time

import pytest

from groupoidlab.io import parse_spec
from groupoidlab.runner import run_checks
from tests.conftest import CONFIGS

FIXTURES = ["z2.yaml", "s3.yaml", "pair2.yaml", "pair3.yaml", "pair2_function.yaml", "union.yaml"]


def _timed(name):
    start = time.perf_counter()
    report = run_checks(parse_spec(CONFIGS / name))
    return report, time.perf_counter() - start


@pytest.mark.benchmark
def test_shipped_fixtures_within_ten_seconds():
    """Every check passes on all six fixtures, in under ten seconds in total."""
    total = 0.0
    for name in FIXTURES:
        report, elapsed = _timed(name)
        assert report.all_passed, (name, [c.check_id for c in report.failed()])
        assert report.max_residual < 1e-9, name
        print(f"\n{name}: {len(report)} checks in {elapsed:.2f}s")
        total += elapsed
    assert total < 10.0


@pytest.mark.benchmark
def test_pair3_pipeline():
    """The nine-dimensional pair groupoid is the largest fixture; it alone stays well inside the budget."""
    report, elapsed = _timed("pair3.yaml")
    assert report.all_passed, [c.check_id for c in report.failed()]
    assert elapsed < 8.0
