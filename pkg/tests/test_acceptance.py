"""Acceptance gate: one check per criterion, all exact.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines.
"""

import time

import pytest

from hfsets import acceptance


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: c.key)
def test_criterion(criterion):
    result = acceptance.run_one(criterion)
    print(result.line())
    assert result.ok, result.detail


def test_total_runtime_budget():
    t0 = time.perf_counter()
    results = acceptance.run()
    elapsed = time.perf_counter() - t0
    for r in results:
        print(r.line())
    assert all(r.ok for r in results)
    assert elapsed < 60, f"{elapsed:.1f}s"
