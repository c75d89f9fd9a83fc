"""Acceptance criteria 1-15, each run from scratch at its stated tolerance.

Every criterion prints one PASS/FAIL line.  Criteria 4 and 8 are expected to
fail: the exact solver disagrees with the published values (see README).
Run ``python tests/test_acceptance.py`` for the summary lines alone.
"""

import sys
import time

import pytest

from cheatbot.cli.suites import CRITERIA, Ctx, long_enabled

# per-criterion wall-time targets in seconds
TARGETS = {1: 120, 2: 10, 3: 60, 4: 60, 5: 120, 6: 60, 7: 1800, 8: 600, 9: 1800, 10: 1200, 11: 900,
           12: 600, 13: 300, 14: 1800, 15: 60}


def evaluate(criterion):
    t = time.perf_counter()
    checks = CRITERIA[criterion](Ctx(long=long_enabled()))
    secs = time.perf_counter() - t
    failed = [c for c in checks if not c.passed and not c.informational]
    ok = not failed and secs <= TARGETS[criterion]
    detail = "; ".join(f"{c.claim}: expected {c.expected}, got {c.computed}" for c in failed)
    if secs > TARGETS[criterion]:
        detail = (detail + "; " if detail else "") + f"took {secs:.0f}s > {TARGETS[criterion]}s"
    line = f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'} ({len(checks)} checks, {secs:.1f}s)"
    return ok, line + (f" -- {detail}" if detail else "")


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(criterion, capsys):
    ok, line = evaluate(criterion)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c) for c in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
