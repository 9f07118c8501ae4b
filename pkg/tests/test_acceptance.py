"""The eleven acceptance criteria, each run at full scale with seed 1.

Each test prints one PASS/FAIL line (uncaptured) naming any failing claims
with their expected and measured values, then asserts the suite passed.
"""

import pytest

from genturan.verify import SUITES, run_verify

CRITERIA = sorted(SUITES, key=lambda name: SUITES[name][0])


@pytest.mark.parametrize("suite", CRITERIA)
def test_acceptance_criterion(suite, capsys):
    number = SUITES[suite][0]
    report = run_verify(suite, "full", 1)
    failed = [c for c in report.claims if c.status == "fail"]
    line = f"{'PASS' if not failed else 'FAIL'} criterion {number:2d} {suite} ({len(report.claims)} claims)"
    if failed:
        line += ": " + "; ".join(f"{c.claim} expected {c.expected} measured {c.measured}" for c in failed)
    with capsys.disabled():
        print("\n" + line)
    assert report.claims, "suite recorded no claims"
    assert not failed, line
