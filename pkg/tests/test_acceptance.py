"""Acceptance criteria, one named suite each, at the stated tolerances and time budgets.

Run directly (``python tests/test_acceptance.py``) or under pytest; either
way one PASS/FAIL line is printed per criterion.
"""

from __future__ import annotations

import pytest

from spatialdigraph.verify import SUITES, run_suite

CRITERIA = sorted((c, name) for name, (c, *_rest) in SUITES.items() if c > 0)
RESULTS: dict[int, str] = {}


def summary_line(r) -> str:
    status = "PASS" if r.ok else "FAIL"
    bad = r.failures()
    detail = f"{len(r.checks)} checks, {len(bad)} failed, {r.seconds:.2f}s of {r.budget:.0f}s"
    if r.seconds > r.budget:
        detail += "; over the time budget"
    if bad:
        detail += f"; first failure: {bad[0].name}" + (f" ({bad[0].detail})" if bad[0].detail else "")
    return f"criterion {r.criterion:>2} [{r.suite}] {status}: {r.title} -- {detail}"


@pytest.mark.parametrize("criterion, suite", CRITERIA, ids=[f"criterion_{c}_{s}" for c, s in CRITERIA])
def test_criterion(criterion, suite):
    r = run_suite(suite, seed=0)
    line = summary_line(r)
    RESULTS[criterion] = line
    print(line)
    assert r.checks, "suite recorded no checks"
    if not r.ok:
        pytest.fail(line + "\n" + "\n".join(f"{c.name}: {c.detail}" for c in r.failures()[:5]), pytrace=False)


def test_density_pipeline_where_the_threshold_is_attainable():
    # supplementary, not a criterion: the same checks at n = 11..13
    r = run_suite("density_beyond", seed=0)
    assert r.checks and r.ok, [c.name for c in r.failures()]


if __name__ == "__main__":
    for c, s in CRITERIA:
        print(summary_line(run_suite(s, seed=0)), flush=True)
