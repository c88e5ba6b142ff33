"""Acceptance suite: one test per criterion, exact orders, tolerance zero.

Run with ``pytest -s tests/test_acceptance.py`` to see the pass/fail line
each criterion prints; the same cases back ``cprforge paper``.
"""

import pytest

from cprforge.paper_cases import CASES

CRITERIA = [
    ("criterion-1", "theorem1-simplex-grid"),
    ("criterion-2", "graph-x-refutation"),
    ("criterion-3", "section3-nonexamples"),
    ("criterion-4", "family-orders"),
    ("criterion-5", "speccase-generators"),
    ("criterion-6", "oracle-equivalence"),
    ("criterion-7", "duality-suite"),
    ("criterion-8", "splits-primitivity"),
    ("criterion-9", "engine-selfchecks"),
]


@pytest.mark.parametrize("criterion,case_name", CRITERIA,
                         ids=[c for c, _ in CRITERIA])
def test_acceptance(criterion, case_name):
    result = CASES[case_name]()
    status = "PASS" if result.ok else "FAIL"
    detail = "; ".join(result.lines) if result.lines else ""
    print(f"[{status}] {criterion} ({case_name}) {detail}")
    assert result.ok, "\n".join([f"{criterion} ({case_name})"] + result.lines)
