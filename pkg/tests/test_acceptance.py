"""One test per acceptance criterion.

Each result line is also collected and printed in the terminal summary, so
a plain ``pytest`` run ends with one PASS/FAIL line per criterion.
"""

import pytest

from qhall.acceptance import CRITERIA, run_one

RESULTS = []


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"c{c.key:02d}_{c.name.replace(' ', '_')}" for c in CRITERIA])
def test_criterion(criterion):
    result = run_one(criterion)
    RESULTS.append(result)
    print(result.line())
    assert result.passed, result.detail
