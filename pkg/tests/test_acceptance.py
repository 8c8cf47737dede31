"""Exit criteria.  Each prints one PASS/FAIL line (visible with ``pytest -s``)."""
import pytest

from semitorsion import kernels
from semitorsion.verify import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    res = run_criterion(number)
    print(f"\n[{kernels.BACKEND}] {res.line()}")
    assert res.passed, res.detail
