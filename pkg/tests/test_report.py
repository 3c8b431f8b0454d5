import pytest
from hypothesis import given, strategies as st

from ifixity.report import CRITERION, EXACT, LOWER_BOUND, ZERO_ODD_ORDER, FixityReport, exceeds_power


@given(st.integers(0, 10**12), st.integers(2, 10**15))
def test_exceeds_power_matches_rational_exponent(value, n):
    assert exceeds_power(value, n, 4, 9) == (value**9 > n**4)


def test_threshold_boundary_is_exact():
    # 2^9 = 512 = 8^3 = (2^9)^(1/3) exactly: not strictly above
    assert not exceeds_power(8, 512, 1, 3)
    assert exceeds_power(9, 512, 1, 3)
    assert not exceeds_power(16, 512, 4, 9)


def test_summaries():
    assert FixityReport(39916800, 3840, EXACT).summary() == \
        "ifix=3840 n=39916800 alpha=0.47155 exact verdict:>n^(4/9)"
    assert FixityReport(266, 10, EXACT).summary().endswith("verdict:<=n^(4/9),>n^(1/3)")
    assert FixityReport(1045, 5, EXACT).summary().endswith("verdict:<=n^(4/9)")
    assert FixityReport(40320, 0, ZERO_ODD_ORDER).summary() == "ifix=0 n=40320 zero_odd_order verdict:<=n^(4/9)"
    assert FixityReport(10**6, 3, LOWER_BOUND).summary().endswith("verdict:undecided")
    r = FixityReport(None, None, CRITERION, criterion=False)
    assert r.summary() == "ifix=? n=? criterion verdict:criterion-not-met"


def test_record():
    rec = FixityReport(6, 2, EXACT, "x").to_record()
    assert rec == {"label": "x", "kind": "exact", "n": "6", "value": "2", "alpha": 0.38685,
                   "verdicts": {"4/9": False, "1/3": True, "1/2": False, "1/6": True}}


def test_invalid_kinds():
    with pytest.raises(ValueError):
        FixityReport(1, 1, "approximate")
    with pytest.raises(ValueError):
        FixityReport(None, None, CRITERION)
