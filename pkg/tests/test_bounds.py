import math

import pytest

from thompsonv.bounds import birget_upper, new_upper


def test_birget_upper():
    assert birget_upper(0) == 0.0
    assert birget_upper(1) == 0.0
    assert birget_upper(2) == 2.0
    assert birget_upper(8) == 24.0
    with pytest.raises(ValueError):
        birget_upper(-1)


def test_new_upper():
    assert new_upper(5, 1) == 5.0  # order-preserving case: just the caret count
    assert new_upper(5, 2) == 7.0  # cyclic case: fixed additive term
    assert new_upper(4, 4) == 12.0
    assert new_upper(0, 1) == 0.0
    assert new_upper(7, 3) == pytest.approx(7 + 3 * math.log2(3))


def test_new_upper_range_check():
    for n, b in [(3, 0), (3, 5), (0, 2)]:
        with pytest.raises(ValueError):
            new_upper(n, b)
