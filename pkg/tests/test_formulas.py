import math
from fractions import Fraction
from math import comb

import pytest

from tricount import formulas
from tricount.formulas import (
    catalan,
    catalan_by_recurrence,
    count_double_chain,
    count_double_circle,
    count_modified_double_chain,
    decimal_approx,
    insertion_bound,
    remark_bound,
    theorem_bound,
)


@pytest.mark.parametrize("m,value", [(0, 1), (4, 14), (8, 1430)])
def test_catalan_examples(m, value):
    assert catalan(m) == value


def test_catalan_recurrence():
    rec = catalan_by_recurrence(20)
    assert [catalan(m) for m in range(21)] == rec


def test_double_chain_examples():
    assert count_double_chain(3) == 6
    assert count_double_chain(5) == 1750
    assert count_double_chain(9) == 12870 * 429**2


def test_double_chain_growth_band():
    # value / (64^k k^-7/2) decreases toward 1 / (1024 pi^1.5)
    limit = 1 / (1024 * math.pi**1.5)
    ratios = [count_double_chain(k) * k**3.5 / 64**k for k in range(8, 13)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert all(limit < r < 2 * limit for r in ratios)


@pytest.mark.parametrize("k,value", [(3, 4), (4, 30), (5, 250)])
def test_double_circle_examples(k, value):
    assert count_double_circle(k) == value


def test_double_circle_below_12k():
    assert all(count_double_circle(k) <= 12**k for k in range(3, 65))


def test_modified_double_chain():
    assert [count_modified_double_chain(k) for k in (3, 4, 5)] == [8, 150, 3920]
    assert count_modified_double_chain(9) < 17_309_628_327
    for k in range(3, 41):
        ratio = Fraction(count_modified_double_chain(k), count_double_chain(k))
        assert ratio == Fraction((2 * k - 3) * (2 * k - 2), k * k)
    for k in range(20, 41):
        assert Fraction(7, 2) <= formulas.modified_to_plain_ratio(k) < 4


def test_theorem_bound_examples():
    assert theorem_bound(0, 3) == Fraction(49, 12)
    assert theorem_bound(0, 3) == Fraction(343, 84)
    assert theorem_bound(1, 3) == Fraction(59 * 343, comb(10, 6))
    assert theorem_bound(1, 3) == Fraction(20237, 210)
    assert theorem_bound(0, 10) == Fraction(7**10, comb(16, 6))
    assert theorem_bound(0, 10) > catalan(8)


def test_remark_bound_examples():
    assert remark_bound(0, 3) == Fraction(49, 12)
    assert remark_bound(3, 3) == Fraction(60**3 * 343, 84)
    assert remark_bound(1, 3) > 2
    assert formulas.remark_bound_sum(2, 4) <= remark_bound(2, 4)


def test_induction_identity():
    assert all(formulas.induction_step_holds(v, b) for v in range(31) for b in range(3, 31))


def test_insertion_bound_examples():
    assert insertion_bound(6, "interior") == 28
    assert insertion_bound(3, "interior") == 1
    assert insertion_bound(4, "boundary") == 2
    assert [insertion_bound(i, "interior") for i in (4, 5)] == [3, 9]
    for i in range(3, 65):
        assert catalan(i - 1) - catalan(i - 2) == Fraction(3, 2 * i - 3) * comb(2 * i - 3, i - 3)


def test_domain_errors():
    with pytest.raises(ValueError):
        catalan(-1)
    with pytest.raises(ValueError):
        count_double_chain(1)
    with pytest.raises(ValueError):
        count_double_circle(2)
    with pytest.raises(ValueError):
        theorem_bound(0, 2)
    with pytest.raises(ValueError):
        insertion_bound(2, "interior")
    with pytest.raises(ValueError):
        insertion_bound(4, "middle")


def test_decimal_approx():
    assert decimal_approx(Fraction(49, 12)) == "4.08333"
    assert decimal_approx(Fraction(2, 3)) == "0.666667"
    assert decimal_approx(Fraction(1)) == "1"
