"""Exact closed forms: Catalan numbers, family counts and upper bounds.

All arithmetic is on Python ints and ``fractions.Fraction``; nothing here
touches floating point.
"""
from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("catalan index must be nonnegative")
    return comb(2 * m, m) // (m + 1)


def catalan_by_recurrence(limit: int) -> list[int]:
    """C_0..C_limit from C_{m+1} = sum_j C_j C_{m-j}; independent of ``catalan``."""
    c = [1]
    for m in range(limit):
        c.append(sum(c[j] * c[m - j] for j in range(m + 1)))
    return c


def count_double_chain(k: int) -> int:
    if k < 2:
        raise ValueError("double chain needs k >= 2")
    return comb(2 * k - 2, k - 1) * catalan(k - 2) ** 2


def count_double_circle(k: int) -> int:
    """Inclusion-exclusion over the k forbidden hull edges of the inner 2k-gon."""
    if k < 3:
        raise ValueError("double circle needs k >= 3")
    return sum((-1) ** i * comb(k, i) * catalan(2 * k - i - 2) for i in range(k + 1))


def count_modified_double_chain(k: int) -> int:
    if k < 3:
        raise ValueError("modified double chain needs k >= 3")
    direct = comb(2 * k - 4, k - 2) * catalan(k - 1) ** 2
    via_ratio = modified_to_plain_ratio(k) * count_double_chain(k)
    if via_ratio != direct:
        raise ArithmeticError(f"closed forms disagree at k={k}")
    return direct


def modified_to_plain_ratio(k: int) -> Fraction:
    return Fraction((2 * k - 3) * (2 * k - 2), k * k)


def theorem_bound(v: int, b: int) -> Fraction:
    """59^v 7^b / C(v+b+6, 6)."""
    _check_vb(v, b)
    return Fraction(59**v * 7**b, comb(v + b + 6, 6))


def remark_bound(v: int, b: int) -> Fraction:
    """60^v 7^b / C(b+6, 6), for triangulations that may skip interior points."""
    _check_vb(v, b)
    return Fraction(60**v * 7**b, comb(b + 6, 6))


def remark_bound_sum(v: int, b: int) -> Fraction:
    """sum_i C(v,i) theorem_bound(i, b), the sharper middle term of the subset bound."""
    _check_vb(v, b)
    return sum((comb(v, i) * theorem_bound(i, b) for i in range(v + 1)), Fraction(0))


def induction_step_holds(v: int, b: int) -> bool:
    """(6+v+b) * bound(v,b) == (v+b) * 59^v 7^b / C(v+b+5, 6), exactly."""
    lhs = (6 + v + b) * theorem_bound(v, b)
    rhs = Fraction((v + b) * 59**v * 7**b, comb(v + b + 5, 6))
    return lhs == rhs


def insertion_bound(i: int, location: str) -> int:
    """Largest number of ways to insert a point with degree i into one triangulation."""
    if location == "interior":
        if i < 3:
            raise ValueError("interior degree is at least 3")
        diff = catalan(i - 1) - catalan(i - 2)
        closed = Fraction(3, 2 * i - 3) * comb(2 * i - 3, i - 3)
        if closed != diff:
            raise ArithmeticError(f"interior insertion forms disagree at i={i}")
        return diff
    if location == "boundary":
        if i < 2:
            raise ValueError("boundary degree is at least 2")
        return catalan(i - 2)
    raise ValueError(f"location must be 'interior' or 'boundary', not {location!r}")


def deletion_bound(i: int) -> int:
    return catalan(i - 2)


def _check_vb(v: int, b: int) -> None:
    if v < 0 or b < 3:
        raise ValueError(f"need v >= 0 and b >= 3, got v={v}, b={b}")


def decimal_approx(x: Fraction, digits: int = 6) -> str:
    """Correctly rounded decimal with ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))
