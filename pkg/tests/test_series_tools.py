from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nonassoc import double_minus as dm
from nonassoc import series_tools as sts
from nonassoc.series_tools import EisensteinInt

SMALL = st.integers(min_value=-50, max_value=50)
EISENSTEIN = st.builds(EisensteinInt, SMALL, SMALL)


def test_omega_squared_identity():
    w = EisensteinInt.omega_power(1)
    assert w * w == EisensteinInt(-1, -1)
    assert w**3 == 1
    assert EisensteinInt(1) + w + w * w == 0


def test_omega_power_wraps():
    assert EisensteinInt.omega_power(-1) == EisensteinInt.omega_power(2)
    assert EisensteinInt.omega_power(5) == EisensteinInt.omega_power(2)


def test_rational_integer_detection():
    assert EisensteinInt(7).is_rational_integer
    assert not EisensteinInt(7, 1).is_rational_integer
    assert EisensteinInt(7) == 7
    assert EisensteinInt(7, 1) != 7


def test_int_mixing_and_str():
    x = EisensteinInt(2, 3)
    assert 1 + x == EisensteinInt(3, 3)
    assert 2 * x == EisensteinInt(4, 6)
    assert 5 - x == EisensteinInt(3, -3)
    assert str(x) == "2+3w"
    assert repr(x) == "EisensteinInt(2, 3)"


@given(EISENSTEIN, EISENSTEIN, EISENSTEIN)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    assert x - y == -(y - x)


@given(EISENSTEIN, st.integers(min_value=0, max_value=12))
def test_pow_matches_repeated_multiplication(x, e):
    expected = EisensteinInt(1)
    for _ in range(e):
        expected = expected * x
    assert x**e == expected


def test_skipping_sum_direct_examples():
    assert sts.skipping_sum_direct(4, 1) == 5
    assert sts.skipping_sum_direct(0, 0) == 1
    assert sts.skipping_sum_direct(0, 1) == 0


def test_skipping_sum_closed_matches_direct():
    for n in range(65):
        for k in range(3):
            assert sts.skipping_sum_closed(n, k) == sts.skipping_sum_direct(n, k)


def test_skipping_sum_negative_k_class():
    assert sts.skipping_sum_closed(30, -1) == sts.skipping_sum_direct(30, 2)


def test_cprime_examples():
    assert sts.cprime(1) == 1
    assert sts.cprime(4) == dm.count_formula(4) + 1 == 11
    assert sts.cprime(5) == 21 == (2**6 - 1) // 3
    with pytest.raises(ValueError):
        sts.cprime(0)


def test_cprime_matches_bruteforce_totals():
    # n odd: equals the distinct-result count; n even: one more
    for n in range(1, 13):
        extra = 1 if n % 2 == 0 else 0
        assert sts.cprime(n) == dm.count_distinct_bruteforce(n) + extra


def test_cprime_closed_form():
    for n in range(1, 65):
        assert 3 * sts.cprime(n) == 2 ** (n + 1) + (-1) ** n


def test_gf_coeffs_values():
    assert sts.gf_coeffs(5) == [1, 2, 5, 10, 21]
    assert sts.gf_coeffs(1) == [1]
    with pytest.raises(ValueError):
        sts.gf_coeffs(0)


def test_gf_coeffs_satisfy_recurrence():
    cs = sts.gf_coeffs(40)
    for m in range(1, 40):
        back2 = cs[m - 2] if m >= 2 else 0
        back3 = cs[m - 3] if m >= 3 else 0
        assert cs[m] == 2 * cs[m - 1] + back2 - 2 * back3


def test_gf_coeffs_match_polynomial_division():
    # multiply the series back by the denominator 1 - 2x - x^2 + 2x^3
    cs = sts.gf_coeffs(10)
    den = [1, -2, -1, 2]
    for m in range(10):
        conv = sum(den[i] * cs[m - i] for i in range(len(den)) if m - i >= 0)
        assert conv == (1 if m == 0 else 0)


def test_gf_coeffs_shifted_counts():
    cs = sts.gf_coeffs(31)
    for m in range(31):
        assert cs[m] == dm.count_formula(m + 1)
    # the shift is real: the unshifted count at one operation is 1, not 2
    assert cs[1] != dm.count_formula(1)


def test_gf_bivariate_table_matches_refined_triangle():
    table = sts.gf_bivariate_table(12)
    assert table == dm.count_table(12, method="formula")
    assert table[0] == {1: 1}
    for n, row in table.items():
        assert sum(row.values()) == dm.count_formula(n)


def test_average_leaf_depth_values():
    assert sts.average_leaf_depth(0) == 0
    assert sts.average_leaf_depth(2) == Fraction(5, 3)
    assert sts.average_leaf_depth(3) == Fraction(11, 5)


def test_average_leaf_depth_two_ways():
    from nonassoc import tree_core as tc

    for n in range(7):
        per_tree = sum(
            sum(tc.depth_sequence(t)) for t in tc.enumerate_trees(n)
        )
        by_index = [0] * (n + 1)
        for t in tc.enumerate_trees(n):
            for i, d in enumerate(tc.depth_sequence(t)):
                by_index[i] += d
        assert per_tree == sum(by_index)
        assert sts.average_leaf_depth(n) == Fraction(
            per_tree, (n + 1) * tc.catalan(n)
        )
