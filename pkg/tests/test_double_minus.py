import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nonassoc import double_minus as dm
from nonassoc import tree_core as tc

from reference_data import A000975_PREFIX, REFINED_TRIANGLE


def tree_with_depths(code):
    return tc.decode_bits(code)


def test_sign_parity_examples():
    t = tc.wedge(tc.wedge(tc.leaf(), tc.leaf()), tc.leaf())  # depths (2,2,1)
    assert dm.sign_parity(t) == (0, 0, 1)
    assert dm.sign_parity(tc.leaf()) == (0,)
    s = tc.wedge(tc.wedge(tc.leaf(), tc.wedge(tc.leaf(), tc.leaf())), tc.leaf())
    joined = tc.wedge(s, t)  # depths (3,4,4,2,3,3,2)
    assert dm.sign_parity(joined) == (1, 0, 0, 0, 1, 1, 0)


def test_pack_unpack_roundtrip():
    for bits in [(0,), (1, 0, 0), (0, 0, 1), (1, 1, 1, 0)]:
        assert dm.unpack_parity(dm.pack_parity(bits), len(bits)) == bits


def test_count_distinct_bruteforce_examples():
    assert dm.count_distinct_bruteforce(0) == 1
    assert dm.count_distinct_bruteforce(2) == 2
    assert dm.count_distinct_bruteforce(7) == 85


def test_count_bruteforce_respects_cap():
    with pytest.raises(tc.EnumerationCapError):
        dm.count_distinct_bruteforce(7, cap=6)


def test_refined_counts_bruteforce_examples():
    assert dm.refined_counts_bruteforce(0) == {1: 1}
    assert dm.refined_counts_bruteforce(4) == {0: 1, 3: 9}
    assert dm.refined_counts_bruteforce(6) == {1: 7, 4: 34, 7: 1}


def test_refined_triangle_matches_reference():
    for n, row in REFINED_TRIANGLE.items():
        assert dm.refined_counts_bruteforce(n) == row


def test_refined_formula_examples():
    assert dm.refined_count_formula(6, 4) == 34
    assert dm.refined_count_formula(5, 3) == 0
    assert dm.refined_count_formula(3, 4) == 1


def test_refined_formula_matches_bruteforce():
    for n in range(1, 13):
        brute = dm.refined_counts_bruteforce(n)
        for r in range(n + 2):
            assert dm.refined_count_formula(n, r) == brute.get(r, 0)


def test_refined_formula_rejects_bad_inputs():
    with pytest.raises(ValueError, match="out of range"):
        dm.refined_count_formula(4, 6)
    with pytest.raises(ValueError, match="out of range"):
        dm.refined_count_formula(4, -1)
    with pytest.raises(ValueError):
        dm.refined_count_formula(0, 1)


def test_zero_cells_follow_mod3_rule():
    for n in range(1, 13):
        row = dm.refined_counts_bruteforce(n)
        for r in range(n + 2):
            if (n + r) % 3 != 1:
                assert r not in row


def test_count_formula_values():
    assert dm.count_formula(0) == 1
    assert [dm.count_formula(n) for n in range(1, 15)] == A000975_PREFIX
    assert dm.count_formula(5) == 21
    # two independent characterizations at n=100
    n = 100
    assert dm.count_formula(n) == (2 ** (n + 1) - 2) // 3
    assert dm.count_formula(n) == 2**n - 1 - dm.count_formula(n - 1)


def test_bruteforce_equals_formula():
    for n in range(13):
        assert dm.count_distinct_bruteforce(n) == dm.count_formula(n)


def test_row_sums_refine_total():
    for n in range(15):
        assert sum(dm.refined_counts_bruteforce(n).values()) == dm.count_formula(n)


def test_cprime_identity_long_range():
    # count(n) + 1 for even n equals (2^(n+1) + (-1)^n)/3
    for n in range(1, 513):
        lhs = dm.count_formula(n) + (1 if n % 2 == 0 else 0)
        assert 3 * lhs == 2 ** (n + 1) + (-1) ** n


def test_mod3_condition_every_tree_n12():
    import numpy as np

    from nonassoc import kernels

    # one packed sign pattern per tree; zeros = even-depth leaves
    masks = kernels.tree_parity_masks(12)
    zeros = 13 - np.bitwise_count(masks).astype(np.int64)
    assert np.all((12 + zeros) % 3 == 1)


def test_a000975_values_and_methods():
    for method in dm.A000975_METHODS:
        assert dm.a000975(3, method) == 5
    assert dm.a000975(4, "alternating_binary") == 10
    values = {dm.a000975(257, m) for m in dm.A000975_METHODS}
    assert len(values) == 1
    for n, expected in enumerate(A000975_PREFIX, start=1):
        for method in dm.A000975_METHODS:
            assert dm.a000975(n, method) == expected


def test_a000975_rejects_n0_and_bad_method():
    with pytest.raises(ValueError):
        dm.a000975(0)
    with pytest.raises(ValueError, match="unknown method"):
        dm.a000975(3, "guess")


@given(st.integers(min_value=1, max_value=2000))
def test_a000975_methods_agree(n):
    values = {dm.a000975(n, m) for m in dm.A000975_METHODS}
    assert len(values) == 1


def test_complement_recurrence_long_range():
    for n in range(2, 513):
        assert dm.count_formula(n) + dm.count_formula(n - 1) + 1 == 2**n


def test_count_table_formula_equals_brute():
    assert dm.count_table(12, method="formula") == dm.count_table(12, method="brute")
    with pytest.raises(ValueError, match="unknown method"):
        dm.count_table(3, method="magic")


def test_table_csv_layout():
    assert dm.table_to_csv(dm.count_table(0)) == "0,1,1\n"
    csv = dm.table_to_csv(dm.count_table(3))
    assert csv == "0,1,1\n1,0,1\n2,2,2\n3,1,4\n3,4,1\n"


def test_table_csv_json_same_triples():
    table = dm.count_table(8)
    triples_csv = {
        tuple(int(x) for x in line.split(","))
        for line in dm.table_to_csv(table).strip().splitlines()
    }
    nested = json.loads(dm.table_to_json(table))
    triples_json = {
        (int(n), int(r), count)
        for n, row in nested.items()
        for r, count in row.items()
    }
    assert triples_csv == triples_json


def test_table_markdown_blank_cells():
    md = dm.table_to_markdown(dm.count_table(2))
    lines = md.splitlines()
    assert lines[0] == "| n\\r | 0 | 1 | 2 | 3 |"
    assert lines[2] == "| 0 |  | 1 |  |  |"
    assert lines[3] == "| 1 | 1 |  |  |  |"
    assert lines[4] == "| 2 |  |  | 2 |  |"


def test_table_outputs_are_deterministic():
    table = dm.count_table(12)
    assert dm.table_to_markdown(table) == dm.table_to_markdown(dm.count_table(12))
    assert dm.table_to_csv(table) == dm.table_to_csv(dm.count_table(12))
    assert dm.table_to_json(table) == dm.table_to_json(dm.count_table(12))
