import pytest
from hypothesis import given, settings, strategies as st

from mary.mseq import MSequence, partial_product
from mary.partitions import (
    BRUTE_FORCE_CAP,
    OrderBudgetError,
    brute_force_count,
    count_pm,
    parts_up_to,
    pm_dp_table,
    pm_series,
    pm_table,
    pm_values,
    shifted_direct,
    shifted_series,
)
from mary.series import TruncatedSeries, compare, divide, subst_power

CONST2 = MSequence.constant(2)
FACT = MSequence.factorial()


def test_parts_up_to():
    assert parts_up_to(CONST2, 10) == [1, 2, 4, 8]
    assert parts_up_to(FACT, 130) == [1, 2, 6, 24, 120]
    assert parts_up_to(FACT, 1) == [1]
    assert parts_up_to(MSequence.finite([2, 3]), 10**6) == [1, 2, 6]


def test_part_list_invariants(sequence_battery):
    for M in sequence_battery:
        parts = parts_up_to(M, 5000)
        assert parts[0] == 1
        assert all(b % a == 0 and b > a for a, b in zip(parts, parts[1:]))


def test_count_examples():
    assert count_pm(CONST2, 5) == 4
    assert count_pm(FACT, 0) == 1
    assert count_pm(CONST2, 0) == 1
    # 6; 2+2+2; 2+2+1+1; 2+1+1+1+1; 1*6
    assert count_pm(FACT, 6) == 5
    assert count_pm(FACT, -3) == 0


def test_brute_force_examples():
    assert brute_force_count(CONST2, 5) == 4
    assert brute_force_count(FACT, 0) == 1
    fin = MSequence.finite([2, 3])
    assert brute_force_count(fin, 12) == count_pm(fin, 12)


def test_brute_force_cap():
    with pytest.raises(ValueError):
        brute_force_count(CONST2, BRUTE_FORCE_CAP + 1)


def test_series_examples():
    assert pm_series(CONST2, 10)[5] == 4
    assert pm_series(FACT, 10)[0] == 1
    assert list(pm_series(FACT, 300).coeffs) == pm_dp_table(FACT, 300)


def test_triple_agreement(sequence_battery):
    for M in sequence_battery:
        dp = pm_dp_table(M, 60)
        ser = pm_series(M, 60).coeffs
        for n in range(61):
            assert dp[n] == ser[n] == brute_force_count(M, n), (str(M), n)


def test_prefix_sum_table_matches_dp(sequence_battery):
    for M in sequence_battery:
        assert pm_table(M, 3000) == pm_dp_table(M, 3000)


def test_pm_values_negative_and_sparse():
    vals = pm_values(FACT, [-5, 0, 119, 2399])
    assert vals[-5] == 0 and vals[0] == 1
    table = pm_dp_table(FACT, 2399)
    assert vals[119] == table[119] and vals[2399] == table[2399]


def test_functional_equation(sequence_battery):
    order = 300
    for M in sequence_battery:
        m1 = M.entry(1)
        lhs = pm_series(M, order)
        rhs = divide(subst_power(pm_series(M.shifted(1), order), m1), TruncatedSeries.from_coeffs([1, -1], order))
        assert compare(lhs, rhs).equal


def test_remark_identities_on_dp(sequence_battery):
    for M in sequence_battery:
        m1 = M.entry(1)
        p = pm_dp_table(M, m1 * 200)
        tail = pm_dp_table(M.shifted(1), 200)
        for n in range(1, 201):
            assert p[m1 * n] - p[m1 * (n - 1)] == tail[n]
            assert p[m1 * n - 1] == p[m1 * (n - 1)]


def test_shifted_series_examples():
    f = shifted_series(CONST2, 2, 10)
    assert f[1] == 2  # b_2(3): 1+1+1, 1+2
    assert f[0] == 0


def test_shifted_series_factorial_depth_four():
    f = shifted_series(FACT, 4, 20)
    table = pm_dp_table(FACT, 120 * 20)
    assert all(f[n] == table[120 * n - 1] for n in range(1, 21))


def test_shifted_two_routes(sequence_battery):
    for M in sequence_battery:
        for r in (1, 2, 3):
            if not M.has_entry(r):
                continue
            order = min(30, 4000 // partial_product(M, r))
            assert shifted_series(M, r, order) == shifted_direct(M, r, order)


def test_shifted_budget_error():
    with pytest.raises(OrderBudgetError) as exc:
        shifted_series(FACT, 5, 100, max_base_order=10_000)
    assert exc.value.required == 720 * 100


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(2, 9), min_size=1, max_size=5), st.integers(0, 60))
def test_dp_matches_enumeration(entries, n):
    M = MSequence.finite(entries)
    assert count_pm(M, n) == brute_force_count(M, n)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(2, 9), min_size=1, max_size=6), st.integers(0, 4000))
def test_prefix_sum_matches_dp(entries, n):
    M = MSequence(tuple(entries), "const", entries[-1])
    assert pm_values(M, [n])[n] == count_pm(M, n)
