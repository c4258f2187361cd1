import itertools
import math

import pytest

from mary.hbeta import (
    beta_divisibility_report,
    beta_map,
    build_h,
    example_three_betas,
    expansion_check,
    expansion_rhs,
    h_divisibility_report,
    iter_tuples,
)
from mary.partitions import OrderBudgetError
from mary.alpha import alpha_table
from mary.series import compare, geometric_sum, h, scale, u_op

SMALL_FAMILY = [ms for r in range(1, 4) for ms in itertools.product(range(2, 6), repeat=r)]


def test_build_h_examples():
    for m in range(2, 8):
        assert build_h((m,), 50).series == scale(h(1, 50), m)
    assert build_h((), 50).series == h(0, 50)
    lhs = build_h((2, 3), 50).series
    rhs = scale(h(2, 50), 2 * 3**2) - scale(build_h((2,), 50).series, math.comb(3, 2))
    assert lhs == rhs


def test_build_h_reports_inflation():
    hs = build_h((2, 3, 4), 10)
    assert hs.inflation == 24 and hs.series.order == 10


def test_build_h_budget():
    with pytest.raises(OrderBudgetError):
        build_h((9, 9, 9, 9, 9), 100, max_base_order=10**6)


def test_beta_examples():
    for m1, m2 in [(2, 3), (5, 7), (4, 4)]:
        b = beta_map((m1, m2))
        assert b[(1,)] == math.comb(m2, 2)
        assert b[(2,)] == 0
    b = beta_map((2, 3, 4))
    assert b[(1, 2)] == 4**2 * 3 == 48
    assert b[(1, 3)] == 3
    assert b[(3,)] == 0


def test_beta_r_is_zero_and_indices_in_range():
    for ms in SMALL_FAMILY:
        r = len(ms)
        b = beta_map(ms)
        assert b[(r,)] == 0
        for T in b.entries:
            assert all(1 <= j <= r for j in T) and list(T) == sorted(set(T)) and len(T) < r


def test_appending_reproduces_predecessor():
    for ms in SMALL_FAMILY:
        for extra in (2, 5):
            longer = beta_map(ms + (extra,))
            shorter = beta_map(ms)
            for T in iter_tuples(len(ms) + 1):
                if T[-1] == len(ms) + 1 and len(T) >= 2:
                    assert longer[T] == shorter[T[:-1]]


@pytest.mark.parametrize("ms,order", [((2, 3), 50), ((7,), 50), ((2, 3, 4), 40)])
def test_expansion_examples(ms, order):
    res = expansion_check(ms, order)
    assert res.equal and res.order == order


def test_expansion_family_up_to_r4():
    for r in range(1, 5):
        for ms in itertools.product(range(2, 6), repeat=r):
            assert expansion_check(ms, 30).equal, ms


@pytest.mark.parametrize("ms", [(2, 3, 4), (3, 4, 5), (2, 2, 2), (5, 2, 3)])
def test_hand_decomposition_for_three_entries(ms):
    lhs = build_h(ms, 40).series
    assert compare(lhs, expansion_rhs(ms, example_three_betas(*ms), 40)).equal


def test_canonical_differs_from_hand_decomposition():
    # both are valid: the h_1 term sits on H_(m_2) canonically and on H_(m_1) by hand
    b = beta_map((2, 3, 4))
    assert b[(2,)] == -2 * 3 * math.comb(4, 3)
    assert example_three_betas(2, 3, 4)[(1,)] != b[(1,)]


def test_beta_divisibility_examples():
    rep = beta_divisibility_report((2, 3))
    s = {x.label: x for x in rep.samples}
    assert s["(1)"].arg == 3 and s["(1)"].modulus == 3
    assert rep.passed
    rep = beta_divisibility_report((3, 3, 3))
    for x in rep.samples:
        if x.label in ("(1)", "(2)", "(3)"):
            assert x.arg % 9 == 0
    assert rep.passed
    rep = beta_divisibility_report((2, 3, 4))
    s = {x.label: x for x in rep.samples}
    assert s["(1,2)"].modulus == 4 and s["(1,2)"].arg == 48


def test_beta_divisibility_sweep():
    for r in range(1, 5):
        for ms in itertools.product(range(2, 7), repeat=r):
            assert beta_divisibility_report(ms).passed, ms


def test_constant_strengthening():
    for m in range(2, 6):
        for r in range(1, 7):
            b = beta_map((m,) * r)
            for T, v in b.entries.items():
                assert v % (m ** (r - len(T)) // math.gcd(m, 2)) == 0


def test_h_divisibility_examples():
    rep = h_divisibility_report((6,), 40)
    assert rep.modulus == 6 and rep.passed
    rep = h_divisibility_report((2, 3), 100)
    assert rep.modulus == 6 and rep.passed
    rep = h_divisibility_report((2, 2), 100)
    assert rep.modulus == 2 and rep.passed


def test_h_divisibility_sweep():
    for r in range(1, 5):
        for ms in itertools.product(range(2, 7), repeat=r):
            assert h_divisibility_report(ms, 30).passed, ms


@pytest.mark.parametrize("m", range(2, 6))
@pytest.mark.parametrize("r", range(1, 9))
def test_build_step_matches_alpha_expansion(m, r):
    # one build_h step on h_{r-1} is U_m(h_r), which the beta recurrence expands with alpha_{m,r}
    order = 40
    step = u_op(geometric_sum(h(r - 1, order * m)), m)
    t = alpha_table(m, r)
    expanded = h(1, order) * 0
    for i in range(1, r + 1):
        expanded = expanded + scale(h(i, order), t[i])
    assert step == expanded
    if r == 1:
        assert step == build_h((m,), order).series


def test_beta_json_shape():
    d = beta_map((2, 3, 4)).to_dict()
    assert d["ms"] == [2, 3, 4]
    assert {"tuple": [1, 2], "value": 48} in d["entries"]
