import pytest

from erpart import Params, a_index, build_table, count_all, count_all_via_series, phi_series
from erpart import series as S
from erpart.count_all import (
    correction_sum_series,
    count_with_parts_dp,
    k_bound,
    main_sum_series,
)
from erpart.enumeration import iter_er_partitions

from oracles import all_partitions, naive_is_er, p_of_m


def brute_E(k, m, e, r):
    return sum(
        1 for p in all_partitions(m) if p and p[-1] == k and naive_is_er(p, e, r)
    )


def test_table_spot_values():
    t = build_table(Params(1, 2), 10)
    assert (t.E(2, 2), t.E(3, 3), t.E(4, 5), t.E(5, 6)) == (1, 0, 1, 0)


@pytest.mark.parametrize("e, r", [(0, 1), (1, 2), (3, 1), (0, 4)])
def test_table_base_rows(e, r):
    t = build_table(Params(e, r), 15)
    assert t.E(0, 0) == 1 and t.E(1, 0) == 0
    assert all(t.E(1, m) == 1 for m in range(1, 16))
    assert all(t.E(k, m) == 0 for m in range(16) for k in range(m + 1, 20))
    assert t.E(-1, 3) == 0 and t.E(2, -1) == 0


def test_table_against_brute_e0_r2():
    t = build_table(Params(0, 2), 15)
    for m in range(1, 16):
        for k in range(1, m + 1):
            assert t.E(k, m) == sum(
                1 for p in iter_er_partitions(m, Params(0, 2)) if p[-1] == k
            )


@pytest.mark.parametrize("e, r", [(0, 1), (1, 1), (2, 2), (1, 3)])
def test_table_against_definition(e, r):
    t = build_table(Params(e, r), 11)
    for m in range(1, 12):
        for k in range(1, m + 1):
            assert t.E(k, m) == brute_E(k, m, e, r), (k, m)


@pytest.mark.parametrize("e", range(4))
@pytest.mark.parametrize("r", (1, 2, 3))
def test_guarded_recursion_holds_entrywise(e, r):
    t = build_table(Params(e, r), 30)
    for m in range(0, 31):
        for k in range(0, m + 1):
            if k <= e + 1 + r * (m - k):
                rhs = (t.E(k, m - k) if m - k >= 0 else 0) + (t.E(k - 1, m - 1) if m >= 1 else 0)
                if (k, m) != (0, 0):
                    assert t.E(k, m) == rhs, (k, m)
            else:
                assert t.E(k, m) == 0


def test_table_csv():
    csv = build_table(Params(1, 2), 3).to_csv().splitlines()
    assert csv[0] == "m,k,E"
    assert "2,1,1" in csv and "0,0,1" in csv


@pytest.mark.parametrize(
    "m, e, r, expected", [(9, 1, 2, 23), (9, 9, 1, 30), (1, 0, 1, 1), (1, 5, 3, 1)]
)
def test_count_all_examples(m, e, r, expected):
    assert count_all(m, Params(e, r)) == expected
    assert count_all_via_series(m, Params(e, r)) == expected


def test_count_all_ten_matches_enumeration():
    n = sum(1 for _ in iter_er_partitions(10, Params(1, 2)))
    assert count_all(10, Params(1, 2)) == n == 34


@pytest.mark.parametrize("i, e, r, expected", [(4, 1, 2, 1), (2, 1, 2, 0), (1, 3, 2, -1), (1, 0, 1, 0), (7, 0, 3, 2)])
def test_a_index(i, e, r, expected):
    assert a_index(i, Params(e, r)) == expected


def test_a_index_is_a_true_ceiling():
    from fractions import Fraction
    import math

    for e in range(6):
        for r in range(1, 5):
            for i in range(1, 30):
                assert a_index(i, Params(e, r)) == math.ceil(Fraction(i - (e + 1), r))


def test_phi_one():
    assert phi_series(1, Params(1, 2), 8) == S.shift(S.geom(1, 8), 1)


def test_correction_sum_display():
    corr = correction_sum_series(6, Params(1, 2), 10)
    assert corr.coeffs == (0, 0, 0, 1, 1, 1, 3, 2, 2, 3)
    main = main_sum_series(6, 10)
    assert main[9] == 26 and corr[9] == 3 and (main - corr)[9] == 23


@pytest.mark.parametrize("e, r", [(0, 1), (0, 2), (1, 2), (2, 3), (1, 1), (3, 1), (4, 2)])
def test_phi_coefficients_match_table(e, r):
    params = Params(e, r)
    t = build_table(params, 20)
    for k in range(1, 9):
        phi = phi_series(k, params, 21)
        assert [phi[m] for m in range(21)] == [t.E(k, m) for m in range(21)], k


def test_low_correction_weights():
    # i = 1 never contributes; i = 2 exactly for e = 0; i = 3 for e = 1 and for (0, 1)
    for e in range(5):
        for r in range(1, 5):
            params = Params(e, r)
            t = build_table(params, 10)
            assert t.E(0, a_index(1, params) - 1) == 0
            assert t.E(1, a_index(2, params)) == (1 if e == 0 else 0)
            assert t.E(2, 1 + a_index(3, params)) == (1 if e == 1 or (e, r) == (0, 1) else 0)


def test_i2_term_is_needed_for_e0():
    # without it phi_2 would count the single part 2, which is no (0, r)-partition
    for r in (1, 2, 3):
        params = Params(0, r)
        main = S.product([1, 2], 8, base=S.monomial(2, 8))
        assert main[2] == 1
        assert phi_series(2, params, 8)[2] == 0
        assert not naive_is_er((2,), 0, r)


@pytest.mark.parametrize("e", range(3))
@pytest.mark.parametrize("r", (1, 2, 3))
def test_three_way_agreement(e, r):
    params = Params(e, r)
    for m in range(1, 21):
        brute = sum(1 for _ in iter_er_partitions(m, params))
        assert count_all(m, params) == count_all_via_series(m, params) == brute


def test_large_e_gives_partition_numbers():
    for m in range(1, 26):
        for r in (1, 2, 5):
            assert count_all(m, Params(m, r)) == p_of_m(m)
            assert count_all(m, Params(m + 3, r)) == p_of_m(m)
    assert count_all_via_series(12, Params(12, 2)) == p_of_m(12) == 77


def test_k_bound():
    for e in range(4):
        for r in range(1, 4):
            for m in range(1, 40):
                K = k_bound(m, Params(e, r))
                assert K <= e + 1 + r * (m - K)
                assert K + 1 > e + 1 + r * (m - K - 1)


def test_count_with_parts_dp():
    for e in range(3):
        for r in (1, 2, 3):
            params = Params(e, r)
            for m in range(1, 16):
                for parts in range(1, 6):
                    assert count_with_parts_dp(m, params, parts) == sum(
                        1 for _ in iter_er_partitions(m, params, parts)
                    )


def test_big_counts_are_exact():
    n = count_all(500, Params(0, 2))
    assert n == count_all_via_series(500, Params(0, 2))
    assert n > 2**64
