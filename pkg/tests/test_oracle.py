from math import factorial

import pytest

from runnet.coeffring import T, parse_poly
from runnet.compositions import compositions
from runnet.oracle import (
    STAT_NAMES,
    CapExceeded,
    DomainViolation,
    all_pv_even,
    all_pv_odd,
    append_map,
    beta_brute,
    beta_hat_brute,
    check_injective_map,
    longest_alternating_subsequence,
    perms,
    pkshift_map,
    predicate_count,
    predicate_count_by_descent_sets,
    shift_map,
    stat_polynomial,
    stat_value,
)


def P(s):
    return tuple(int(c) for c in s)


def test_peaks_and_valleys_example():
    p = P("5736214")
    assert stat_value("pk", p) == 2 and stat_value("val", p) == 2


def test_run_examples():
    p = P("51378624")
    assert stat_value("br", p) == 4
    assert stat_value("udr", p) == 5
    assert stat_value("as", p) == 5


def test_singleton_conventions():
    assert stat_value("lrdasc", (1,)) == 1
    assert stat_value("lrpk", (1,)) == 1


def test_stat_polynomial_examples():
    assert stat_polynomial("rpk", 4) == parse_poly("1 + 18*t + 5*t^2")
    assert stat_polynomial("rdasc", 4) == parse_poly("9 + 11*t + 3*t^2 + t^3")
    assert stat_polynomial("des", 3) == parse_poly("1 + 4*t + t^2")
    assert stat_polynomial("des", 0) == parse_poly("1")


@pytest.mark.parametrize("name", STAT_NAMES)
def test_stat_polynomials_sum_to_factorial(name):
    for n in range(7):
        assert stat_polynomial(name, n)(1) == factorial(n)


def test_cap():
    with pytest.raises(CapExceeded):
        stat_polynomial("pk", 10)
    with pytest.raises(CapExceeded):
        predicate_count("allPVEven", 11, cap=10)
    with pytest.raises(CapExceeded):
        beta_brute((10,))


def test_predicate_examples():
    assert predicate_count("allPkOddValEven", 6) == 229
    assert predicate_count("allPVEven", 5) == 40
    assert predicate_count("allPVOdd", 5) == 14


@pytest.mark.parametrize("name", ["allPkOddValEven", "allPVEven", "allPVOdd", "allValOdd"])
def test_descent_set_route_agrees(name):
    for n in range(9):
        assert predicate_count_by_descent_sets(name, n) == predicate_count(name, n)


def test_descent_set_route_inc_runs():
    for n in range(8):
        assert predicate_count_by_descent_sets("incRunsBelow", n, 3) == predicate_count("incRunsBelow", n, 3)


def test_beta_brute_examples():
    assert beta_brute((2, 1)) == 2
    for n in range(1, 8):
        assert beta_brute((n,)) == 1
        assert sum(beta_hat_brute(c) for c in compositions(n)) == factorial(n)


@pytest.mark.parametrize("a, b", [("pk", "val"), ("rpk", "lpk"), ("dasc", "ddes")])
def test_equidistributions(a, b):
    for n in range(9):
        assert stat_polynomial(a, n) == stat_polynomial(b, n)


@pytest.mark.parametrize("n", range(0, 9))
def test_pointwise_relations(n):
    for p in perms(n):
        assert stat_value("udr", p) == longest_alternating_subsequence(p)
        if n >= 1:
            assert stat_value("lrpk", p) == stat_value("val", p) + 1
        if n >= 2:
            assert stat_value("br", p) == stat_value("pk", p) + stat_value("val", p) + 1


def test_longest_alternating_subsequence_example():
    # 51824 sits inside 51378624
    assert longest_alternating_subsequence(P("51824")) == 5


def test_map_examples():
    assert pkshift_map(P("287134596")) == P("278134956")
    assert append_map(P("1432"), 3) == P("15423")
    assert shift_map(P("123")) == P("231")
    assert all_pv_even(shift_map(P("123")))


def test_map_domains():
    with pytest.raises(DomainViolation):
        shift_map(P("1234"))
    with pytest.raises(DomainViolation):
        shift_map(P("132"))
    with pytest.raises(DomainViolation):
        pkshift_map(P("132"))
    with pytest.raises(DomainViolation):
        pkshift_map(P("1324"))
    with pytest.raises(DomainViolation):
        append_map(P("12"), 4)


def test_check_injective_map_reports_target_miss():
    with pytest.raises(AssertionError):
        check_injective_map([P("12")], lambda p: P("132"), all_pv_odd)
    assert check_injective_map([P("12"), P("21")], lambda p: p, lambda p: True) == (2, 2)


def test_t_power_sanity():
    assert stat_polynomial("udr", 4) == T + 7 * T ** 2 + 11 * T ** 3 + 5 * T ** 4
