from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from hypercatalan import catalan_core as cc
from hypercatalan.errors import InvalidMultinomial, Unsupported
from hypercatalan.series import power, solve_S
from hypercatalan.type_vectors import TUTRANK, TypeVector, enumerate_types, stats


def test_multinomial_examples():
    assert cc.multinomial(2, [1, 1]) == 2
    assert cc.multinomial(3, [3]) == 1
    assert cc.multinomial(5, []) == 1
    with pytest.raises(InvalidMultinomial):
        cc.multinomial(2, [2, 1])


@given(st.lists(st.integers(0, 6), max_size=4))
def test_multinomial_factorial_oracle(parts):
    top = sum(parts) + 2
    expect = factorial(top) // factorial(2)
    for p in parts:
        expect //= factorial(p)
    assert cc.multinomial(top, parts) == expect


@pytest.mark.parametrize("m,val", [
    ([], 1), ([3], 5), ([1, 1], 5), ([0, 2], 3), ([2, 1], 21), ([1, 2], 28),
    ([3, 1], 84), ([2, 2], 180), ([1, 3], 165), ([0, 4], 55), ([1, 0, 1], 6), ([1, 0, 0, 1], 7),
])
def test_hyper_catalan_values(m, val):
    assert cc.hyper_catalan(m) == val


def test_hyper_catalan_single_index_is_catalan():
    assert [cc.hyper_catalan([n]) for n in range(10)] == [cc.catalan(n) for n in range(10)]


def test_mane_powers():
    assert [cc.hyper_catalan_power([m], 2) for m in range(6)] == [1, 2, 5, 14, 42, 132]
    assert cc.hyper_catalan_power([], 7) == 1
    assert cc.hyper_catalan_power([1], 0) == 0
    assert cc.hyper_catalan_power([], 0) == 1
    with pytest.raises(Unsupported):
        cc.hyper_catalan_power([1], -1)


def test_mane_power_one_one_cubed_against_series():
    s3 = power(solve_S(2, 3), 3)
    assert cc.hyper_catalan_power([1, 1], 3) == s3.coefficient(TypeVector((1, 1)))


def test_mane_power_identities():
    for m in enumerate_types(4, 5):
        assert cc.hyper_catalan_power(m, 1) == cc.hyper_catalan(m)
    for m in range(21):
        assert cc.hyper_catalan_power([m], 2) == cc.hyper_catalan([m + 1])


def test_tutrank_values():
    assert cc.tutrank([1]) == 1
    assert cc.tutrank([1, 1]) == 3
    assert cc.tutrank([2]) == 1
    assert cc.tutrank_reduction_check(4, 5).passed


def test_fuss():
    assert cc.fuss(3, 1) == 1
    assert cc.fuss(3, 2) == 3
    assert [cc.fuss(2, m) for m in range(8)] == [cc.catalan(m) for m in range(8)]
    assert cc.fuss(3, 3) == cc.hyper_catalan([0, 3])
    with pytest.raises(Unsupported):
        cc.fuss(1, 3)


def test_recurrence_examples():
    assert cc.hyper_catalan_recurrence([]) == 1
    assert cc.hyper_catalan_recurrence([1]) == 1
    assert cc.hyper_catalan_recurrence([2]) == 2
    assert cc.hyper_catalan_recurrence([3]) == 5
    assert cc.hyper_catalan_recurrence([1, 1]) == 5
    assert cc.hyper_catalan_recurrence([0, 2]) == 3


def test_recurrence_matches_closed_form():
    rep = cc.recurrence_check(4, 5)
    assert rep.passed and rep.checked >= 50


def test_fine_lhs():
    assert cc.fine_lhs(4, 2) == 3
    for n in range(1, 9):
        assert cc.fine_lhs(n, n) == 1
        assert cc.fine_lhs(n, 1) == 1
        assert cc.fine_lhs(n, 0) == 0
        assert cc.fine_lhs(n, n + 1) == 0
    assert cc.fine_lhs(0, 0) == 1
    assert cc.fine_check(12).passed


def _compositions(n, k):
    # brute force over ordered compositions, grouped: multinomial counts orderings
    if k == 0:
        yield () if n == 0 else None
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            if rest is not None:
                yield (first,) + rest


def test_fine_lhs_brute_force():
    for n in range(1, 9):
        for k in range(1, n + 1):
            brute = sum(1 for c in _compositions(n, k) if c is not None)
            assert cc.fine_lhs(n, k) == brute


def test_segner():
    assert cc.segner_check(20).passed


def test_report_summary_lists_counterexample():
    rep = cc.VerificationReport("x", False, 3, {"type": "[1]", "a": 1, "b": 2})
    assert rep.summary() == "x: FAIL (3 cases); first counterexample: type=[1], a=1, b=2"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=4))
def test_closed_forms_are_integral(p):
    m = TypeVector(tuple(p))
    s = stats(m)
    raw = Fraction(factorial(s.edges - 1), factorial(s.vertices - 1))
    for x in m.parts:
        raw /= factorial(x)
    assert raw.denominator == 1
    assert cc.hyper_catalan(m) == raw >= 1
    for r in range(1, 4):
        assert cc.hyper_catalan_power(m, r) >= 1
    k = TypeVector((2,) + tuple(p), TUTRANK)
    assert cc.tutrank(k) == comb(2 + s.edges - 1, 2) * cc.hyper_catalan(m)


def test_series_closed_form_checks():
    assert cc.facelayer_check(4, 3).passed
    assert cc.mane_check(4, 4, 4).passed
    assert cc.tutrank_check(3, 3, 5).passed
