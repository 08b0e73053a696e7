from fractions import Fraction

import pytest

from oracles import brute_branches, frac_greedy, frac_quasi_greedy, mp_quasi_greedy_one
from univoq.exact import rational_base
from univoq.expansion import (LastDigitZero, NotDetected, OutOfRange, alpha_ep, alpha_of,
                              alpha_prefix, count_expansion_branches,
                              detect_eventual_periodicity, greedy_digits, greedy_finite_to_quasi,
                              quasi_greedy_digits, value_of)
from univoq.words import EPWord

P = EPWord.parse


def test_greedy_examples(G):
    assert greedy_digits(1, G, 5) == (1, 1, 0, 0, 0)
    assert greedy_digits(0, G, 4) == (0, 0, 0, 0)
    assert greedy_digits(1, rational_base(2), 4) == (1, 1, 1, 1)


def test_quasi_greedy_examples(G):
    assert quasi_greedy_digits(1, G, 6) == (1, 0, 1, 0, 1, 0)
    assert quasi_greedy_digits(0, rational_base(Fraction(3, 2)), 3) == (0, 0, 0)


def test_alpha_prefix_examples(G, q_star):
    assert alpha_prefix(G, 4) == (1, 0, 1, 0)
    assert alpha_prefix(rational_base(2), 3) == (1, 1, 1)
    assert alpha_prefix(q_star, 6) == (1, 1, 0, 1, 1, 0)


@pytest.mark.parametrize("coeffs", [(-1, -1, 1), (-1, -1, -1, 1), (1, -2, -1, 1), (-3, 0, 1)])
def test_alpha_matches_high_precision_oracle(coeffs):
    from univoq.exact import poly_root_base
    q = poly_root_base(coeffs, 1, 2)
    # digits directly: alpha_prefix would first spend max_steps on periodicity detection
    assert quasi_greedy_digits(1, q, 30) == mp_quasi_greedy_one(coeffs, 1, 2, 30)


@pytest.mark.parametrize("q", ["3/2", "8/5", "17/10", "19/10", "5/2", "7/3"])
def test_rational_expansions_match_partial_sum_oracle(q):
    q = Fraction(q)
    b = rational_base(q)
    for x in (Fraction(1), Fraction(1, 3), Fraction(2, 7)):
        assert greedy_digits(x, b, 25) == frac_greedy(x, q, 25)
        assert quasi_greedy_digits(x, b, 25) == frac_quasi_greedy(x, q, 25)


def test_out_of_range(G):
    with pytest.raises(OutOfRange):
        greedy_digits(-1, G, 3)
    with pytest.raises(OutOfRange):
        quasi_greedy_digits(3, G, 3)   # 1/(G-1) = G < 3


def test_detect_periodicity(G, q_star):
    assert detect_eventual_periodicity(1, G, "quasi-greedy") == P("(10)")
    assert detect_eventual_periodicity(1, q_star, "quasi-greedy") == P("(110)")
    assert detect_eventual_periodicity(Fraction(1, 2), rational_base(2), "greedy") == P("1(0)")
    res = detect_eventual_periodicity(1, rational_base(Fraction(3, 2)), "quasi-greedy", max_steps=50)
    assert isinstance(res, NotDetected) and len(res.prefix) == 50


def test_alpha_rational_is_not_periodic():
    a = alpha_of(rational_base(Fraction(8, 5)))
    assert not a.is_ep and len(a.prefix(40)) == 40
    assert isinstance(alpha_ep(rational_base(Fraction(8, 5)), max_steps=30), NotDetected)
    assert alpha_of(rational_base(3)).word == P("(2)")


def test_greedy_finite_to_quasi(G):
    assert greedy_finite_to_quasi((1, 1), G) == P("(10)")
    assert greedy_finite_to_quasi((1,), rational_base(2)) == P("0(1)")
    s = greedy_finite_to_quasi((2,), rational_base(Fraction(5, 2)))
    first = [next(s) for _ in range(4)]
    assert first[0] == 1 and tuple(first[1:]) == alpha_prefix(rational_base(Fraction(5, 2)), 3)
    with pytest.raises(LastDigitZero):
        greedy_finite_to_quasi((0, 0), G)


def test_value_of(G):
    assert value_of(P("(10)"), G) == G.one
    assert value_of((1, 1), G) == G.one
    assert value_of(P("(0)"), G).is_zero()


def test_branch_examples(G):
    assert count_expansion_branches(Fraction(1, 2), rational_base(2), 5) == 2
    assert count_expansion_branches(0, G, 7) == 1
    # frozen from an mpmath enumeration of all 2^6 words
    assert count_expansion_branches(1, G, 6) == 7


@pytest.mark.parametrize("q, x", [("8/5", "1"), ("3/2", "1/2"), ("17/10", "2/3"), ("5/2", "1")])
def test_branches_match_exhaustive_search(q, x):
    q, x = Fraction(q), Fraction(x)
    for n in (4, 8):
        assert count_expansion_branches(x, rational_base(q), n) == brute_branches(x, q, n)
