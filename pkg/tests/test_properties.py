"""Property-based checks over words, exact arithmetic and expansions."""
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from oracles import frac_quasi_greedy
from univoq.classify import is_greedy_admissible, is_univoque_sequence
from univoq.constants import named_base
from univoq.enumeration import build_automaton, survivors
from univoq.exact import rational_base, sign_of
from univoq.expansion import (alpha_prefix, detect_eventual_periodicity, greedy_digits,
                              quasi_greedy_digits, value_of)
from univoq.words import EPWord, complement, lex_compare

digits = st.lists(st.integers(0, 2), max_size=5).map(tuple)
ep_words = st.builds(EPWord, digits, st.lists(st.integers(0, 2), min_size=1, max_size=4).map(tuple))
bases = st.fractions(Fraction(21, 20), Fraction(2)).filter(lambda q: 1 < q < 2)

G = named_base("G")
Q_STAR = named_base("q_star")


@given(ep_words)
def test_complement_involution(w):
    assert w.complement(2).complement(2) == w
    assert complement(complement(w.prefix(7), 2), 2) == w.prefix(7)


@given(ep_words, ep_words, ep_words)
def test_lex_is_total_order(a, b, c):
    assert lex_compare(a, b) == -lex_compare(b, a)
    assert (lex_compare(a, b) == 0) == (a == b)
    if lex_compare(a, b) <= 0 and lex_compare(b, c) <= 0:
        assert lex_compare(a, c) <= 0
    # comparison agrees with a long enough finite prefix
    n = 40
    if a != b:
        pa, pb = a.prefix(n), b.prefix(n)
        assert (pa < pb) == (lex_compare(a, b) < 0)


@given(st.lists(st.fractions(-5, 5, max_denominator=7), min_size=3, max_size=3),
       st.sampled_from([G, Q_STAR]))
def test_sign_of_detects_zero(coeffs, q):
    x = q.gen
    zero = sum(c * x ** i for i, c in enumerate(q.poly))  # the defining relation
    assert zero.is_zero()
    e = sum(c * x ** i for i, c in enumerate(coeffs))
    assert sign_of(zero * e) == 0
    assert sign_of(e + zero) == sign_of(e)
    assert (sign_of(e) == 0) == e.is_zero()
    if abs(float(e)) > 1e-9:
        assert sign_of(e) == (1 if float(e) > 0 else -1)


@settings(max_examples=60, deadline=None)
@given(bases, st.fractions(0, 1, max_denominator=50))
def test_greedy_dominates_quasi(q, x):
    b = rational_base(q)
    g, a = greedy_digits(x, b, 20), quasi_greedy_digits(x, b, 20)
    assert g >= a
    assert a == frac_quasi_greedy(x, q, 20)
    assert not is_greedy_admissible(g, b, 64).is_false


@settings(max_examples=60, deadline=None)
@given(bases, st.fractions(0, 1, max_denominator=60), st.fractions(0, 1, max_denominator=60))
def test_quasi_greedy_monotone_in_x(q, x, y):
    assume(x < y)
    b = rational_base(q)
    assert quasi_greedy_digits(x, b, 30) <= quasi_greedy_digits(y, b, 30)


@settings(max_examples=60, deadline=None)
@given(bases, bases)
def test_alpha_monotone_in_q(q, r):
    assume(q < r)
    assert alpha_prefix(rational_base(q), 30) <= alpha_prefix(rational_base(r), 30)


@settings(max_examples=40, deadline=None)
@given(st.fractions(0, 1, max_denominator=30))
def test_round_trip_in_pisot_base(x):
    w = detect_eventual_periodicity(x, G, "quasi-greedy", 2000)
    assert isinstance(w, EPWord)
    assert value_of(w, G) == G.element(x)
    if x > 0:
        assert not w.is_finite


@settings(max_examples=15, deadline=None)
@given(bases, bases)
def test_survivors_nested(q, r):
    assume(q < r)
    assert set(survivors(rational_base(q), 9)) <= set(survivors(rational_base(r), 9))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=12).map(tuple))
def test_survivors_pass_prefix_test(w):
    aut = build_automaton(Q_STAR)
    if aut.accepts(w):
        assert not is_univoque_sequence(w, Q_STAR).is_false
    elif not aut.alive(w):
        v = is_univoque_sequence(w, Q_STAR)
        assert v.is_false and 1 <= v.witness < len(w)
