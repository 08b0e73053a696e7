"""Acceptance criteria 1-11, each at its stated tolerance.

Every test records one PASS/FAIL line; the lines are printed together at
the end of the pytest run (see conftest.py) and also when this file is run
as a script.
"""
import itertools
import random
import time
from fractions import Fraction

import pytest
import sympy  # noqa: F401  imported up front so timings exclude the import

from oracles import brute_branches, frac_quasi_greedy, violates
from univoq.classify import classify_base, is_univoque_sequence
from univoq.constants import alpha_prefix_interval, komornik_loreti, named_base, thue_morse
from univoq.enumeration import (build_automaton, count_univoque_prefixes, decomposition_check,
                                diff_prefixes, find_V_elements, g_prime_equals_v_prime_check,
                                survivors, tail_witness)
from univoq.exact import make_base, rational_base
from univoq.expansion import (alpha_of, alpha_prefix, count_expansion_branches, greedy_digits,
                              quasi_greedy_digits)

RESULTS = {}


def record(n, ok, detail):
    RESULTS[n] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    assert ok, detail


def _fresh():
    alpha_of.cache_clear()
    build_automaton.cache_clear()


def R(s):
    return rational_base(Fraction(s))


def test_criterion_01_golden_ratio():
    _fresh()
    t = time.perf_counter()
    g = make_base("poly:-1,-1,1@1,2")
    a = alpha_prefix(g, 20)
    b = greedy_digits(1, g, 20)
    c = classify_base(g).triple
    dt = time.perf_counter() - t
    ok = a == (1, 0) * 10 and b == (1, 1) + (0,) * 18 and c == (True, False, False) and dt < 1
    record(1, ok, f"alpha={''.join(map(str, a))} greedy={''.join(map(str, b))} "
                  f"(V, cl U, U)={c} in {dt:.3f}s")


def test_criterion_02_thue_morse_and_q1():
    _fresh()
    t = time.perf_counter()
    tm = thue_morse(8)
    iv = komornik_loreti(Fraction(1, 10**4))
    inside = Fraction(1787, 1000) < iv.lo and iv.hi < Fraction(1788, 1000)
    mid = alpha_prefix(rational_base(iv.midpoint), 12)
    certified = alpha_prefix_interval(iv, 12)
    dt = time.perf_counter() - t
    ok = tm == (1, 1, 0, 1, 0, 0, 1, 1) and inside and mid == thue_morse(12) and dt < 5
    record(2, ok, f"tm8={''.join(map(str, tm))} enclosure=[{float(iv.lo):.7f}, {float(iv.hi):.7f}] "
                  f"inside={inside} midpoint alpha={''.join(map(str, mid))} "
                  f"vs tau={''.join(map(str, thue_morse(12)))} "
                  f"(certified on enclosure: {len(certified)} digits) in {dt:.3f}s")


def test_criterion_03_family():
    _fresh()
    t = time.perf_counter()
    qs = [named_base("q_n", n) for n in range(1, 6)]
    in_u = [classify_base(q).in_U.value for q in qs]
    star = classify_base(named_base("q_star")).triple
    increasing = all(a < b for a, b in zip(qs, qs[1:]))
    dt = time.perf_counter() - t
    ok = all(v is True for v in in_u) and star == (True, True, False) and increasing and dt < 5
    record(3, ok, f"in_U(q_1..q_5)={in_u} q*={star} increasing={increasing} in {dt:.3f}s")


def test_criterion_04_small_base_collapse():
    s = count_univoque_prefixes(R("3/2"), 25)
    ok = all(c == 2 for c in s.counts[1:])
    record(4, ok, f"counts(3/2)={list(s.counts)} mode={s.mode}")


def test_criterion_05_growth_transition():
    t = time.perf_counter()
    lo = count_univoque_prefixes(R("17/10"), 25)
    hi = count_univoque_prefixes(R("19/10"), 25)
    dt = time.perf_counter() - t
    r_lo, r_hi = lo.ratio(25), hi.ratio(25)
    ok = r_lo <= Fraction(102, 100) and r_hi >= Fraction(115, 100) and dt < 10
    record(5, ok, f"ratio25(17/10)={float(r_lo):.4f} (target <= 1.02, counts {lo.counts[24]}"
                  f"->{lo.counts[25]}), ratio25(19/10)={float(r_hi):.4f} (target >= 1.15) "
                  f"in {dt:.3f}s")


def test_criterion_06_nesting_and_difference():
    q, r = R("8/5"), R("17/10")
    n = 15
    nested = set(survivors(q, n)) <= set(survivors(r, n))
    diff = diff_prefixes(q, r, n)
    found = find_V_elements(q, r)
    iff = bool(diff) == bool(found)
    unexplained = [w for w in diff if not any(tail_witness(w, t) for t, _ in found)]
    ok = nested and iff and not unexplained
    record(6, ok, f"nested={nested} |diff|={len(diff)} V-elements="
                  f"{[str(w) for _, w in found]} unexplained={len(unexplained)}")


def test_criterion_07_decomposition():
    q, r = R("8/5"), R(Fraction(13, 8) + Fraction(1, 50))
    g = named_base("G")
    rep = decomposition_check(q, r, [g], 12)
    record(7, rep.ok, f"|U_r'|={rep.size_r} |U_q'|={rep.size_q} pieces={list(rep.pieces.values())} "
                      f"missing={len(rep.missing)} extra={len(rep.extra)}")


def _witness_is_valid(w, alpha, m, n):
    tail = w[n:]
    first = w[n - 1] < m and _greater(tail, alpha)
    second = w[n - 1] > 0 and _greater(tuple(m - c for c in tail), alpha)
    return first or second


def _greater(tail, alpha):
    for a, b in zip(tail, alpha):
        if a != b:
            return a > b
    return False


def test_criterion_08_oracle_equivalence():
    t = time.perf_counter()
    rng = random.Random(8)
    bases = set()
    while len(bases) < 50:
        s = rng.randint(2, 60)
        p = rng.randint(s + 1, 2 * s - 1)
        bases.add(Fraction(p, s))
    mismatches, bad_witness, checked = 0, 0, 0
    for qf in sorted(bases):
        b = rational_base(qf)
        aut = build_automaton(b)
        alpha = frac_quasi_greedy(Fraction(1), qf, 12)
        for n in range(1, 11):
            for w in itertools.product((0, 1), repeat=n):
                checked += 1
                direct = violates(w, alpha, 1) is None
                if aut.alive(w) != direct:
                    mismatches += 1
                v = is_univoque_sequence(w, b)
                if v.is_false and not _witness_is_valid(w, alpha, 1, v.witness):
                    bad_witness += 1
                if v.is_false == direct:
                    mismatches += 1
    dt = time.perf_counter() - t
    ok = mismatches == 0 and bad_witness == 0 and dt < 60
    record(8, ok, f"{len(bases)} bases, {checked} words: mismatches={mismatches} "
                  f"invalid witnesses={bad_witness} in {dt:.1f}s")


def test_criterion_09_branch_counting():
    two = rational_base(2)
    dyadic = [count_expansion_branches(Fraction(1, 2), two, n) for n in range(3, 11)]
    got = count_expansion_branches(1, R("8/5"), 10)
    want = brute_branches(Fraction(1), Fraction(8, 5), 10)
    ok = all(c == 2 for c in dyadic) and got == want
    record(9, ok, f"branches(1/2, 2, 3..10)={dyadic}; branches(1, 8/5, 10)={got} exhaustive={want}")


def test_criterion_10_monotonicity():
    rng = random.Random(10)
    bad_x = bad_q = 0
    for _ in range(1000):
        s = rng.randint(2, 40)
        qf = Fraction(rng.randint(s + 1, 2 * s - 1), s)
        b = rational_base(qf)
        top = 1 / (qf - 1)
        x, y = sorted(Fraction(rng.randint(0, 400), 400) * top for _ in range(2))
        if x == y:
            y = min(top, x + Fraction(1, 997))
        if quasi_greedy_digits(x, b, 30) > quasi_greedy_digits(y, b, 30):
            bad_x += 1
        s2 = rng.randint(2, 40)
        rf = Fraction(rng.randint(s2 + 1, 2 * s2 - 1), s2)
        lo, hi = sorted((qf, rf))
        if lo < hi and alpha_prefix(rational_base(lo), 30) > alpha_prefix(rational_base(hi), 30):
            bad_q += 1
    record(10, bad_x == 0 and bad_q == 0,
           f"1000 pairs: x-monotonicity violations={bad_x}, q-monotonicity violations={bad_q}")


def test_criterion_11_g_equals_v():
    g, qs = named_base("G"), named_base("q_star")
    r1 = g_prime_equals_v_prime_check(g, [R(Fraction(13, 8) + Fraction(1, 100)), R("17/10"),
                                          R("9/5")], 12)
    r2 = g_prime_equals_v_prime_check(qs, [R("37/20"), R("19/10"), R("99/50")], 12)
    record(11, r1.ok and r2.ok, f"G: {r1.checked} words, {len(r1.violations)} violations; "
                                f"q*: {r2.checked} words, {len(r2.violations)} violations")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
