"""Independent reference implementations used to derive and freeze test values.

Nothing here imports the package under test: rational bases use plain
Fractions and algebraic bases use mpmath at high precision.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import mpmath


def frac_quasi_greedy(x: Fraction, q: Fraction, n: int):
    """Quasi-greedy digits by re-summing partial sums (largest d with sum < x)."""
    m = -(-q.numerator // q.denominator) - 1
    s, out = Fraction(0), []
    for i in range(1, n + 1):
        d = m
        while d > 0 and s + d / q**i >= x:
            d -= 1
        s += d / q**i
        out.append(d)
    return tuple(out)


def frac_greedy(x: Fraction, q: Fraction, n: int):
    m = -(-q.numerator // q.denominator) - 1
    s, out = Fraction(0), []
    for i in range(1, n + 1):
        d = m
        while d > 0 and s + d / q**i > x:
            d -= 1
        s += d / q**i
        out.append(d)
    return tuple(out)


def mp_root(coeffs, lo, hi, dps=120):
    """Root of an integer polynomial (low-to-high coefficients) in [lo, hi]."""
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=400, extraprec=2 * dps)
        real = [mpmath.re(z) for z in roots if abs(mpmath.im(z)) < mpmath.mpf(10) ** (-dps // 2)]
        (root,) = [z for z in real if lo <= z <= hi]
        return root


def mp_quasi_greedy_one(coeffs, lo, hi, n, dps=200):
    """Quasi-greedy expansion of 1 at high precision; fine for short prefixes."""
    with mpmath.workdps(dps):
        q = mp_root(coeffs, lo, hi, dps)
        m = int(mpmath.ceil(q)) - 1
        r, out = mpmath.mpf(1), []
        tiny = mpmath.mpf(10) ** (-dps // 2)
        for _ in range(n):
            t = q * r
            d = min(m, int(mpmath.floor(t - tiny)))
            out.append(d)
            r = t - d
        return tuple(out)


def violates(word, alpha, m):
    """Index n (1-based) of the first univoqueness violation visible in the prefix, else None.

    Direct transcription of the two lexicographic conditions on finite data.
    """
    L = len(word)
    for n in range(1, L):
        tail = word[n:]
        if word[n - 1] < m:
            for a, b in zip(tail, alpha):
                if a != b:
                    if a > b:
                        return n
                    break
        if word[n - 1] > 0:
            for a, b in zip((m - c for c in tail), alpha):
                if a != b:
                    if a > b:
                        return n
                    break
    return None


def brute_branches(x: Fraction, q: Fraction, n: int) -> int:
    """Words of length n whose tail value can still be matched by digits in {0..m}."""
    m = -(-q.numerator // q.denominator) - 1
    top = Fraction(m) / (q - 1)
    count = 0
    for w in itertools.product(range(m + 1), repeat=n):
        r = x
        ok = True
        for d in w:
            r = q * r - d
            if r < 0 or r > top:
                ok = False
                break
        count += ok
    return count


def thue_morse_oracle(n: int):
    """tau_i is the parity of the number of ones in the binary expansion of i."""
    return tuple(bin(k).count("1") % 2 for k in range(1, n + 1))
