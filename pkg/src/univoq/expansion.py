"""Greedy and quasi-greedy digit algorithms with exact remainders.

All algorithms run on the remainder recurrence ``r <- q*r - d`` where
``r_n = q^n (x - sum_{i<=n} c_i q^-i)``.  The greedy digit is the largest
``d <= m`` keeping ``r >= 0``; the quasi-greedy digit keeps ``r > 0``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .exact import AlgebraicBase, FieldElement, _geometric_value, sign_of
from .words import EPWord, Word

GREEDY = "greedy"
QUASI = "quasi-greedy"
DEFAULT_MAX_STEPS = 10_000


class OutOfRange(ValueError):
    pass


class LastDigitZero(ValueError):
    pass


@dataclass(frozen=True)
class NotDetected:
    """No repeated remainder within the step budget; ``prefix`` holds the digits found."""

    prefix: Word

    def __str__(self) -> str:
        return "".join(map(str, self.prefix)) + "..."


@dataclass(frozen=True)
class OrbitState:
    remainder: FieldElement
    step: int


def _algo(name: str) -> str:
    if name in ("greedy", "g"):
        return GREEDY
    if name in ("quasi", "quasi-greedy", "quasi_greedy", "qg"):
        return QUASI
    raise ValueError(f"unknown algorithm {name!r}")


def to_element(x, q: AlgebraicBase) -> FieldElement:
    return q.element(x)


def in_range(x: FieldElement, q: AlgebraicBase) -> bool:
    """``x`` in ``J_q = [0, m/(q-1)]``."""
    return sign_of(x) >= 0 and sign_of(q.m - (q.gen - 1) * x) >= 0


def _checked(x, q: AlgebraicBase) -> FieldElement:
    x = q.element(x)
    if not in_range(x, q):
        raise OutOfRange(f"{x} is outside J_q for q = {q}")
    return x


def next_digit(r: FieldElement, q: AlgebraicBase, strict: bool) -> Tuple[int, FieldElement]:
    t = q.gen * r
    if t.is_zero():
        return 0, t
    hi = t.bounds().hi
    start = q.m if hi >= q.m else max(int(hi), 0)
    for d in range(start, -1, -1):
        s = sign_of(t - d)
        if s > 0 or (s == 0 and not strict):
            return d, t - d
    # only reachable in the strict case with t == 0
    return 0, t


def orbit(x, q: AlgebraicBase, algorithm: str = QUASI) -> Iterator[Tuple[int, FieldElement]]:
    """Yield ``(digit, remainder_after_digit)`` forever."""
    strict = _algo(algorithm) == QUASI
    r = q.element(x)
    while True:
        d, r = next_digit(r, q, strict)
        yield d, r


def greedy_digits(x, q: AlgebraicBase, n: int) -> Word:
    x = _checked(x, q)
    return tuple(d for d, _ in itertools.islice(orbit(x, q, GREEDY), n))


def quasi_greedy_digits(x, q: AlgebraicBase, n: int) -> Word:
    x = _checked(x, q)
    return tuple(d for d, _ in itertools.islice(orbit(x, q, QUASI), n))


def detect_eventual_periodicity(x, q: AlgebraicBase, algorithm: str = QUASI,
                                max_steps: int = DEFAULT_MAX_STEPS) -> Union[EPWord, NotDetected]:
    """Run the digit algorithm until an exact remainder repeats."""
    x = _checked(x, q)
    seen: Dict[FieldElement, int] = {x: 0}
    digits: List[int] = []
    for step, (d, r) in enumerate(orbit(x, q, algorithm), start=1):
        digits.append(d)
        if r in seen:
            i = seen[r]
            return EPWord(tuple(digits[:i]), tuple(digits[i:]))
        if step >= max_steps:
            break
        seen[r] = step
    return NotDetected(tuple(digits))


class Alpha:
    """Quasi-greedy expansion of 1 in base q, exact when eventually periodic.

    ``word`` is the EPWord when periodicity was detected, else ``None``;
    ``prefix(n)`` is always available and extends lazily.
    """

    def __init__(self, q: AlgebraicBase, max_steps: int = DEFAULT_MAX_STEPS):
        self.q = q
        self.word: Optional[EPWord] = None
        self._digits: List[int] = []
        self._orbit = None
        if q.is_rational and q.value.denominator > 1:
            # remainders of 1 have denominator exactly s^n for q = p/s, so
            # the orbit cannot repeat
            self._orbit = orbit(1, q, QUASI)
        else:
            found = detect_eventual_periodicity(1, q, QUASI, max_steps)
            if isinstance(found, EPWord):
                self.word = found
            else:
                self._digits = list(found.prefix)
                self._orbit = orbit(1, q, QUASI)
                for _ in self._digits:
                    next(self._orbit)

    @property
    def is_ep(self) -> bool:
        return self.word is not None

    def prefix(self, n: int) -> Word:
        if self.word is not None:
            return self.word.prefix(n)
        while len(self._digits) < n:
            self._digits.append(next(self._orbit)[0])
        return tuple(self._digits[:n])

    def exact_or_prefix(self, depth: int):
        return self.word if self.word is not None else self.prefix(depth)

    def __str__(self) -> str:
        return str(self.word) if self.word is not None else "".join(map(str, self.prefix(20))) + "..."


@lru_cache(maxsize=256)
def alpha_of(q: AlgebraicBase, max_steps: int = DEFAULT_MAX_STEPS) -> Alpha:
    return Alpha(q, max_steps)


def alpha_prefix(q: AlgebraicBase, n: int) -> Word:
    return alpha_of(q).prefix(n)


def alpha_ep(q: AlgebraicBase, max_steps: int = DEFAULT_MAX_STEPS) -> Union[EPWord, NotDetected]:
    a = alpha_of(q, max_steps)
    return a.word if a.word is not None else NotDetected(a.prefix(max_steps))


def greedy_finite_to_quasi(b: Sequence[int], q: AlgebraicBase,
                           max_steps: int = DEFAULT_MAX_STEPS) -> Union[EPWord, Iterator[int]]:
    """Quasi-greedy expansion from a finite greedy one: ``b_1..b_{n-1} (b_n - 1)`` then alpha.

    Returns an EPWord when alpha is eventually periodic, otherwise an
    infinite digit iterator.
    """
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise LastDigitZero("greedy word has no nonzero digit")
    head = tuple(b[:-1]) + (b[-1] - 1,)
    a = alpha_of(q, max_steps)
    if a.word is not None:
        return EPWord(head + a.word.pre, a.word.per)

    def stream():
        yield from head
        i = 0
        while True:
            i += 1
            yield a.prefix(i)[-1]

    return stream()


def value_of(w, q: AlgebraicBase) -> FieldElement:
    """Exact value ``sum(w_i q^-i)`` of a finite word or an EPWord."""
    if not isinstance(w, EPWord):
        w = EPWord.finite(tuple(w))
    return _geometric_value(q, w)


def count_expansion_branches(x, q: AlgebraicBase, n: int) -> int:
    """Number of length-n digit words that extend to an expansion of x.

    A prefix extends exactly when every remainder stays in ``[0, m/(q-1)]``.
    Subtrees are memoised on the exact remainder.
    """
    x = _checked(x, q)
    qg, m = q.gen, q.m
    upper = q.gen - 1

    @lru_cache(maxsize=None)
    def count(r: FieldElement, k: int) -> int:
        if k == 0:
            return 1
        t = qg * r
        total = 0
        for d in range(m + 1):
            s = t - d
            if sign_of(s) < 0:
                break
            if sign_of(m - upper * s) >= 0:
                total += count(s, k - 1)
        return total

    return count(x, n)
