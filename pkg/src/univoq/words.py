"""Finite and eventually periodic digit words.

Finite words are plain tuples of ints.  Infinite words that are eventually
periodic are held by :class:`EPWord` in canonical form, so that two EPWords
compare equal exactly when they describe the same infinite sequence.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import islice
from typing import Iterator, Sequence, Tuple, Union

Word = Tuple[int, ...]


class InvalidWord(ValueError):
    pass


class DigitExceedsM(ValueError):
    pass


def _primitive_root(per: Word) -> Word:
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per[:d] * (n // d) == per:
            return per[:d]
    return per


@total_ordering
@dataclass(frozen=True)
class EPWord:
    """Infinite word ``pre + per + per + ...``.

    Construction canonicalises: the period is made primitive and rotated
    backwards into the preperiod as far as possible.  An empty period means
    a finite word padded with zeros and is stored as ``per == (0,)``.
    """

    pre: Word
    per: Word

    def __post_init__(self):
        pre = tuple(int(d) for d in self.pre)
        per = tuple(int(d) for d in self.per) or (0,)
        if any(d < 0 for d in pre + per):
            raise InvalidWord("digits must be nonnegative")
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @classmethod
    def finite(cls, digits: Sequence[int]) -> "EPWord":
        return cls(tuple(digits), (0,))

    @classmethod
    def parse(cls, text: str) -> "EPWord":
        return parse_epword(text)

    @property
    def is_finite(self) -> bool:
        return self.per == (0,)

    @property
    def cycle_start(self) -> int:
        """Number of distinct shifts ``self.shift(k)`` for ``k >= 1`` before they repeat."""
        return len(self.pre) + len(self.per)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("infinite word has no negative indices")
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def __iter__(self) -> Iterator[int]:
        yield from self.pre
        while True:
            yield from self.per

    def prefix(self, n: int) -> Word:
        return tuple(islice(iter(self), n))

    def shift(self, k: int) -> "EPWord":
        """The tail ``w_{k+1} w_{k+2} ...`` (1-based digit positions)."""
        if k <= len(self.pre):
            return EPWord(self.pre[k:], self.per)
        r = (k - len(self.pre)) % len(self.per)
        return EPWord((), self.per[r:] + self.per[:r])

    def complement(self, m: int) -> "EPWord":
        return EPWord(complement(self.pre, m), complement(self.per, m))

    @property
    def max_digit(self) -> int:
        return max(self.pre + self.per)

    def __lt__(self, other: "EPWord") -> bool:
        if not isinstance(other, EPWord):
            return NotImplemented
        return lex_compare(self, other) < 0

    def __str__(self) -> str:
        return format_word(self.pre) + "(" + format_word(self.per) + ")"


def lex_compare(u: EPWord, v: EPWord) -> int:
    """Lexicographic comparison of two infinite words, returning -1, 0 or 1."""
    if u == v:
        return 0
    bound = max(len(u.pre), len(v.pre)) + math.lcm(len(u.per), len(v.per))
    for a, b in zip(islice(u, bound), islice(v, bound)):
        if a != b:
            return -1 if a < b else 1
    return 0  # unreachable for canonical words


def compare_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare on the common length only; 0 means no difference was found there."""
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def complement(w, m: int):
    """Digit-wise ``m - c``; keeps the shape (tuple or EPWord)."""
    if isinstance(w, EPWord):
        return w.complement(m)
    if any(d > m for d in w):
        raise DigitExceedsM(f"digit exceeds m={m}")
    return tuple(m - d for d in w)


def format_word(digits: Sequence[int]) -> str:
    if any(d > 9 for d in digits):
        return ",".join(str(d) for d in digits)
    return "".join(str(d) for d in digits)


def format_any(w: Union[EPWord, Sequence[int]]) -> str:
    return str(w) if isinstance(w, EPWord) else format_word(w)


_EP_RE = re.compile(r"^\s*([0-9,]*)\s*(?:\(([0-9,]+)\))?\s*$")


def _parse_digits(text: str) -> Word:
    text = text.strip().strip(",")
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(c) for c in text)


def parse_word(text: str) -> Word:
    if "(" in text:
        raise InvalidWord(f"finite word expected, got {text!r}")
    if not re.fullmatch(r"[0-9,]*", text.strip()):
        raise InvalidWord(f"bad word {text!r}")
    return _parse_digits(text)


def parse_epword(text: str) -> EPWord:
    """Parse ``11(01)``; a word without parentheses is finite (zero padded)."""
    mt = _EP_RE.match(text)
    if not mt:
        raise InvalidWord(f"bad eventually periodic word {text!r}")
    pre = _parse_digits(mt.group(1))
    per = _parse_digits(mt.group(2) or "")
    return EPWord(pre, per)
