"""Named bases and sequences: Thue-Morse, the Komornik-Loreti constant, G, q_n and q*."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .exact import AlgebraicBase, IntervalApprox, base_from_word, rational_base
from .expansion import alpha_prefix
from .words import EPWord, Word


def thue_morse(n: int) -> Word:
    """First n terms of tau, where tau_{2^N} = 1 and tau_{2^N + i} = 1 - tau_i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    tau: list = []
    while len(tau) < n:
        k = len(tau) + 1  # next power of two
        tau.append(1)
        tau.extend(1 - tau[i - 1] for i in range(1, k))
    return tuple(tau[:n])


def _partial_sum(q: Fraction, digits: Word) -> Fraction:
    s = Fraction(0)
    for d in reversed(digits):
        s = (s + d) / q
    return s


def _kl_side(q: Fraction, n: int) -> Optional[int]:
    """Sign of ``sum tau_i q^-i - 1`` if the first n terms decide it, else None."""
    s = _partial_sum(q, thue_morse(n))
    if s > 1:
        return 1
    if s + 1 / (q ** n * (q - 1)) < 1:
        return -1
    return None


def komornik_loreti(eps) -> IntervalApprox:
    """Certified enclosure of the root of ``sum tau_i q^-i = 1`` with width <= eps.

    The series is decreasing in q, so bisection applies.  The truncation
    error after n terms is at most ``q^-n / (q - 1)``; when a midpoint
    cannot be decided the number of terms is doubled.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lo, hi = Fraction(3, 2), Fraction(2)
    n = 16
    while hi - lo > eps:
        mid = (lo + hi) / 2
        side = _kl_side(mid, n)
        while side is None:
            n *= 2
            side = _kl_side(mid, n)
        if side > 0:
            lo = mid
        else:
            hi = mid
    return IntervalApprox(lo, hi)


def alpha_prefix_interval(iv: IntervalApprox, n: int) -> Word:
    """Digits of alpha shared by every base in the interval.

    alpha is increasing in q, so whatever alpha(lo) and alpha(hi) agree on
    is fixed for all q in between.  May be shorter than n.
    """
    a = alpha_prefix(rational_base(iv.lo), n)
    b = alpha_prefix(rational_base(iv.hi), n)
    k = 0
    while k < n and a[k] == b[k]:
        k += 1
    return a[:k]


def q_n_word(n: int) -> EPWord:
    if n < 1:
        raise ValueError("n must be >= 1")
    return EPWord((1, 1, 0) * n, (1, 0))


G_WORD = EPWord((), (1, 0))
Q_STAR_WORD = EPWord((), (1, 1, 0))

_QN = re.compile(r"q_?(\d+)$")


def named_base(name: str, n: Optional[int] = None) -> AlgebraicBase:
    """``G``, ``q_star`` or ``q_n`` (give n, or write it as ``q_3``)."""
    key = name.strip()
    if key in ("G", "golden"):
        return base_from_word(G_WORD)
    if key in ("q_star", "q*", "qstar"):
        return base_from_word(Q_STAR_WORD)
    if key == "q_n":
        if n is None:
            raise ValueError("q_n needs n")
        return base_from_word(q_n_word(n))
    mt = _QN.match(key)
    if mt:
        return base_from_word(q_n_word(int(mt.group(1))))
    raise ValueError(f"unknown named base {name!r}")


@dataclass(frozen=True)
class CertifiedConstant:
    name: str
    base: Union[AlgebraicBase, IntervalApprox]
    defining_data: Union[EPWord, Word]

    def to_json(self):
        if isinstance(self.base, IntervalApprox):
            b = {"interval": [str(self.base.lo), str(self.base.hi)],
                 "approx": float(self.base.midpoint)}
        else:
            b = {"descriptor": self.base.descriptor(), "approx": float(self.base)}
        data = self.defining_data
        word = str(data) if isinstance(data, EPWord) else "".join(map(str, data)) + "..."
        return {"name": self.name, "base": b, "word": word}


def all_constants(eps=Fraction(1, 10**12), family: int = 3) -> Tuple[CertifiedConstant, ...]:
    out = [CertifiedConstant("G", named_base("G"), G_WORD)]
    out += [CertifiedConstant(f"q_{k}", named_base("q_n", k), q_n_word(k))
            for k in range(1, family + 1)]
    out.append(CertifiedConstant("q_star", named_base("q_star"), Q_STAR_WORD))
    out.append(CertifiedConstant("komornik_loreti", komornik_loreti(eps), thue_morse(16)))
    return tuple(out)
