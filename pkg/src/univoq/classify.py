"""Lexicographic admissibility and univoqueness tests, and base classification.

Every condition here has the shape "for all n with a trigger on c_n, the tail
after n (possibly complemented) compares below alpha".  A finite prefix can
refute such a condition but only eventually periodic inputs, which have
finitely many distinct tails, can confirm it.  Hence three-valued verdicts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

from .exact import AlgebraicBase
from .expansion import (DEFAULT_MAX_STEPS, GREEDY, QUASI, Alpha, NotDetected, _checked, alpha_of,
                        detect_eventual_periodicity)
from .words import EPWord, Word, compare_prefix, complement, format_any, lex_compare

DEFAULT_DEPTH = 1000

Seq = Union[EPWord, Sequence[int]]


@dataclass(frozen=True)
class Verdict3:
    value: Optional[bool]
    witness: Optional[int] = None
    depth: int = 0
    reason: str = ""

    def __post_init__(self):
        if self.value is False and self.witness is None:
            raise ValueError("a False verdict needs a witness index")

    @property
    def is_true(self) -> bool:
        return self.value is True

    @property
    def is_false(self) -> bool:
        return self.value is False

    @property
    def is_unknown(self) -> bool:
        return self.value is None

    def to_json(self):
        return {"value": {True: True, False: False, None: "unknown"}[self.value],
                "witness": self.witness, "depth": self.depth, "reason": self.reason}

    def __str__(self) -> str:
        if self.value is None:
            return f"Unknown(depth={self.depth})"
        if self.value:
            return "True"
        return f"False(n={self.witness}{', ' + self.reason if self.reason else ''})"


TRUE = Verdict3(True)


def _compare_tail(tail: Seq, alpha: Seq, depth: int) -> Optional[int]:
    """-1/0/1, or None when the available digits do not separate the words."""
    if isinstance(tail, EPWord) and isinstance(alpha, EPWord):
        return lex_compare(tail, alpha)
    if isinstance(tail, EPWord):
        tail = tail.prefix(len(alpha))
    if isinstance(alpha, EPWord):
        alpha = alpha.prefix(len(tail))
    c = compare_prefix(tail, alpha[:depth] if depth else alpha)
    return c if c else None


def _tail_condition(c: Seq, alpha: Seq, m: int, trigger: Callable[[int], bool], *,
                    complemented: bool, strict: bool, depth: int, reason: str) -> Verdict3:
    exact_c = isinstance(c, EPWord)
    if exact_c:
        positions = range(1, c.cycle_start + 1)
        examined = c.cycle_start + (depth if not isinstance(alpha, EPWord) else 0)
    else:
        c = tuple(c)
        positions = range(1, len(c))
        examined = len(c)
    undecided = False
    for n in positions:
        if not trigger(c[n - 1]):
            continue
        tail = c.shift(n) if exact_c else c[n:]
        if complemented:
            tail = complement(tail, m)
        cmp = _compare_tail(tail, alpha, depth)
        if cmp is None:
            undecided = True
        elif cmp > 0 or (cmp == 0 and strict):
            return Verdict3(False, n, examined, reason)
    if exact_c and not undecided:
        return Verdict3(True, None, examined)
    return Verdict3(None, None, examined)


def _check_digits(c: Seq, m: int) -> None:
    digits = (c.pre + c.per) if isinstance(c, EPWord) else tuple(c)
    if any(d < 0 or d > m for d in digits):
        raise ValueError(f"digits of {format_any(c)} must lie in 0..{m}")


def _both(a: Verdict3, b: Verdict3) -> Verdict3:
    if a.is_false and b.is_false:
        return a if a.witness <= b.witness else b
    if a.is_false or b.is_false:
        return a if a.is_false else b
    if a.is_true and b.is_true:
        return Verdict3(True, None, max(a.depth, b.depth))
    return Verdict3(None, None, max(a.depth, b.depth))


def _alpha_seq(q: AlgebraicBase, depth: int) -> Seq:
    return alpha_of(q).exact_or_prefix(depth)


def is_greedy_admissible(c: Seq, q: AlgebraicBase, depth: int = DEFAULT_DEPTH) -> Verdict3:
    """Greedy expansion test: the tail after every digit below m is below alpha."""
    m = q.m
    _check_digits(c, m)
    return _tail_condition(c, _alpha_seq(q, depth), m, lambda d: d < m,
                           complemented=False, strict=True, depth=depth, reason="tail >= alpha")


def is_univoque_sequence(c: Seq, q: AlgebraicBase, depth: int = DEFAULT_DEPTH,
                         alpha: Optional[Seq] = None) -> Verdict3:
    """Unique expansion test: the greedy condition plus its mirror on complements."""
    m = q.m
    _check_digits(c, m)
    a = _alpha_seq(q, depth) if alpha is None else alpha
    upper = _tail_condition(c, a, m, lambda d: d < m, complemented=False, strict=True,
                            depth=depth, reason="tail >= alpha")
    lower = _tail_condition(c, a, m, lambda d: d > 0, complemented=True, strict=True,
                            depth=depth, reason="complement tail >= alpha")
    return _both(upper, lower)


def is_quasi_greedy_admissible(c: Seq, q: AlgebraicBase, depth: int = DEFAULT_DEPTH) -> Verdict3:
    a = _alpha_seq(q, depth)
    top = q.m
    digits = c.prefix(c.cycle_start) if isinstance(c, EPWord) else tuple(c)
    for i, d in enumerate(digits, start=1):
        if d < 0 or d > top:
            return Verdict3(False, i, depth, "digit exceeds alpha_1")
    verdict = _tail_condition(c, a, top, lambda d: d < top, complemented=False, strict=False,
                              depth=depth, reason="tail > alpha")
    if isinstance(c, EPWord) and c.is_finite:
        finite = Verdict3(False, len(c.pre) + 1, verdict.depth, "finite sequence")
        return finite if not verdict.is_false or verdict.witness > finite.witness else verdict
    return verdict


def is_alpha_admissible(w: EPWord, strict_for_U_closure: bool = False) -> Verdict3:
    """Whether ``w`` is the quasi-greedy expansion of 1 in some base.

    Every shift must be <= w and w must be infinite.  With
    ``strict_for_U_closure`` the complement of every shift must also be
    strictly below w.
    """
    if w.is_finite:
        return Verdict3(False, len(w.pre) + 1, w.cycle_start, "finite sequence")
    m = w[0]
    shifts = _tail_condition(w, w, m, lambda d: True, complemented=False, strict=False,
                             depth=0, reason="shift > w")
    if not strict_for_U_closure or shifts.is_false:
        return shifts
    comp = _tail_condition(w, w, m, lambda d: True, complemented=True, strict=True,
                           depth=0, reason="complement shift >= w")
    return _both(shifts, comp)


def _complement_shift_condition(q: AlgebraicBase, depth: int, strict: bool) -> Verdict3:
    a = _alpha_seq(q, depth)
    reason = "complement shift >= alpha" if strict else "complement shift > alpha"
    return _tail_condition(a, a, q.m, lambda d: True, complemented=True, strict=strict,
                           depth=depth, reason=reason)


def base_in_V(q: AlgebraicBase, depth: int = DEFAULT_DEPTH) -> Verdict3:
    return _complement_shift_condition(q, depth, strict=False)


def base_in_U_closure(q: AlgebraicBase, depth: int = DEFAULT_DEPTH) -> Verdict3:
    return _complement_shift_condition(q, depth, strict=True)


def base_in_U(q: AlgebraicBase, depth: int = DEFAULT_DEPTH,
              max_steps: int = DEFAULT_MAX_STEPS) -> Verdict3:
    """Whether 1 has a unique expansion in base q."""
    if q.is_integer:
        return TRUE
    a = alpha_of(q, max_steps)
    if a.word is None:
        # a finite greedy expansion of 1 would make alpha purely periodic
        return is_univoque_sequence(a.prefix(depth), q, depth)
    greedy = detect_eventual_periodicity(1, q, GREEDY, max_steps)
    if isinstance(greedy, EPWord) and greedy.is_finite:
        return Verdict3(False, len(greedy.pre), greedy.cycle_start,
                        "greedy expansion of 1 is finite")
    return is_univoque_sequence(a.word, q, depth)


def point_in_Vq(x, q: AlgebraicBase, depth: int = DEFAULT_DEPTH,
                max_steps: int = DEFAULT_MAX_STEPS) -> Verdict3:
    """Complement-tail test on the quasi-greedy expansion of x."""
    x = _checked(x, q)
    found = detect_eventual_periodicity(x, q, QUASI, max_steps)
    a = found if isinstance(found, EPWord) else found.prefix[:depth]
    return _tail_condition(a, _alpha_seq(q, depth), q.m, lambda d: d > 0, complemented=True,
                           strict=False, depth=depth, reason="complement tail > alpha")


def is_V_sequence(c: Seq, q: AlgebraicBase, depth: int = DEFAULT_DEPTH) -> Verdict3:
    """Membership of a digit sequence in the set of quasi-greedy expansions of points of V_q."""
    if isinstance(c, EPWord) and c == EPWord((), (0,)):
        return TRUE
    qg = is_quasi_greedy_admissible(c, q, depth)
    comp = _tail_condition(c, _alpha_seq(q, depth), q.m, lambda d: d > 0, complemented=True,
                           strict=False, depth=depth, reason="complement tail > alpha")
    return _both(qg, comp)


@dataclass(frozen=True)
class BaseClassification:
    in_V: Verdict3
    in_U_closure: Verdict3
    in_U: Verdict3
    alpha: Union[EPWord, Word]
    alpha_is_ep: bool

    def __post_init__(self):
        chain = [self.in_U, self.in_U_closure, self.in_V]
        for small, big in zip(chain, chain[1:]):
            if small.is_true and big.is_false:
                raise AssertionError(f"classification breaks U ⊂ cl(U) ⊂ V: {self}")

    @property
    def triple(self):
        return (self.in_V.value, self.in_U_closure.value, self.in_U.value)

    def to_json(self):
        return {
            "alpha": format_any(self.alpha),
            "alpha_is_ep": self.alpha_is_ep,
            "in_V": self.in_V.to_json()["value"],
            "in_U_closure": self.in_U_closure.to_json()["value"],
            "in_U": self.in_U.to_json()["value"],
            "witnesses": {
                "in_V": self.in_V.witness,
                "in_U_closure": self.in_U_closure.witness,
                "in_U": self.in_U.witness,
            },
        }


def classify_base(q: AlgebraicBase, depth: int = DEFAULT_DEPTH,
                  max_steps: int = DEFAULT_MAX_STEPS) -> BaseClassification:
    a = alpha_of(q, max_steps)
    v = base_in_V(q, depth)
    uc = base_in_U_closure(q, depth)
    u = base_in_U(q, depth, max_steps)
    # propagate along U ⊂ cl(U) ⊂ V where a verdict is still open
    if u.is_true:
        uc = uc if uc.value is not None else Verdict3(True, None, uc.depth, "implied by in_U")
    if uc.is_true:
        v = v if v.value is not None else Verdict3(True, None, v.depth, "implied by in_U_closure")
    if v.is_false and uc.is_unknown:
        uc = Verdict3(False, v.witness, v.depth, "implied by in_V")
    if uc.is_false and u.is_unknown:
        u = Verdict3(False, uc.witness, uc.depth, "implied by in_U_closure")
    return BaseClassification(v, uc, u, a.exact_or_prefix(min(depth, 64)), a.is_ep)
