"""Exact bases and field elements.

A base is either a rational number or a real algebraic number given by its
minimal polynomial and an isolating interval.  Elements of the field the base
generates are polynomials in the base reduced modulo the minimal polynomial,
so equality is syntactic and the sign of a nonzero element can always be
found by refining the isolating interval.  No floating point is used.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, List, Sequence, Tuple, Union

from .words import EPWord, InvalidWord

Poly = Tuple[Fraction, ...]
Rational = Union[int, Fraction]


class ExactArithmeticError(ValueError):
    pass


class NotGreaterThanOne(ExactArithmeticError):
    pass


class NotIsolating(ExactArithmeticError):
    pass


class NotSquareFree(ExactArithmeticError):
    pass


class NoRootAboveOne(ExactArithmeticError):
    pass


class BaseMismatch(ExactArithmeticError):
    pass


# ---------------------------------------------------------------------------
# polynomials over Q, coefficient tuples from low to high degree
# ---------------------------------------------------------------------------

def _trim(p: Iterable) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return _trim(quot), _trim(a)


def poly_monic(p: Poly) -> Poly:
    return tuple(c / p[-1] for c in p) if p else ()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_deriv(p: Poly) -> Poly:
    return _trim(i * c for i, c in enumerate(p) if i)


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: Poly) -> List[Poly]:
    seq = [_trim(p), poly_deriv(_trim(p))]
    while seq[-1]:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(tuple(-c for c in r))
    return seq


def _variations(seq: Sequence[Poly], x: Fraction) -> int:
    signs = [s for s in (_sign(poly_eval(p, x)) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo: Fraction, hi: Fraction, closed: bool = True) -> int:
    """Distinct real roots of a square-free ``p`` in ``[lo, hi]`` (or ``(lo, hi]``)."""
    if lo > hi:
        return 0
    seq = sturm_sequence(p)
    n = _variations(seq, lo) - _variations(seq, hi)
    if closed and poly_eval(p, lo) == 0:
        n += 1
    return n


def _integer_poly(p: Poly) -> Tuple[int, ...]:
    """Primitive integer multiple with positive leading coefficient."""
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def _factors(p: Poly) -> List[Tuple[int, ...]]:
    """Irreducible integer factors of ``p`` (multiplicities dropped)."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(int(c) * x**i for i, c in enumerate(_integer_poly(p)))
    _, factors = sympy.factor_list(expr, x)
    out = []
    for f, _mult in factors:
        coeffs = sympy.Poly(f, x).all_coeffs()[::-1]
        out.append(_integer_poly(_trim(int(c) for c in coeffs)))
    return out


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntervalApprox:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


@total_ordering
class AlgebraicBase:
    """A real base ``q > 1``, rational or the unique root of an irreducible
    integer polynomial inside an isolating interval.

    Use :func:`make_base`, :func:`rational_base` or :func:`poly_root_base`
    rather than calling the constructor.  The isolating interval is refined
    in place as sign queries demand; this cache does not change the value.
    """

    __slots__ = ("poly", "_monic", "_value", "_lo", "_hi", "_given", "_sign_lo", "m", "__weakref__")

    def __init__(self, poly: Tuple[int, ...], lo: Fraction, hi: Fraction):
        self.poly = poly
        self._monic = poly_monic(_trim(poly))
        self._value = -self._monic[0] if len(poly) == 2 else None
        if self._value is not None:
            lo = hi = self._value
        self._lo, self._hi = Fraction(lo), Fraction(hi)
        self._given = (self._lo, self._hi)
        self._sign_lo = _sign(poly_eval(self._monic, self._lo))
        if self._value is not None:
            self.m = math.ceil(self._value) - 1
        else:
            while math.floor(self._lo) != math.floor(self._hi):
                self._bisect()
            self.m = math.floor(self._lo)

    # -- basic data --------------------------------------------------------
    @property
    def kind(self) -> str:
        return "rational" if self._value is not None else "poly"

    @property
    def is_rational(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> Fraction:
        if self._value is None:
            raise ExactArithmeticError("irrational base has no rational value")
        return self._value

    @property
    def is_integer(self) -> bool:
        return self._value is not None and self._value.denominator == 1

    @property
    def ceil(self) -> int:
        return self.m + 1

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def interval(self) -> IntervalApprox:
        return IntervalApprox(self._lo, self._hi)

    def _bisect(self) -> None:
        mid = (self._lo + self._hi) / 2
        s = _sign(poly_eval(self._monic, mid))
        if s == 0:
            self._lo = self._hi = mid
        elif s == self._sign_lo:
            self._lo = mid
        else:
            self._hi = mid

    def refine(self, eps: Rational) -> IntervalApprox:
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        while self._hi - self._lo > eps:
            self._bisect()
        return self.interval

    # -- elements ----------------------------------------------------------
    def element(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            x._check(self)
            return x
        if isinstance(x, (list, tuple)):
            return FieldElement(self, x)
        return FieldElement(self, (Fraction(x),))

    @property
    def gen(self) -> "FieldElement":
        """The base itself as a field element."""
        return FieldElement(self, (Fraction(0), Fraction(1)))

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (Fraction(1),))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, ())

    # -- comparison --------------------------------------------------------
    def compare(self, other: "AlgebraicBase") -> int:
        if self is other:
            return 0
        if self.poly == other.poly:
            lo, hi = max(self._lo, other._lo), min(self._hi, other._hi)
            if count_roots(self._monic, lo, hi) > 0:
                return 0
        while not (self._hi < other._lo or other._hi < self._lo):
            if self._hi - self._lo >= other._hi - other._lo:
                self._bisect()
            else:
                other._bisect()
        return -1 if self._hi < other._lo else 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraicBase):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other) -> bool:
        if not isinstance(other, AlgebraicBase):
            return NotImplemented
        return self.compare(other) < 0

    def __hash__(self) -> int:
        return hash(self.poly)

    def __float__(self) -> float:
        if self._value is not None:
            return float(self._value)
        iv = self.refine(Fraction(1, 2**60))
        return float(iv.midpoint)

    def descriptor(self) -> str:
        if self._value is not None:
            return f"rat:{self._value}"
        coeffs = ",".join(str(c) for c in self.poly)
        return f"poly:{coeffs}@{self._given[0]},{self._given[1]}"

    def __str__(self) -> str:
        return self.descriptor()

    def __repr__(self) -> str:
        return f"AlgebraicBase({self.descriptor()!r} ~ {float(self):.12g})"


def rational_base(value: Rational) -> AlgebraicBase:
    value = Fraction(value)
    if value <= 1:
        raise NotGreaterThanOne(f"base {value} is not > 1")
    return AlgebraicBase((-value.numerator, value.denominator), value, value)


def poly_root_base(coeffs: Sequence[Rational], lo: Rational, hi: Rational) -> AlgebraicBase:
    """Base given by a square-free polynomial with exactly one root in [lo, hi]."""
    p = _trim(coeffs)
    lo, hi = Fraction(lo), Fraction(hi)
    if len(p) < 2:
        raise NotIsolating("constant polynomial has no isolated root")
    if len(poly_gcd(p, poly_deriv(p))) > 1:
        raise NotSquareFree(f"polynomial {coeffs} is not square-free")
    if lo > hi or count_roots(p, lo, hi) != 1:
        raise NotIsolating(f"[{lo}, {hi}] does not isolate exactly one root")
    if hi <= 1:
        raise NotGreaterThanOne("root lies at or below 1")
    if lo <= 1:
        if count_roots(p, Fraction(1), hi, closed=False) != 1:
            raise NotGreaterThanOne("root lies at or below 1")
        lo = Fraction(1)
    return _from_factors(p, lo, hi)


def _from_factors(p: Poly, lo: Fraction, hi: Fraction, open_lo: bool = False) -> AlgebraicBase:
    for f in _factors(p):
        fp = _trim(f)
        if count_roots(fp, lo, hi, closed=not open_lo) == 1:
            if len(f) == 2:
                return rational_base(Fraction(-f[0], f[1]))
            return AlgebraicBase(f, lo, hi)
    raise NotIsolating("no irreducible factor has its root in the interval")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}") from exc


def parse_base(text: str) -> AlgebraicBase:
    """Parse ``rat:p/s`` or ``poly:c0,c1,...,cd@lo,hi``.

    Named constants (``name:G``, ``name:q_star``, ``name:q_3``) are accepted as
    a convenience and resolved through :mod:`univoq.constants`.
    """
    text = text.strip()
    kind, _, body = text.partition(":")
    if kind == "rat":
        return rational_base(_parse_rational(body))
    if kind == "poly":
        coeffs, at, bounds = body.partition("@")
        if not at:
            raise ValueError(f"poly descriptor needs '@lo,hi': {text!r}")
        lo, _, hi = bounds.partition(",")
        return poly_root_base([_parse_rational(c) for c in coeffs.split(",")],
                              _parse_rational(lo), _parse_rational(hi))
    if kind == "name":
        from .constants import named_base
        return named_base(body)
    raise ValueError(f"unknown base descriptor {text!r}")


def make_base(desc) -> AlgebraicBase:
    """Build a base from a descriptor string, a rational, or ``(coeffs, lo, hi)``."""
    if isinstance(desc, AlgebraicBase):
        return desc
    if isinstance(desc, str):
        return parse_base(desc)
    if isinstance(desc, tuple) and len(desc) == 3:
        return poly_root_base(*desc)
    return rational_base(desc)


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

class FieldElement:
    """``sum(coeffs[i] * q**i)`` reduced modulo the minimal polynomial of q."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base: AlgebraicBase, coeffs: Iterable):
        c = _trim(coeffs)
        if len(c) >= len(base._monic):
            c = poly_divmod(c, base._monic)[1]
        self.base = base
        self.coeffs: Poly = c

    def _check(self, base: AlgebraicBase) -> None:
        if self.base is not base and self.base != base:
            raise BaseMismatch("elements belong to different bases")

    def _coerce(self, other) -> Poly:
        if isinstance(other, FieldElement):
            other._check(self.base)
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return _trim((other,))
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        try:
            return FieldElement(self.base, poly_add(self.coeffs, self._coerce(other)))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return FieldElement(self.base, poly_sub(self.coeffs, self._coerce(other)))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return FieldElement(self.base, poly_sub(self._coerce(other), self.coeffs))
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return FieldElement(self.base, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        try:
            return FieldElement(self.base, poly_mul(self.coeffs, self._coerce(other)))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid: s*a + t*f = g, g constant since f is irreducible
        r0, r1 = self.base._monic, self.coeffs
        s0, s1 = (), (Fraction(1),)
        while len(r1) > 1:
            quo, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        return FieldElement(self.base, tuple(c / r1[0] for c in s1))

    def __truediv__(self, other):
        if isinstance(other, FieldElement):
            other._check(self.base)
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.base, tuple(c / other for c in self.coeffs))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.base.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return (self.base is other.base or self.base == other.base) and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def sign(self) -> int:
        return sign_of(self)

    def __lt__(self, other):
        return sign_of(self - other) < 0

    def __le__(self, other):
        return sign_of(self - other) <= 0

    def __gt__(self, other):
        return sign_of(self - other) > 0

    def __ge__(self, other):
        return sign_of(self - other) >= 0

    def bounds(self) -> IntervalApprox:
        """Enclosure from the base's current isolating interval (no refinement)."""
        return IntervalApprox(*_enclose(self.coeffs, self.base._lo, self.base._hi))

    def as_rational(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __float__(self) -> float:
        if len(self.coeffs) <= 1:
            return float(self.as_rational())
        self.base.refine(Fraction(1, 2**60))
        return float(self.bounds().midpoint)

    def __str__(self) -> str:
        if len(self.coeffs) <= 1:
            return str(self.as_rational())
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*q" if i == 1 else f"{c}*q^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"FieldElement({self})"


def _enclose(coeffs: Poly, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    # lo > 1 > 0, so every power of q is increasing on the interval
    low = high = Fraction(0)
    plo = phi = Fraction(1)
    for c in coeffs:
        if c > 0:
            low += c * plo
            high += c * phi
        elif c < 0:
            low += c * phi
            high += c * plo
        plo *= lo
        phi *= hi
    return low, high


def sign_of(e: FieldElement) -> int:
    """Exact sign of a field element.

    Zero is decided algebraically: the modulus is the minimal polynomial, so
    a reduced element vanishes at q only if it is the zero polynomial.  Other
    signs come from bisecting the isolating interval until the enclosure
    excludes zero.
    """
    c = e.coeffs
    if not c:
        return 0
    if len(c) == 1:
        return _sign(c[0])
    base = e.base
    while True:
        low, high = _enclose(c, base._lo, base._hi)
        if low > 0:
            return 1
        if high < 0:
            return -1
        base._bisect()


def _geometric_value(base: AlgebraicBase, w: EPWord) -> FieldElement:
    q = base.gen
    qinv = q.inverse()
    total, p = base.zero, base.one
    for d in w.pre:
        p = p * qinv
        total = total + p * d
    if w.is_finite:
        return total
    per_sum, pp = base.zero, base.one
    for d in w.per:
        pp = pp * qinv
        per_sum = per_sum + pp * d
    return total + p * per_sum / (1 - pp)


def base_from_word(w: EPWord) -> AlgebraicBase:
    """The unique q > 1 with ``sum(w_i q^-i) == 1``.

    Clearing denominators in the geometric series for ``u v v v ...`` gives
    ``(q^|u| - U(q)) (q^|v| - 1) - V(q) = 0`` with ``U, V`` the digit
    polynomials of preperiod and period.
    """
    if not isinstance(w, EPWord):
        w = EPWord.parse(w) if isinstance(w, str) else EPWord(tuple(w), ())
    if any(d < 0 for d in w.pre + w.per):
        raise InvalidWord("digits must be nonnegative")
    if w.is_finite:
        raise NoRootAboveOne(f"{w} has a zero period; the value map has no infinite-word root")
    u, v = w.pre, w.per
    x_u = tuple(Fraction(int(i == len(u))) for i in range(len(u) + 1))
    U = _trim(u[len(u) - 1 - i] for i in range(len(u)))
    V = _trim(v[len(v) - 1 - i] for i in range(len(v)))
    x_v_minus_1 = _trim([-1] + [0] * (len(v) - 1) + [1])
    p = poly_sub(poly_mul(poly_sub(x_u, U), x_v_minus_1), V)
    top = Fraction(max(u + v) + 1)
    base = _from_factors(p, Fraction(1), top, open_lo=True)
    if sign_of(_geometric_value(base, w) - 1) != 0:
        raise ExactArithmeticError(f"internal: {w} does not evaluate to 1 at {base}")
    return base
