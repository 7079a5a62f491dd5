"""Exact arithmetic in k = Q[y, y^-1].

A :class:`LaurentPoly` is stored densely as ``(low, coeffs)`` where ``coeffs``
is a tuple of nonzero-ended rationals for exponents ``low, low+1, ...``.
Coefficients are Python ints whenever they are integral and
:class:`fractions.Fraction` otherwise, which keeps the common integer case fast.

The Euclidean norm is the exponent span, so the units are exactly the
monomials ``c*y^e`` and every associate class has a unique monic
representative with nonzero constant term (see :func:`canonicalize`).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

Rational = Union[int, Fraction]

__all__ = [
    "LaurentPoly",
    "Rational",
    "ZERO",
    "ONE",
    "Y",
    "add",
    "mul",
    "euclid_norm",
    "euclid_div",
    "gcd",
    "gcd_many",
    "canonicalize",
    "serialize",
    "parse",
    "pretty",
]


def _coerce(c) -> Rational:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _trim(low: int, coeffs: list) -> Tuple[int, tuple]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return low + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    """An immutable element of Q[y, y^-1]."""

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, low: int = 0, coeffs: Iterable = ()):
        lo, cs = _trim(low, [_coerce(c) for c in coeffs])
        object.__setattr__(self, "low", lo)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, low: int, coeffs: tuple) -> "LaurentPoly":
        # caller guarantees normalized, trimmed coefficients
        obj = object.__new__(cls)
        object.__setattr__(obj, "low", low if coeffs else 0)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Dict[int, object]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c, e: int) -> "LaurentPoly":
        return cls(e, (c,))

    @classmethod
    def coerce(cls, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        if isinstance(other, str):
            return parse(other)
        raise TypeError(f"cannot convert {type(other).__name__} to LaurentPoly")

    # -- structure ----------------------------------------------------------

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def terms(self) -> Dict[int, Rational]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def coefficient(self, e: int) -> Rational:
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def norm(self) -> int:
        return euclid_norm(self)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def evaluate(self, value):
        """Evaluate at ``y = value`` (``value`` must be invertible if low < 0)."""
        total = 0
        for e, c in self.terms().items():
            total += c * Fraction(value) ** e
        return total

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by ``y**e``."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.low + e, self.coeffs)

    def scale(self, c) -> "LaurentPoly":
        c = _coerce(c)
        if c == 0 or not self.coeffs:
            return ZERO
        if c == 1:
            return self
        return LaurentPoly._raw(self.low, tuple(_coerce(x * c) for x in self.coeffs))

    # -- dunder protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.low, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"LaurentPoly({serialize(self)!r})"

    def __str__(self) -> str:
        return serialize(self)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.low, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit():
                raise ZeroDivisionError("only units have negative powers in k")
            return LaurentPoly._raw(-self.low * (-k), (_coerce(Fraction(1) / self.coeffs[0] ** (-k)),))
        result, base = ONE, self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def __divmod__(self, other) -> Tuple["LaurentPoly", "LaurentPoly"]:
        return euclid_div(self, LaurentPoly.coerce(other))

    def __floordiv__(self, other) -> "LaurentPoly":
        return euclid_div(self, LaurentPoly.coerce(other))[0]

    def __mod__(self, other) -> "LaurentPoly":
        return euclid_div(self, LaurentPoly.coerce(other))[1]

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return ``self / other``, raising ``ArithmeticError`` if inexact."""
        q, r = euclid_div(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "LaurentPoly") -> bool:
        if not self.coeffs:
            return not other.coeffs
        return not euclid_div(other, self)[1]


ZERO = LaurentPoly._raw(0, ())
ONE = LaurentPoly._raw(0, (1,))
Y = LaurentPoly._raw(1, (1,))


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.coeffs:
        return b
    if not b.coeffs:
        return a
    low = min(a.low, b.low)
    high = max(a.high, b.high)
    out = [0] * (high - low + 1)
    off = a.low - low
    for i, c in enumerate(a.coeffs):
        out[off + i] = c
    off = b.low - low
    for i, c in enumerate(b.coeffs):
        out[off + i] += c
    lo, cs = _trim(low, [_coerce(c) if isinstance(c, Fraction) else c for c in out])
    return LaurentPoly._raw(lo, cs)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return ZERO
    if len(ac) == 1:
        return b.scale(ac[0]).shift(a.low)
    if len(bc) == 1:
        return a.scale(bc[0]).shift(b.low)
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x:
            for j, z in enumerate(bc):
                out[i + j] += x * z
    return LaurentPoly._raw(*_trim(a.low + b.low, [_coerce(c) if isinstance(c, Fraction) else c for c in out]))


def euclid_norm(a: LaurentPoly) -> int:
    """Exponent span ``max - min``; zero exactly on units."""
    if not a.coeffs:
        raise ValueError("euclid_norm of zero is undefined")
    return len(a.coeffs) - 1


def euclid_div(a: LaurentPoly, b: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Return ``(q, r)`` with ``a = q*b + r`` and ``r = 0`` or ``norm(r) < norm(b)``."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not a.coeffs:
        return ZERO, ZERO
    bc = b.coeffs
    nb = len(bc)
    if nb == 1:
        inv = Fraction(1) / bc[0] if bc[0] not in (1, -1) else bc[0]
        return a.scale(inv).shift(-b.low), ZERO
    if len(a.coeffs) < nb:
        return ZERO, a
    # ordinary polynomial division of a*y^-a.low by b*y^-b.low, highest first
    rem = list(a.coeffs)
    lead = bc[-1]
    unit_lead = lead in (1, -1)
    nq = len(rem) - nb + 1
    q = [0] * nq
    for k in range(nq - 1, -1, -1):
        c = rem[k + nb - 1]
        if c == 0:
            continue
        t = c * lead if unit_lead else _coerce(Fraction(c) / lead)
        q[k] = t
        for j in range(nb):
            rem[k + j] -= t * bc[j]
    qp = LaurentPoly._raw(*_trim(a.low - b.low, [_coerce(c) if isinstance(c, Fraction) else c for c in q]))
    rp = LaurentPoly._raw(*_trim(a.low, [_coerce(c) if isinstance(c, Fraction) else c for c in rem[: nb - 1]]))
    return qp, rp


def canonicalize(a: LaurentPoly) -> LaurentPoly:
    """Unique associate: a polynomial in y, nonzero constant term, leading coefficient 1."""
    if not a.coeffs:
        raise ValueError("the zero polynomial has no canonical associate")
    lead = a.coeffs[-1]
    if lead == 1:
        return LaurentPoly._raw(0, a.coeffs)
    inv = Fraction(1) / lead
    return LaurentPoly._raw(0, tuple(_coerce(c * inv) for c in a.coeffs))


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Canonical greatest common divisor."""
    if not a.coeffs and not b.coeffs:
        raise ValueError("gcd(0, 0) is undefined")
    while b.coeffs:
        if len(b.coeffs) == 1:
            return ONE
        a, b = b, euclid_div(a, b)[1]
    return canonicalize(a)


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    g = ZERO
    for p in polys:
        if not p:
            continue
        g = p if not g else gcd(g, p)
        if g.is_unit():
            return ONE
    if not g:
        raise ValueError("gcd of only zeros is undefined")
    return canonicalize(g)


# -- serialization ------------------------------------------------------------

def _fmt_rat(c: Rational) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def serialize(a: LaurentPoly) -> str:
    """Canonical text form, ascending exponents: ``1 - 1*y^4``, ``-1/2*y^-1 + 3``."""
    if not a.coeffs:
        return "0"
    parts = []
    for e, c in sorted(a.terms().items()):
        mag = _fmt_rat(abs(c))
        body = mag if e == 0 else f"{mag}*y^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def pretty(a: LaurentPoly) -> str:
    """Human-oriented form, descending exponents: ``y^4 - 1``."""
    if not a.coeffs:
        return "0"
    parts = []
    for e, c in sorted(a.terms().items(), reverse=True):
        mag = abs(c)
        if e == 0:
            body = _fmt_rat(mag)
        else:
            ypart = "y" if e == 1 else f"y^{e}"
            body = ypart if mag == 1 else f"{_fmt_rat(mag)}*{ypart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<y1>y)(?:\s*\^\s*(?P<e1>[+-]?\d+))?)?
        | (?P<y2>y)(?:\s*\^\s*(?P<e2>[+-]?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Parse the canonical grammar, tolerating whitespace, any term order and implicit ``1*``."""
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial")
    terms: Dict[int, Rational] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            if m.group("y1"):
                e = int(m.group("e1")) if m.group("e1") is not None else 1
            else:
                e = 0
        else:
            coef = Fraction(1)
            e = int(m.group("e2")) if m.group("e2") is not None else 1
        terms[e] = terms.get(e, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPoly.from_terms(terms)
