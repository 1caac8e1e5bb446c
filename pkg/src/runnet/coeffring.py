"""Exact rationals and dense polynomials in ``t`` over the rationals.

Every coefficient downstream lives in :class:`Poly`.  Rationals are plain
:class:`fractions.Fraction` values, which are arbitrary precision and always
stored in lowest terms.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def as_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to a rational")


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``p/q``, dropping the denominator when it is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Immutable dense polynomial in ``t``; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash: int | None = None

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: Scalar = 1) -> "Poly":
        if power < 0:
            raise ValueError("negative power of t")
        return cls([0] * power + [c])

    @classmethod
    def coerce(cls, value: "Poly | Scalar") -> "Poly":
        if isinstance(value, Poly):
            return value
        return cls.const(value)

    # -- structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- ring operations -----------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        return self + (-Poly.coerce(other))

    def __rsub__(self, other: "Poly | Scalar") -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            c = as_rational(other)
            return Poly(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlead = divisor.coeffs[-1]
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] / dlead
            quot[k] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[k + j] -= q * c
        return Poly(quot), Poly(rem[:dd])

    def div_exact(self, divisor: "Poly | Scalar") -> "Poly":
        """Quotient ``q`` with ``q * divisor == self``; raise if not exact."""
        divisor = Poly.coerce(divisor)
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivision(f"({self}) is not divisible by ({divisor})")
        return q

    def __call__(self, t: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- text ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = format_rational(abs(c))
            if i == 0:
                body = mag
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == "1" else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"

    def csv(self) -> str:
        return ",".join(format_rational(c) for c in self.coeffs) or "0"


def poly(*coeffs: Scalar) -> Poly:
    """Shorthand: ``poly(4, 2)`` is ``4 + 2*t``."""
    return Poly(coeffs)


T = Poly.monomial(1)

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?P<var>t(?:\s*\^\s*(?P<pow>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str | int) -> Poly:
    """Parse the text form produced by ``str(Poly)``, e.g. ``"4 + 2*t - t^3"``.

    Also accepts a bare integer, and ``t**k`` as a synonym for ``t^k``.
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return Poly.const(text)
    if not isinstance(text, str):
        raise ValueError(f"polynomial text expected, got {text!r}")
    s = text.replace("**", "^").strip()
    if not s:
        raise ValueError("empty polynomial text")
    result = Poly()
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group("coef") or m.group("var")):
            raise ValueError(f"cannot parse polynomial {text!r} at column {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r} at column {pos}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        power = 0
        if m.group("var"):
            power = int(m.group("pow")) if m.group("pow") else 1
        result = result + Poly.monomial(power, coef)
        pos = m.end()
        first = False
    return result


def poly_from_csv(row: str | Sequence[str]) -> Poly:
    fields = row.split(",") if isinstance(row, str) else row
    return Poly(Fraction(f.strip()) for f in fields if f.strip())
