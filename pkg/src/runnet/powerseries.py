"""Truncated power series in ``x`` with coefficients in ``Q[t]``.

A :class:`Series` carries an inclusive degree bound ``N``; every stored
coefficient is exact.  Binary operations require equal bounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from .coeffring import InexactDivision, Poly, Scalar, as_rational
from .euler import euler_numbers

__all__ = [
    "BoundMismatch",
    "NonUnitConstantTerm",
    "InexactDivision",
    "Series",
    "builtin_series",
    "exps",
    "even",
    "odd",
    "euls",
    "mu_word",
    "mu_perm",
    "mu_alt",
]

ZERO = Poly()
ONE = Poly.const(1)


class BoundMismatch(ValueError):
    pass


class NonUnitConstantTerm(ArithmeticError):
    """The constant term is not a nonzero rational, so no reciprocal exists in the ring."""


class Series:
    __slots__ = ("bound", "coeffs")

    def __init__(self, coeffs: Iterable[Poly | Scalar], bound: int):
        if bound < 0:
            raise ValueError("bound must be non-negative")
        cs = [Poly.coerce(c) for c in coeffs]
        if len(cs) > bound + 1:
            cs = cs[: bound + 1]
        cs.extend([ZERO] * (bound + 1 - len(cs)))
        self.bound = bound
        self.coeffs: tuple[Poly, ...] = tuple(cs)

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, bound: int) -> "Series":
        return cls((), bound)

    @classmethod
    def one(cls, bound: int) -> "Series":
        return cls((ONE,), bound)

    @classmethod
    def const(cls, c: Poly | Scalar, bound: int) -> "Series":
        return cls((Poly.coerce(c),), bound)

    @classmethod
    def monomial(cls, power: int, bound: int, coeff: Poly | Scalar = 1) -> "Series":
        """``coeff * x**power``; vanishes if ``power`` exceeds the bound."""
        if power < 0:
            raise ValueError("negative power of x")
        cs = [ZERO] * (bound + 1)
        if power <= bound:
            cs[power] = Poly.coerce(coeff)
        return cls(cs, bound)

    @classmethod
    def from_function(cls, f: Callable[[int], Poly | Scalar], bound: int) -> "Series":
        return cls((f(n) for n in range(bound + 1)), bound)

    # -- structure -----------------------------------------------------

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.bound + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.bound == other.bound and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.bound, self.coeffs))

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{terms}], bound={self.bound})"

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, bound: int) -> "Series":
        if bound > self.bound:
            raise BoundMismatch(f"cannot extend a series known to x^{self.bound} up to x^{bound}")
        return Series(self.coeffs[: bound + 1], bound)

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.bound != self.bound:
            raise BoundMismatch(f"bounds differ: {self.bound} vs {other.bound}")

    # -- ring operations -----------------------------------------------

    def __neg__(self) -> "Series":
        return Series((-c for c in self.coeffs), self.bound)

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series((a + b for a, b in zip(self.coeffs, other.coeffs)), self.bound)

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series((a - b for a, b in zip(self.coeffs, other.coeffs)), self.bound)

    def __mul__(self, other: "Series | Poly | Scalar") -> "Series":
        if not isinstance(other, Series):
            p = Poly.coerce(other)
            return Series((c * p for c in self.coeffs), self.bound)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = [ZERO] * (self.bound + 1)
        nz_b = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in nz_b:
                if i + j > self.bound:
                    break
                out[i + j] = out[i + j] + x * y
        return Series(out, self.bound)

    def __rmul__(self, other: Poly | Scalar) -> "Series":
        return self * other

    def recip(self) -> "Series":
        """Multiplicative inverse up to the bound.

        The constant term must be a nonzero rational; ``b_n`` is solved from
        ``sum_{k<=n} a_k b_{n-k} = [n == 0]``.
        """
        a0 = self.coeffs[0]
        if not a0.is_constant() or a0.is_zero():
            raise NonUnitConstantTerm(f"constant term {a0} is not a unit of Q[t]")
        inv0 = 1 / a0.constant_term()
        b = [Poly.const(inv0)]
        for n in range(1, self.bound + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * b[n - k]
            b.append(acc * (-inv0))
        return Series(b, self.bound)

    def scale(self, mu: Callable[[int], Scalar]) -> "Series":
        """Multiply the coefficient of ``x**n`` by the rational ``mu(n)``."""
        return Series((c * as_rational(mu(n)) for n, c in enumerate(self.coeffs)), self.bound)

    def div_exact_poly(self, p: Poly | Scalar) -> "Series":
        p = Poly.coerce(p)
        return Series((c.div_exact(p) for c in self.coeffs), self.bound)

    def even_part(self) -> "Series":
        return Series((c if n % 2 == 0 else ZERO for n, c in enumerate(self.coeffs)), self.bound)

    def odd_part(self) -> "Series":
        return Series((c if n % 2 == 1 else ZERO for n, c in enumerate(self.coeffs)), self.bound)

    def div_x(self) -> "Series":
        """Divide by ``x``; the result is known one degree less far."""
        if self.coeffs[0]:
            raise InexactDivision("series has a nonzero constant term; not divisible by x")
        if self.bound == 0:
            raise BoundMismatch("dividing a bound-0 series by x leaves nothing")
        return Series(self.coeffs[1:], self.bound - 1)

    # -- views ---------------------------------------------------------

    def egf_numerators(self) -> list[Poly]:
        """``n! * [x^n]`` for each n."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]


# -- homomorphism scalings ---------------------------------------------


def mu_word(n: int) -> int:
    return 1


def mu_perm(n: int) -> Fraction:
    return Fraction(1, factorial(n))


def mu_alt(n: int) -> Fraction:
    return Fraction(euler_numbers(n)[n], factorial(n))


# -- rational builtins ----------------------------------------------------


def exps(p: Poly | Scalar, s: Scalar, bound: int) -> Series:
    """``sum p^n s^n x^n / n!``, i.e. ``exp(p s x)``."""
    p, s = Poly.coerce(p), as_rational(s)
    cs, pw = [], ONE
    for n in range(bound + 1):
        cs.append(pw * (s**n / factorial(n)))
        pw = pw * p
    return Series(cs, bound)


def even(p: Poly | Scalar, s: Scalar, bound: int) -> Series:
    """``sum p^m (s x)^(2m) / (2m)!``, i.e. ``cosh(sqrt(p) s x)``."""
    p, s = Poly.coerce(p), as_rational(s)
    cs = [ZERO] * (bound + 1)
    pw = ONE
    for m in range(bound // 2 + 1):
        cs[2 * m] = pw * (s ** (2 * m) / factorial(2 * m))
        pw = pw * p
    return Series(cs, bound)


def odd(p: Poly | Scalar, s: Scalar, bound: int) -> Series:
    """``sum p^m (s x)^(2m+1) / (2m+1)!``, i.e. ``sinh(sqrt(p) s x) / sqrt(p)``."""
    p, s = Poly.coerce(p), as_rational(s)
    cs = [ZERO] * (bound + 1)
    pw = ONE
    for m in range((bound - 1) // 2 + 1 if bound >= 1 else 0):
        cs[2 * m + 1] = pw * (s ** (2 * m + 1) / factorial(2 * m + 1))
        pw = pw * p
    return Series(cs, bound)


def euls(p: Poly | Scalar, s: Scalar, bound: int) -> Series:
    """``sum E_n p^n s^n x^n / n!``, i.e. ``sec(p s x) + tan(p s x)``."""
    p, s = Poly.coerce(p), as_rational(s)
    e = euler_numbers(bound)
    cs, pw = [], ONE
    for n in range(bound + 1):
        cs.append(pw * (e[n] * s**n / factorial(n)))
        pw = pw * p
    return Series(cs, bound)


_BUILTINS = {"EXPS": exps, "EVEN": even, "ODD": odd, "EULS": euls}


def builtin_series(kind: str, p: Poly | Scalar, s: Scalar, bound: int) -> Series:
    try:
        f = _BUILTINS[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown builtin series {kind!r}; expected one of {sorted(_BUILTINS)}") from None
    return f(p, s, bound)


def geometric(bound: int, coeff: Poly | Scalar = 1) -> Series:
    """``sum (coeff x)^n``; handy in tests and examples."""
    c = Poly.coerce(coeff)
    return Series.from_function(lambda n: c**n, bound)


def series_from_rows(rows: Sequence[Sequence[Scalar]], bound: int) -> Series:
    """Build a series from per-degree coefficient lists in ``t``."""
    return Series((Poly(r) for r in rows), bound)
