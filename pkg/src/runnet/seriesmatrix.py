"""Square matrices over truncated power series, with exact inversion."""
from __future__ import annotations

from typing import Callable, Sequence

from .coeffring import Poly
from .powerseries import BoundMismatch, Series

MAX_DIM = 16


class DimensionMismatch(ValueError):
    pass


class SingularConstantTerm(ArithmeticError):
    """The matrix of constant terms is not invertible over the rationals."""


class SeriesMatrix:
    __slots__ = ("m", "bound", "rows")

    def __init__(self, rows: Sequence[Sequence[Series]]):
        m = len(rows)
        if m == 0:
            raise DimensionMismatch("empty matrix")
        if m > MAX_DIM:
            raise DimensionMismatch(f"dimension {m} exceeds the cap of {MAX_DIM}")
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("matrix is not square")
        bound = rows[0][0].bound
        if any(e.bound != bound for r in rows for e in r):
            raise BoundMismatch("entries have different bounds")
        self.m = m
        self.bound = bound
        self.rows: tuple[tuple[Series, ...], ...] = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, m: int, bound: int) -> "SeriesMatrix":
        return cls([[Series.one(bound) if i == j else Series.zero(bound) for j in range(m)] for i in range(m)])

    @classmethod
    def zero(cls, m: int, bound: int) -> "SeriesMatrix":
        return cls([[Series.zero(bound)] * m for _ in range(m)])

    @classmethod
    def build(cls, m: int, f: Callable[[int, int], Series]) -> "SeriesMatrix":
        """Entry ``(i, j)`` is ``f(i, j)`` with 1-based indices."""
        return cls([[f(i, j) for j in range(1, m + 1)] for i in range(1, m + 1)])

    def entry(self, i: int, j: int) -> Series:
        """1-based entry access, matching vertex labels of a run network."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"SeriesMatrix(m={self.m}, bound={self.bound})"

    def _check(self, other: "SeriesMatrix") -> None:
        if self.m != other.m:
            raise DimensionMismatch(f"dimensions differ: {self.m} vs {other.m}")
        if self.bound != other.bound:
            raise BoundMismatch(f"bounds differ: {self.bound} vs {other.bound}")

    def __add__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        return SeriesMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        return SeriesMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "SeriesMatrix":
        return SeriesMatrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        m, n = self.m, self.bound
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = Series.zero(n)
                for k in range(m):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SeriesMatrix(out)

    def map(self, f: Callable[[Series], Series]) -> "SeriesMatrix":
        return SeriesMatrix([[f(e) for e in r] for r in self.rows])

    def constant_terms(self) -> list[list[Poly]]:
        return [[e[0] for e in r] for r in self.rows]

    def inverse(self) -> "SeriesMatrix":
        return mat_inverse(self)


def mat_mul(a: SeriesMatrix, b: SeriesMatrix) -> SeriesMatrix:
    return a @ b


def mat_inverse(a: SeriesMatrix) -> SeriesMatrix:
    """Gauss-Jordan elimination over the series ring.

    Pivots are entries whose constant term is a nonzero rational.  Such an
    entry is a unit, and one exists in every column of the remaining block
    whenever the rational constant-term matrix is nonsingular.
    """
    m, n = a.m, a.bound
    left = [list(r) for r in a.rows]
    right = [list(r) for r in SeriesMatrix.identity(m, n).rows]
    for col in range(m):
        pivot = None
        for r in range(col, m):
            c0 = left[r][col][0]
            if c0.is_constant() and not c0.is_zero():
                pivot = r
                break
        if pivot is None:
            raise SingularConstantTerm(f"no unit pivot in column {col + 1}")
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]
        inv = left[col][col].recip()
        left[col] = [e * inv for e in left[col]]
        right[col] = [e * inv for e in right[col]]
        for r in range(m):
            if r == col:
                continue
            f = left[r][col]
            if f.is_zero():
                continue
            left[r] = [x - f * y for x, y in zip(left[r], left[col])]
            right[r] = [x - f * y for x, y in zip(right[r], right[col])]
    return SeriesMatrix(right)


def neumann_inverse(a: SeriesMatrix) -> SeriesMatrix:
    """Inverse of ``I + W`` as ``sum_k (-W)^k``, for ``W`` with zero constant term.

    Independent of :func:`mat_inverse`; ``(-W)^k`` vanishes past the bound
    once ``k`` exceeds it.
    """
    m, n = a.m, a.bound
    eye = SeriesMatrix.identity(m, n)
    w = a - eye
    if any(not e[0].is_zero() for r in w.rows for e in r):
        raise SingularConstantTerm("Neumann expansion needs an identity constant-term matrix")
    neg_w = -w
    total, term = eye, eye
    for _ in range(n):
        term = term @ neg_w
        total = total + term
    return total
