"""The two-inversion counting pipeline.

For a run network with arc weights ``w_k^(i,j)``:

1. ``W[i][j] = sum_{k in P_ij} w_k^(i,j) x^k`` (weight matrix);
2. ``V = (I + W)^-1`` (word-level ``v`` coefficients);
3. scale entry coefficients by the homomorphism (``1``, ``1/n!``, ``E_n/n!``);
4. invert again.  Entry ``(i, j)`` then counts words, permutations, or their
   alternating-run analogues whose descent compositions are spelled by walks
   from ``i`` to ``j``.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from importlib import resources
from math import factorial

from .coeffring import Poly
from .euler import euler_numbers
from .powerseries import Series, mu_alt, mu_perm, mu_word
from .runnetwork import RunNetwork, Violation, load_network, validate_network
from .seriesmatrix import SeriesMatrix, mat_inverse

__all__ = [
    "Hom",
    "NotARunNetwork",
    "IntegralityError",
    "euler_numbers",
    "weight_matrix",
    "v_matrix",
    "counting_matrix",
    "compute",
    "entry_sum",
    "single_vertex_series",
    "fixture_network",
]


class NotARunNetwork(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


class IntegralityError(AssertionError):
    pass


class Hom(enum.Enum):
    WORD = "word"
    PERM = "perm"
    ALT = "alt"

    @property
    def mu(self):
        return {Hom.WORD: mu_word, Hom.PERM: mu_perm, Hom.ALT: mu_alt}[self]

    @classmethod
    def parse(cls, value: "Hom | str") -> "Hom":
        return value if isinstance(value, Hom) else cls(value)


def weight_matrix(net: RunNetwork, bound: int) -> SeriesMatrix:
    def entry(i: int, j: int) -> Series:
        arc = net.arcs.get((i, j))
        if arc is None:
            return Series.zero(bound)
        cs = [Poly()] * (bound + 1)
        for k in arc.lengths.members(bound):
            cs[k] = arc.weight.weight(k)
        return Series(cs, bound)

    return SeriesMatrix.build(net.m, entry)


def v_matrix(w: SeriesMatrix) -> SeriesMatrix:
    return mat_inverse(SeriesMatrix.identity(w.m, w.bound) + w)


def check_integrality(s: Series, what: str = "series") -> None:
    for n, c in enumerate(s.coeffs):
        if not (c * factorial(n)).is_integral():
            raise IntegralityError(f"{what}: n!*[x^{n}] = {c * factorial(n)} has non-integer coefficients")


def counting_matrix(v: SeriesMatrix, hom: Hom | str) -> SeriesMatrix:
    hom = Hom.parse(hom)
    scaled = v if hom is Hom.WORD else v.map(lambda s: s.scale(hom.mu))
    result = mat_inverse(scaled)
    if hom is not Hom.WORD:
        for i, row in enumerate(result.rows, 1):
            for j, e in enumerate(row, 1):
                check_integrality(e, f"entry ({i},{j})")
    return result


def compute(net: RunNetwork, bound: int, hom: Hom | str = Hom.PERM, validate: bool = True) -> SeriesMatrix:
    """Full pipeline: validate, weight matrix, two inversions."""
    if validate:
        bad = validate_network(net, bound)
        if bad is not None:
            raise NotARunNetwork(bad)
    return counting_matrix(v_matrix(weight_matrix(net, bound)), hom)


def entry_sum(mat: SeriesMatrix, start, end) -> Series:
    """Sum of entries ``(s, e)`` over the start and end vertex sets."""
    total = Series.zero(mat.bound)
    for s in sorted(start):
        for e in sorted(end):
            total = total + mat.entry(s, e)
    return total


def single_vertex_series(weights: Series, hom: Hom | str) -> Series:
    """One-vertex route: ``1 / hom(1 / (1 + sum w_k x^k))``.

    ``weights`` holds ``w_k`` at ``x^k``; its constant term is ignored.
    """
    hom = Hom.parse(hom)
    w = Series((Poly(), *weights.coeffs[1:]), weights.bound)
    v = (Series.one(weights.bound) + w).recip()
    return v.scale(hom.mu).recip()


@lru_cache(maxsize=None)
def fixture_network(name: str) -> RunNetwork:
    """Load a shipped fixture network (``two_cycle``, ``g1p1``, ``g2p2``, ``gp``, ...)."""
    ref = resources.files("runnet") / "data" / "networks" / f"{name}.json"
    with resources.as_file(ref) as path:
        return load_network(path)
