"""Compositions, descent sets, and ribbon numbers.

A composition is a tuple of positive integers; ``()`` is the composition of 0.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]


class InvalidDescentSet(ValueError):
    pass


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def comp_from_descent_set(s: Iterable[int], n: int) -> Composition:
    """``C(S) = (s_1, s_2 - s_1, ..., n - s_j)``."""
    ss = sorted(set(s))
    if n < 0 or any(not 1 <= d <= n - 1 for d in ss):
        raise InvalidDescentSet(f"{ss} is not a subset of [1, {n - 1}]")
    if n == 0:
        return ()
    cuts = [0, *ss, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def descent_set_from_comp(comp: Sequence[int]) -> frozenset[int]:
    """``D(L) = {L_1, L_1 + L_2, ..., L_1 + ... + L_{k-1}}``."""
    out, acc = set(), 0
    for part in comp[:-1]:
        acc += part
        out.add(acc)
    return frozenset(out)


def _runs(n: int, is_break) -> Composition:
    if n == 0:
        return ()
    parts, start = [], 0
    for i in range(1, n):
        if is_break(i):
            parts.append(i - start)
            start = i
    parts.append(n - start)
    return tuple(parts)


def descent_composition(word: Sequence[int]) -> Composition:
    """Lengths of the maximal weakly increasing runs of ``word``."""
    return _runs(len(word), lambda i: word[i - 1] > word[i])


def alt_descent_composition(perm: Sequence[int]) -> Composition:
    """Run lengths between alternating descents.

    Position ``i`` (1-based) is an alternating descent when ``i`` is odd and
    ``perm[i] > perm[i+1]``, or ``i`` is even and ``perm[i] < perm[i+1]``.
    """

    def brk(i: int) -> bool:
        if i % 2 == 1:
            return perm[i - 1] > perm[i]
        return perm[i - 1] < perm[i]

    return _runs(len(perm), brk)


def ribbon_count(comp: Sequence[int]) -> int:
    """Number of permutations with descent composition ``comp``.

    Inclusion-exclusion over the coarsenings ``M`` of ``comp``:
    ``n! * sum (-1)^(len(L) - len(M)) / (M_1! ... M_j!)``.
    """
    comp = tuple(comp)
    n = sum(comp)
    if n == 0:
        return 1
    d = sorted(descent_set_from_comp(comp))
    k = len(comp)
    total = Fraction(0)
    for r in range(len(d) + 1):
        for sub in combinations(d, r):
            coarse = comp_from_descent_set(sub, n)
            sign = -1 if (k - len(coarse)) % 2 else 1
            total += Fraction(sign, prod(factorial(p) for p in coarse))
    total *= factorial(n)
    if total.denominator != 1:
        raise AssertionError(f"ribbon count for {comp} is not an integer: {total}")
    return int(total)
