"""Brute-force ground truth over the symmetric group.

Nothing here touches series or networks: statistics are read straight off
each permutation, so agreement with the engine is an independent check.
Permutations are tuples of ``1..n``; positions in docstrings are 1-based.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator, Sequence

from .coeffring import Poly
from .compositions import (
    alt_descent_composition,
    comp_from_descent_set,
    descent_composition,
    ribbon_count,
)

Perm = tuple[int, ...]

DEFAULT_CAP = 9
MAX_CAP = 10

STAT_NAMES = ("des", "altdes", "pk", "val", "lpk", "rpk", "lrpk", "dasc", "ddes", "rdasc", "lrdasc", "br", "udr", "as")
PREDICATES = ("allPkOddValEven", "allPVEven", "allPVOdd", "allValOdd", "incRunsBelow", "altRunsBelow")


class CapExceeded(ValueError):
    pass


class DomainViolation(ValueError):
    pass


def check_cap(n: int, cap: int = DEFAULT_CAP) -> None:
    if cap > MAX_CAP:
        raise CapExceeded(f"cap {cap} exceeds the hard limit {MAX_CAP}")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}")
    if n < 0:
        raise ValueError("n must be non-negative")


def perms(n: int) -> Iterator[Perm]:
    """``S_n`` in lexicographic order."""
    return permutations(range(1, n + 1))


# -- positional features ------------------------------------------------------------


def peaks(p: Sequence[int]) -> list[int]:
    return [i + 1 for i in range(1, len(p) - 1) if p[i - 1] < p[i] > p[i + 1]]


def valleys(p: Sequence[int]) -> list[int]:
    return [i + 1 for i in range(1, len(p) - 1) if p[i - 1] > p[i] < p[i + 1]]


def double_ascents(p: Sequence[int]) -> list[int]:
    return [i + 1 for i in range(1, len(p) - 1) if p[i - 1] < p[i] < p[i + 1]]


def double_descents(p: Sequence[int]) -> list[int]:
    return [i + 1 for i in range(1, len(p) - 1) if p[i - 1] > p[i] > p[i + 1]]


def left_peaks(p):
    out = set(peaks(p))
    if len(p) >= 2 and p[0] > p[1]:
        out.add(1)
    return out


def right_peaks(p):
    out = set(peaks(p))
    if len(p) >= 2 and p[-2] < p[-1]:
        out.add(len(p))
    return out


def left_right_peaks(p):
    out = left_peaks(p) | right_peaks(p)
    if len(p) == 1:
        out.add(1)
    return out


def right_double_ascents(p):
    out = set(double_ascents(p))
    if len(p) >= 2 and p[-2] < p[-1]:
        out.add(len(p))
    return out


def left_right_double_ascents(p):
    out = right_double_ascents(p)
    if len(p) >= 2 and p[0] < p[1]:
        out.add(1)
    if len(p) == 1:
        out.add(1)
    return out


def biruns(p: Sequence[int]) -> list[Perm]:
    """Maximal monotone factors of length at least 2."""
    if len(p) < 2:
        return []
    out, start = [], 0
    up = p[1] > p[0]
    for i in range(2, len(p)):
        step_up = p[i] > p[i - 1]
        if step_up != up:
            out.append(tuple(p[start:i]))
            start, up = i - 1, step_up
    out.append(tuple(p[start:]))
    return out


def updown_runs(p: Sequence[int]) -> list[Perm]:
    """Biruns, preceded by the initial short increasing run if there is one."""
    out = biruns(p)
    if len(p) == 1 or (len(p) >= 2 and p[0] > p[1]):
        out.insert(0, (p[0],))
    return out


def longest_alternating_subsequence(p: Sequence[int]) -> int:
    """Length of the longest subsequence ``a1 > a2 < a3 > ...``.

    ``odd[i]``/``even[i]``: longest such subsequence ending at ``i`` with odd
    or even length.  Odd length means the next step must go down.
    """
    n = len(p)
    odd = [1] * n
    even = [0] * n
    for i in range(n):
        for j in range(i):
            if p[j] > p[i] and odd[j] + 1 > even[i]:
                even[i] = odd[j] + 1
            if even[j] and p[j] < p[i] and even[j] + 1 > odd[i]:
                odd[i] = even[j] + 1
    return max([0, *odd, *even])


def _des(p):
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def _altdes(p):
    # 1-based i is odd exactly when the 0-based index is even
    return sum(1 for i in range(len(p) - 1) if (p[i] > p[i + 1]) == (i % 2 == 0))


STATS: dict[str, Callable[[Sequence[int]], int]] = {
    "des": _des,
    "altdes": _altdes,
    "pk": lambda p: len(peaks(p)),
    "val": lambda p: len(valleys(p)),
    "lpk": lambda p: len(left_peaks(p)),
    "rpk": lambda p: len(right_peaks(p)),
    "lrpk": lambda p: len(left_right_peaks(p)),
    "dasc": lambda p: len(double_ascents(p)),
    "ddes": lambda p: len(double_descents(p)),
    "rdasc": lambda p: len(right_double_ascents(p)),
    "lrdasc": lambda p: len(left_right_double_ascents(p)),
    "br": lambda p: len(biruns(p)),
    "udr": lambda p: len(updown_runs(p)),
    "as": longest_alternating_subsequence,
}


def stat_value(name: str, p: Sequence[int]) -> int:
    try:
        f = STATS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}; known: {', '.join(STAT_NAMES)}") from None
    return f(p)


@lru_cache(maxsize=None)
def _distributions(n: int) -> dict[str, tuple[int, ...]]:
    """One pass over ``S_n`` tallying every statistic at once."""
    counts = {name: Counter() for name in STATS}
    items = list(STATS.items())
    for p in perms(n):
        for name, f in items:
            counts[name][f(p)] += 1
    out = {}
    for name, c in counts.items():
        top = max(c) if c else 0
        out[name] = tuple(c.get(k, 0) for k in range(top + 1))
    return out


def stat_polynomial(name: str, n: int, cap: int = DEFAULT_CAP) -> Poly:
    """``sum over S_n of t^st(p)``."""
    if name not in STATS:
        raise ValueError(f"unknown statistic {name!r}; known: {', '.join(STAT_NAMES)}")
    check_cap(n, cap)
    return Poly(_distributions(n)[name])


# -- predicates ---------------------------------------------------------------------


def _all_parity(positions: Iterable[int], parity: int) -> bool:
    return all(i % 2 == parity for i in positions)


def all_pk_odd_val_even(p) -> bool:
    return _all_parity(peaks(p), 1) and _all_parity(valleys(p), 0)


def all_pv_even(p) -> bool:
    return _all_parity(peaks(p), 0) and _all_parity(valleys(p), 0)


def all_pv_odd(p) -> bool:
    return _all_parity(peaks(p), 1) and _all_parity(valleys(p), 1)


def all_val_odd(p) -> bool:
    return _all_parity(valleys(p), 1)


def inc_runs_below(m: int):
    return lambda p: all(k < m for k in descent_composition(p))


def alt_runs_below(m: int):
    return lambda p: all(k < m for k in alt_descent_composition(p))


def predicate(name: str, m: int | None = None) -> Callable[[Sequence[int]], bool]:
    simple = {
        "allPkOddValEven": all_pk_odd_val_even,
        "allPVEven": all_pv_even,
        "allPVOdd": all_pv_odd,
        "allValOdd": all_val_odd,
    }
    if name in simple:
        return simple[name]
    if name in ("incRunsBelow", "altRunsBelow"):
        if m is None:
            raise ValueError(f"{name} needs a run-length bound m")
        return (inc_runs_below if name == "incRunsBelow" else alt_runs_below)(m)
    raise ValueError(f"unknown predicate {name!r}; known: {', '.join(PREDICATES)}")


def predicate_count(name: str, n: int, m: int | None = None, cap: int = DEFAULT_CAP) -> int:
    check_cap(n, cap)
    pred = predicate(name, m)
    return sum(1 for p in perms(n) if pred(p))


def predicate_count_by_descent_sets(name: str, n: int, m: int | None = None) -> int:
    """Same count without enumerating ``S_n``.

    Each predicate depends only on the up-down signature of a permutation,
    so it is evaluated on one representative signature per descent set and
    weighted by the ribbon number.  Usable past the enumeration cap.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if name == "altRunsBelow":
        raise ValueError("altRunsBelow is not a descent-set predicate")
    pred = predicate(name, m)
    total = 0
    for mask in range(1 << max(n - 1, 0)):
        dset = {i + 1 for i in range(n - 1) if mask >> i & 1}
        if pred(_signature_word(dset, n)):
            total += ribbon_count(comp_from_descent_set(dset, n))
    return total


def _signature_word(dset: set[int], n: int) -> list[int]:
    """A sequence with descent set exactly ``dset`` (only comparisons matter)."""
    word, v = [], 0
    for i in range(n):
        word.append(v)
        v += -1 if (i + 1) in dset else 1
    return word


# -- composition counts -------------------------------------------------------------


@lru_cache(maxsize=None)
def _comp_tallies(n: int) -> tuple[Counter, Counter]:
    plain, alt = Counter(), Counter()
    for p in perms(n):
        plain[descent_composition(p)] += 1
        alt[alt_descent_composition(p)] += 1
    return plain, alt


def beta_brute(comp: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    n = sum(comp)
    check_cap(n, cap)
    return _comp_tallies(n)[0].get(tuple(comp), 0)


def beta_hat_brute(comp: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    n = sum(comp)
    check_cap(n, cap)
    return _comp_tallies(n)[1].get(tuple(comp), 0)


def count_alternating(n: int, cap: int = DEFAULT_CAP) -> int:
    """Down-up permutations ``p1 > p2 < p3 > ...``."""
    check_cap(n, cap)
    return sum(1 for p in perms(n) if all((p[i] > p[i + 1]) == (i % 2 == 0) for i in range(n - 1)))


def count_comp_family(n: int, accept: Callable[[tuple[int, ...]], bool], alternating: bool = False, cap: int = DEFAULT_CAP) -> int:
    """Permutations whose (alternating) descent composition satisfies ``accept``."""
    check_cap(n, cap)
    tally = _comp_tallies(n)[1 if alternating else 0]
    return sum(c for comp, c in tally.items() if accept(comp))


# -- maps ---------------------------------------------------------------------------


def complement(p: Sequence[int]) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def reflection(p: Sequence[int]) -> Perm:
    return tuple(reversed(p))


def shift_map(p: Sequence[int]) -> Perm:
    """Rotate the first letter to the end.

    Domain: odd-length permutations with all peaks and valleys odd.
    """
    p = tuple(p)
    if len(p) % 2 == 0 or not all_pv_odd(p):
        raise DomainViolation(f"shift needs odd length and all peaks/valleys odd: {p}")
    return p[1:] + p[:1]


def pkshift_map(p: Sequence[int]) -> Perm:
    """Swap each peak ``k < n-1`` with its right neighbour; a peak at ``n-1``
    swaps with its left neighbour.  Peaks are those of the input.

    Domain: permutations of length ``n >= 4`` with all peaks and valleys even.
    """
    p = tuple(p)
    n = len(p)
    if n < 4 or not all_pv_even(p):
        raise DomainViolation(f"pkshift needs n >= 4 and all peaks/valleys even: {p}")
    out = list(p)
    for k in peaks(p):
        if k < n - 1:
            out[k - 1], out[k] = out[k], out[k - 1]
        else:
            out[n - 3], out[n - 2] = out[n - 2], out[n - 3]
    return tuple(out)


def append_map(p: Sequence[int], m: int) -> Perm:
    """Bump letters ``>= m`` by one and append ``m``."""
    n = len(p)
    if not 1 <= m <= n + 1:
        raise DomainViolation(f"m must lie in 1..{n + 1}, got {m}")
    return tuple(v + 1 if v >= m else v for v in p) + (m,)


def check_injective_map(domain: Iterable[Perm], f: Callable[[Perm], Perm], target: Callable[[Perm], bool]) -> tuple[int, int]:
    """Apply ``f`` over ``domain``; return ``(len(domain), len(image))``.

    Raises ``AssertionError`` if an image misses ``target``.
    """
    size, image = 0, set()
    for p in domain:
        q = f(p)
        if not target(q):
            raise AssertionError(f"{p} maps to {q}, which is outside the target set")
        image.add(q)
        size += 1
    return size, len(image)


# -- statistics as functions of the run lengths --------------------------------------


def _long(k: int) -> bool:
    return k >= 2


def run_stat(name: str, comp: Sequence[int]) -> int:
    """Statistic computed from a descent composition alone.

    Each built-in recipe weights walks by these rules, so feeding an
    alternating descent composition gives the alternating-run analogue.
    """
    comp = tuple(comp)
    n, k = sum(comp), len(comp)
    nonfinal_long = sum(1 for x in comp[:-1] if _long(x))
    noninitial_long = sum(1 for x in comp[1:] if _long(x))
    if name == "des":
        return max(k - 1, 0)
    if name == "pk":
        return nonfinal_long
    if name == "val":
        return noninitial_long
    if name == "rpk":
        return sum(1 for x in comp if _long(x))
    if name == "lrpk":
        return noninitial_long + 1 if n else 0
    if name == "dasc":
        return sum(max(x - 2, 0) for x in comp)
    if name == "rdasc":
        if not n:
            return 0
        return sum(max(x - 2, 0) for x in comp[:-1]) + comp[-1] - 1
    if name == "lrdasc":
        if not n:
            return 0
        if k == 1:
            return n
        return comp[0] - 1 + sum(max(x - 2, 0) for x in comp[1:-1]) + comp[-1] - 1
    if name == "br":
        return nonfinal_long + noninitial_long + 1 if n >= 2 else 0
    if name == "udr":
        if n < 2:
            return n
        return nonfinal_long + noninitial_long + 1 + (1 if comp[0] == 1 else 0)
    raise ValueError(f"no run-length form for statistic {name!r}")


RUN_STATS = ("des", "pk", "val", "rpk", "lrpk", "dasc", "rdasc", "lrdasc", "br", "udr")


def run_stat_polynomial(name: str, n: int, alternating: bool = False, cap: int = DEFAULT_CAP) -> Poly:
    """``sum over S_n of t^run_stat(name, L(p))`` with ``L`` the (alternating) descent composition."""
    check_cap(n, cap)
    tally = _comp_tallies(n)[1 if alternating else 0]
    c: Counter = Counter()
    for comp, mult in tally.items():
        c[run_stat(name, comp)] += mult
    return Poly(c.get(i, 0) for i in range(max(c) + 1))
