"""Euler (zigzag) numbers via the boustrophedon recurrence."""
from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def _entringer_rows(n: int) -> tuple[tuple[int, ...], ...]:
    rows: list[tuple[int, ...]] = [(1,)]
    for i in range(1, n + 1):
        prev = rows[-1]
        row = [0]
        for k in range(1, i + 1):
            row.append(row[k - 1] + prev[i - k])
        rows.append(tuple(row))
    return tuple(rows)


def euler_numbers(n: int) -> list[int]:
    """Return ``[E_0, ..., E_n]`` where ``sum E_k x^k/k! = sec x + tan x``.

    Uses the Entringer triangle ``E(i, k) = E(i, k-1) + E(i-1, i-k)`` with
    ``E(i, 0) = [i == 0]``; ``E_i`` is the last entry of row ``i``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return [row[-1] for row in _entringer_rows(n)]
