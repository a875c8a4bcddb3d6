"""Exact integer combinatorial kernels.

Everything here returns plain Python ints, which are arbitrary precision,
so no value ever wraps or loses digits.  Conversion to 64-bit floats is
the caller's business (the moment formulas do it, and document the
precision loss above 2**53).

Index orders are capped at ``MAX_ORDER``: partition-number rows and the
factorial products they feed grow far beyond any fixed machine width well
before that, and rejecting larger orders beats silently approximating.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

# Largest supported index order k.  Row 64 of the partition-number table
# already exceeds 128 bits, so exact arithmetic is mandatory below this cap.
MAX_ORDER = 64


def _check_order(k: int, name: str = "k") -> None:
    if k < 0:
        raise ValueError(f"{name} must be non-negative, got {k}")
    if k > MAX_ORDER:
        raise ValueError(
            f"{name}={k} exceeds the supported maximum order {MAX_ORDER}"
        )


@lru_cache(maxsize=None)
def _stirling_row_full(k: int) -> tuple[int, ...]:
    """Row k of the Stirling-partition table, entries m = 0..k.

    Built by the linear recurrence {k m} = m*{k-1 m} + {k-1 m-1} with
    {0 0} = 1 and {k 0} = 0 for k >= 1.  Rows are cached whole because
    every caller consumes whole rows.  ``lru_cache`` keeps concurrent
    readers safe.
    """
    if k == 0:
        return (1,)
    prev = _stirling_row_full(k - 1)
    row = [0] * (k + 1)
    for m in range(1, k + 1):
        above = prev[m] if m <= k - 1 else 0
        row[m] = m * above + prev[m - 1]
    return tuple(row)


def stirling2(k: int, m: int) -> int:
    """Number of partitions of a k-element set into m nonempty blocks."""
    _check_order(k)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m > k:
        return 0
    return _stirling_row_full(k)[m]


def stirling2_row(k: int) -> list[int]:
    """Partition numbers [{k 1}, ..., {k k}] as a list (empty for k=0)."""
    _check_order(k)
    return list(_stirling_row_full(k)[1:])


def binomial(n: int, r: int) -> int:
    """C(n, r); zero when r > n."""
    if n < 0 or r < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {r})")
    return math.comb(n, r)


def falling_factorial(n: int, j: int) -> int:
    """The product n*(n-1)*...*(n-j+1); empty product 1 for j=0."""
    if n < 0 or j < 0:
        raise ValueError(f"falling_factorial needs non-negative arguments, got ({n}, {j})")
    if j > n:
        raise ValueError(f"falling_factorial undefined for j={j} > n={n}")
    out = 1
    for t in range(j):
        out *= n - t
    return out


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / prod(parts_i!) for non-negative parts summing to n."""
    if n < 0:
        raise ValueError(f"multinomial needs non-negative n, got {n}")
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be non-negative, got {parts}")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {parts} do not sum to n={n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out
