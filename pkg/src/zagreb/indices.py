"""Generalized Zagreb indices and star counts of a degree sequence.

Both families are degree functionals: the order-k index is the sum of
k-th powers of the degrees, and the m-star count collapses to a binomial
of the degree, sum over vertices of C(d_i, m-1).  A lower-triangular
integer matrix with entries l!*{m l} maps the star vector onto the index
vector; ``check_star_identity`` verifies that identity in exact arithmetic
on any input, and ``complement_zagreb_check`` does the same for the
inclusion-exclusion identity against the complement graph.

Values are exact Python ints.  A fast int64 path is used when the a-priori
bound n*(n-1)^k fits in a signed 64-bit word; otherwise the computation
falls back to arbitrary-precision arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import MAX_ORDER, binomial, stirling2
from .graph import DegreeSequence, complement_degrees

_INT64_MAX = 2**63 - 1


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"index order must lie in [1, {MAX_ORDER}], got {k}")


@dataclass(frozen=True)
class IndexVector:
    """Exact values (Z^(1), ..., Z^(k)) for a graph on n vertices."""

    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.k:
            raise ValueError(f"expected {self.k} entries, got {len(self.values)}")
        if self.values and self.values[0] % 2 != 0:
            raise ValueError("first-order index must be even (twice the edge count)")
        bound = self.n * (self.n - 1) ** np.arange(1, self.k + 1, dtype=object)
        for m, (v, b) in enumerate(zip(self.values, bound), start=1):
            if not 0 <= v <= b:
                raise ValueError(f"order-{m} index {v} outside [0, {b}]")


@dataclass(frozen=True)
class StarVector:
    """Exact star counts (S_2, ..., S_{k+1}) for a graph on n vertices."""

    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.k:
            raise ValueError(f"expected {self.k} entries, got {len(self.values)}")
        if self.values and self.values[0] % 2 != 0:
            raise ValueError("2-star count must be even (twice the edge count)")
        for m, v in enumerate(self.values, start=1):
            bound = self.n * binomial(self.n - 1, m)
            if not 0 <= v <= bound:
                raise ValueError(f"{m + 1}-star count {v} outside [0, {bound}]")


@dataclass(frozen=True)
class TransformMatrix:
    """Lower-triangular integer matrix sending star vectors to index vectors."""

    k: int
    entries: tuple[tuple[int, ...], ...]

    def apply(self, star_values) -> list[int]:
        vals = list(star_values)
        if len(vals) != self.k:
            raise ValueError(f"expected {self.k} star counts, got {len(vals)}")
        return [sum(row[l] * vals[l] for l in range(self.k)) for row in self.entries]


def _power_sums(d: DegreeSequence, k: int) -> list[int]:
    """[sum d_i, sum d_i^2, ..., sum d_i^k], exact."""
    dmax = int(d.degrees.max()) if d.n else 0
    if d.n * max(dmax, 1) ** k <= _INT64_MAX:
        out = []
        pw = d.degrees.astype(np.int64).copy()
        for _ in range(k):
            out.append(int(pw.sum()))
            pw *= d.degrees
        return out
    degs = [int(x) for x in d.degrees]
    return [sum(x**m for x in degs) for m in range(1, k + 1)]


def _binom_sums(d: DegreeSequence, k: int) -> list[int]:
    """[sum C(d_i, 1), ..., sum C(d_i, k)], exact."""
    dmax = max(int(d.degrees.max()) if d.n else 0, 1)
    # Largest value the int64 path ever holds: either a vertex sum
    # n * C(dmax, m) or a recurrence intermediate C(dmax, m) * m.
    peak = math.comb(dmax, min(k, dmax // 2) or 1)
    if peak * max(d.n, k) <= _INT64_MAX:
        out = []
        c = np.ones(d.n, dtype=np.int64)
        for m in range(1, k + 1):
            # C(d, m) = C(d, m-1) * (d-m+1) / m; the division is exact and
            # zeros propagate once m exceeds d.
            c = c * (d.degrees - (m - 1)) // m
            out.append(int(c.sum()))
        return out
    degs = [int(x) for x in d.degrees]
    return [sum(math.comb(x, m) for x in degs) for m in range(1, k + 1)]


def zagreb_index(d: DegreeSequence, k: int) -> int:
    """Sum of k-th powers of the degrees."""
    _check_k(k)
    return _power_sums(d, k)[-1]


def zagreb_vector(d: DegreeSequence, k: int) -> IndexVector:
    """All index orders 1..k at once."""
    _check_k(k)
    return IndexVector(d.n, k, tuple(_power_sums(d, k)))


def star_count(d: DegreeSequence, m: int) -> int:
    """Number of m-stars (m >= 2), counting both orientations of a 2-star.

    Equals sum over vertices of C(d_i, m-1): a star of size m centred at i
    is a choice of m-1 of its neighbours.
    """
    if m < 2:
        raise ValueError(f"star size must be >= 2, got {m}")
    if m - 1 > MAX_ORDER:
        raise ValueError(f"star size {m} exceeds the supported maximum {MAX_ORDER + 1}")
    return _binom_sums(d, m - 1)[-1]


def star_vector(d: DegreeSequence, k: int) -> StarVector:
    """Star counts (S_2, ..., S_{k+1}); entry m holds the (m+1)-star count."""
    _check_k(k)
    return StarVector(d.n, k, tuple(_binom_sums(d, k)))


def transform_matrix(k: int) -> TransformMatrix:
    """Matrix with entries a_{ml} = l! * {m l} below the diagonal, else 0."""
    _check_k(k)
    rows = []
    for m in range(1, k + 1):
        rows.append(
            tuple(
                math.factorial(l) * stirling2(m, l) if l <= m else 0
                for l in range(1, k + 1)
            )
        )
    return TransformMatrix(k, tuple(rows))


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of an exact structural identity check."""

    holds: bool
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]


def check_star_identity(d: DegreeSequence, k: int) -> IdentityCheck:
    """Verify that the index vector equals transform_matrix(k) times the star vector."""
    _check_k(k)
    lhs = zagreb_vector(d, k).values
    rhs = tuple(transform_matrix(k).apply(star_vector(d, k).values))
    return IdentityCheck(lhs == rhs, lhs, rhs)


def complement_zagreb_check(d: DegreeSequence, k: int) -> IdentityCheck:
    """Verify the complement identity for every order 1..k, exactly.

    Order m of the left side is the index computed from the degrees; the
    right side rebuilds it from the complement graph's indices:
    n(n-1)^m + sum_{t=1..m} (-1)^t C(m,t) (n-1)^{m-t} Zbar^(t).
    """
    _check_k(k)
    n = d.n
    lhs = zagreb_vector(d, k).values
    zbar = zagreb_vector(complement_degrees(d), k).values
    rhs = []
    for m in range(1, k + 1):
        total = n * (n - 1) ** m
        for t in range(1, m + 1):
            total += (-1) ** t * binomial(m, t) * (n - 1) ** (m - t) * zbar[t - 1]
        rhs.append(total)
    rhs_t = tuple(rhs)
    return IdentityCheck(lhs == rhs_t, lhs, rhs_t)
