"""First and second moments of star counts and Zagreb indices under G(n, p).

Three independent routes are provided:

- exact closed forms (``exact_*``): combinatorial factors are computed as
  exact integers and only then converted to float64, so precision is lost
  only above 2**53; term sums are compensated (Kahan) because the terms
  span many orders of magnitude at large n;
- leading-order asymptotics (``asymp_*``) with the relative O(1/n)
  correction dropped;
- an exhaustive enumeration oracle over all 2^C(n,2) labeled graphs
  (n <= 7), which weighs every graph by p^e (1-p)^(C(n,2)-e) and makes no
  use of the closed forms.

Any closed-form term whose falling factorial or multinomial would need a
negative argument is defined as zero; that convention is exactly what the
shared-vertex range max(1, m+l-n+1) encodes, and it keeps small-n calls
(including n=1, where no edge fits) total.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import MAX_ORDER, binomial, falling_factorial, multinomial, stirling2
from .graph import GnpParams

SOURCE_EXACT = "exact-formula"
SOURCE_ASYMPTOTIC = "asymptotic"
SOURCE_ENUMERATION = "enumeration"
SOURCE_MONTE_CARLO = "monte-carlo"

MAX_ENUMERATION_VERTICES = 7  # 2^21 graphs


@dataclass(frozen=True)
class MomentReport:
    """Means and covariance of a family of graph statistics.

    ``labels`` names the components ("Z1".."Zk" and/or "S2".."S{k+1}");
    ``mean`` and ``cov`` are sized to match.  ``k`` records the maximum
    index order the report covers.
    """

    k: int
    mean: np.ndarray
    cov: np.ndarray
    source: str
    params: GnpParams
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        mean = np.asarray(self.mean, dtype=np.float64)
        cov = np.asarray(self.cov, dtype=np.float64)
        if mean.shape != (len(self.labels),):
            raise ValueError(f"mean shape {mean.shape} does not match labels {self.labels}")
        if cov.shape != (len(self.labels), len(self.labels)):
            raise ValueError(f"cov shape {cov.shape} does not match labels {self.labels}")
        if not np.allclose(cov, cov.T, rtol=0.0, atol=1e-9 * (1.0 + np.abs(cov).max())):
            raise ValueError("covariance must be symmetric")
        if cov.size and np.diag(cov).min() < -1e-12:
            raise ValueError("covariance diagonal must be non-negative")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    def component(self, label: str) -> int:
        return self.labels.index(label)


def _kahan_sum(terms) -> float:
    # Kahan-Babuska (Neumaier) compensation: also safe when a term exceeds
    # the running total, which plain Kahan mishandles.
    total = 0.0
    comp = 0.0
    for t in terms:
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
    return total + comp


def _powi(base: float, exp: int) -> float:
    """base**exp for integer exp >= 0 by binary exponentiation."""
    result = 1.0
    b = base
    e = exp
    while e:
        if e & 1:
            result *= b
        b *= b
        e >>= 1
    return result


def _one_minus_pow(p: float, s: int) -> float:
    """1 - p^s without cancellation when p is close to 1."""
    if p > 0.5:
        return -math.expm1(s * math.log(p))
    return 1.0 - _powi(p, s)


def _check_order(k: int) -> None:
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {k}")


# ---------------------------------------------------------------------------
# Exact formulas
# ---------------------------------------------------------------------------


def exact_mean_star(params: GnpParams, m: int) -> float:
    """E[S_{m+1}]: n * C(n-1, m) * p^m."""
    if not 1 <= m <= params.n - 1:
        raise ValueError(f"star parameter m must lie in [1, n-1] = [1, {params.n - 1}], got {m}")
    return float(params.n * binomial(params.n - 1, m)) * _powi(params.p, m)


def _cov_star_terms(n: int, p: float, m: int, l: int):
    """Term stream of Cov(S_{m+1}, S_{l+1}); empty when either count is degenerate."""
    if m > n - 1 or l > n - 1:
        return
    # Shared-centre pairs: s common leaves, s >= max(1, m+l-n+1).
    for s in range(max(1, m + l - n + 1), min(m, l) + 1):
        coef = multinomial(n - 1, (s, m - s, l - s, n - m - l + s - 1))
        yield float(n * coef) * _powi(p, m + l - s) * _one_minus_pow(p, s)
    # Distinct centres share at most the edge joining them.
    coef2 = n * (n - 1) * binomial(n - 2, m - 1) * binomial(n - 2, l - 1)
    yield float(coef2) * _powi(p, m + l - 1) * (1.0 - p)


def exact_cov_star(params: GnpParams, m: int, l: int) -> float:
    """Cov(S_{m+1}, S_{l+1}), symmetric in (m, l)."""
    n = params.n
    for name, v in (("m", m), ("l", l)):
        if not 1 <= v <= n - 1:
            raise ValueError(f"star parameter {name} must lie in [1, n-1] = [1, {n - 1}], got {v}")
    return _kahan_sum(_cov_star_terms(n, params.p, m, l))


def exact_mean_zagreb(params: GnpParams, k: int) -> float:
    """E[Z^(k)] = sum_m {k m} * n!/(n-m-1)! * p^m; orders m+1 > n vanish."""
    _check_order(k)
    n, p = params.n, params.p
    terms = (
        float(stirling2(k, m) * falling_factorial(n, m + 1)) * _powi(p, m)
        for m in range(1, min(k, n - 1) + 1)
    )
    return _kahan_sum(terms)


def exact_cov_zagreb(params: GnpParams, m: int, l: int) -> float:
    """Cov(Z^(m), Z^(l)) assembled bilinearly from the star covariances."""
    _check_order(m)
    _check_order(l)
    n, p = params.n, params.p

    def terms():
        for i in range(1, m + 1):
            si = stirling2(m, i)
            if si == 0:
                continue
            for j in range(1, l + 1):
                sj = stirling2(l, j)
                if sj == 0:
                    continue
                w = float(math.factorial(i) * math.factorial(j) * si * sj)
                for t in _cov_star_terms(n, p, i, j):
                    yield w * t

    return _kahan_sum(terms())


def exact_var_zagreb(params: GnpParams, k: int) -> float:
    """Var[Z^(k)]: the (k, k) case of the covariance double sum."""
    return exact_cov_zagreb(params, k, k)


def exact_cov_zagreb_matrix(params: GnpParams, k: int) -> MomentReport:
    """Full k x k covariance of (Z^(1), ..., Z^(k)) plus the mean vector."""
    _check_order(k)
    mean = np.array([exact_mean_zagreb(params, m) for m in range(1, k + 1)])
    cov = np.empty((k, k))
    for m in range(1, k + 1):
        for l in range(m, k + 1):
            cov[m - 1, l - 1] = cov[l - 1, m - 1] = exact_cov_zagreb(params, m, l)
    labels = tuple(f"Z{m}" for m in range(1, k + 1))
    return MomentReport(k, mean, cov, SOURCE_EXACT, params, labels)


# ---------------------------------------------------------------------------
# Leading-order asymptotics
# ---------------------------------------------------------------------------


def asymp_mean_zagreb(params: GnpParams, k: int) -> float:
    """Leading term of E[Z^(k)]: sum_m {k m} n^{m+1} p^m."""
    _check_order(k)
    n, p = params.n, params.p
    return _kahan_sum(
        float(stirling2(k, m)) * _powi(float(n), m + 1) * _powi(p, m) for m in range(1, k + 1)
    )


def asymp_cov_zagreb(params: GnpParams, m: int, l: int) -> float:
    """Leading term of Cov(Z^(m), Z^(l)) as a polynomial in np."""
    _check_order(m)
    _check_order(l)
    n, p = params.n, params.p
    npf = n * p

    def terms():
        for i in range(1, m + 1):
            si = stirling2(m, i)
            if si == 0:
                continue
            for j in range(1, l + 1):
                sj = stirling2(l, j)
                if sj == 0:
                    continue
                w = float(si * sj)
                yield w * i * j * _powi(npf, i + j - 1) * (1.0 - p) * n
                fij = math.factorial(i) * math.factorial(j)
                for s in range(1, min(i, j) + 1):
                    coef = fij // (math.factorial(s) * math.factorial(i - s) * math.factorial(j - s))
                    yield w * coef * _powi(npf, i + j - s) * _one_minus_pow(p, s) * n

    return _kahan_sum(terms())


def asymp_var_zagreb(params: GnpParams, k: int) -> float:
    """Leading term of Var[Z^(k)]."""
    return asymp_cov_zagreb(params, k, k)


# ---------------------------------------------------------------------------
# Exhaustive enumeration oracle
# ---------------------------------------------------------------------------


def _slot_incidence(n: int) -> np.ndarray:
    """(C(n,2) x n) 0/1 matrix mapping row-major edge slots to endpoints."""
    m_slots = n * (n - 1) // 2
    inc = np.zeros((m_slots, n), dtype=np.int16)
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            inc[t, i] = 1
            inc[t, j] = 1
            t += 1
    return inc


def _oracle_stats(degrees: np.ndarray, k: int) -> np.ndarray:
    """Columns Z1..Zk then S2..S{k+1} for a batch of degree rows."""
    rows, _ = degrees.shape
    out = np.empty((rows, 2 * k), dtype=np.float64)
    d = degrees.astype(np.int64)
    pw = d.copy()
    for m in range(k):
        out[:, m] = pw.sum(axis=1)
        pw *= d
    c = np.ones_like(d)
    for m in range(1, k + 1):
        c = c * (d - (m - 1)) // m
        out[:, k + m - 1] = c.sum(axis=1)
    return out


def enumerate_oracle(params: GnpParams, k: int, chunk: int = 1 << 16) -> MomentReport:
    """Exact moments by summation over every labeled graph on n <= 7 vertices.

    Graphs are enumerated as bitmasks over the same canonical edge-slot
    order the sampler uses.  Two passes (mean, then central covariance)
    keep the covariance numerically clean and positive semidefinite up to
    roundoff.  Chunks are reduced in fixed index order.
    """
    _check_order(k)
    n, p = params.n, params.p
    if n > MAX_ENUMERATION_VERTICES:
        raise ValueError(
            f"enumeration supports n <= {MAX_ENUMERATION_VERTICES} (2^21 graphs), got n={n}"
        )
    if n * max(n - 1, 1) ** k > 2**63 - 1:
        raise ValueError(f"order k={k} overflows the enumeration's 64-bit accumulators at n={n}")
    m_slots = n * (n - 1) // 2
    total = 1 << m_slots
    inc = _slot_incidence(n)
    shifts = np.arange(m_slots, dtype=np.int64)
    pow_p = np.array([_powi(p, e) for e in range(m_slots + 1)])
    pow_q = np.array([_powi(1.0 - p, e) for e in range(m_slots + 1)])

    def batches():
        for lo in range(0, total, chunk):
            masks = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
            bits = ((masks[:, None] >> shifts[None, :]) & 1).astype(np.int16)
            degrees = bits @ inc
            e = bits.sum(axis=1)
            w = pow_p[e] * pow_q[m_slots - e]
            yield w, _oracle_stats(degrees, k)

    width = 2 * k
    mean = np.zeros(width)
    for w, x in batches():
        mean += w @ x
    cov = np.zeros((width, width))
    for w, x in batches():
        xc = x - mean
        cov += (xc * w[:, None]).T @ xc
    labels = tuple(f"Z{m}" for m in range(1, k + 1)) + tuple(f"S{m}" for m in range(2, k + 2))
    return MomentReport(k, mean, cov, SOURCE_ENUMERATION, params, labels)
