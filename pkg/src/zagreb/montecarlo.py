"""Seeded replication engine, empirical moments, and goodness-of-fit tests.

Replicate r of an experiment depends only on (master_seed, r), so the
worker count changes scheduling but provably never the output: workers
fill disjoint row ranges of a preallocated sample matrix, and every
aggregate is reduced over the completed matrix in fixed replicate order.

The Kolmogorov-Smirnov test is reserved for continuous (Gaussian) targets;
Poisson targets use a Pearson chi-square with tail pooling, since the KS
distribution is wrong for discrete laws.
"""
from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO

import numpy as np

from .combinatorics import MAX_ORDER
from .graph import GnpParams, Seed, sample_gnp_degrees
from .indices import star_vector, zagreb_vector
from .limits import Normalizer, CovModel, PLaw
from .moments import SOURCE_MONTE_CARLO, MomentReport
from .special import kolmogorov_sf, norm_cdf, gammainc_upper

COLLECT_ZAGREB = "zagreb"
COLLECT_STARS = "stars"


@dataclass(frozen=True)
class McConfig:
    """One replication experiment: model, orders, replicate count, seed."""

    n: int
    k: int
    replicates: int
    master_seed: int
    p: float | None = None
    plaw: PLaw | None = None
    collect: tuple[str, ...] = (COLLECT_ZAGREB,)
    tests: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if (self.p is None) == (self.plaw is None):
            raise ValueError("exactly one of p and plaw must be given")
        if self.replicates < 1:
            raise ValueError(f"replicates must be >= 1, got {self.replicates}")
        if not 1 <= self.k <= MAX_ORDER:
            raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {self.k}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")
        if not self.collect or any(c not in (COLLECT_ZAGREB, COLLECT_STARS) for c in self.collect):
            raise ValueError(f"collect must name 'zagreb' and/or 'stars', got {self.collect}")
        self.params  # validates n and the resolved p

    @property
    def resolved_p(self) -> float:
        return self.p if self.p is not None else self.plaw.evaluate(self.n)

    @property
    def params(self) -> GnpParams:
        return GnpParams(self.n, self.resolved_p)


@dataclass(frozen=True)
class SampleMatrix:
    """Replicates x columns matrix of exact index values.

    Row r is reproducible from (config.master_seed, r) alone.  Values are
    int64 when the a-priori bound n(n-1)^k fits, else Python ints in an
    object array.
    """

    values: np.ndarray
    columns: tuple[str, ...]
    config: McConfig

    def column(self, label: str) -> np.ndarray:
        return self.values[:, self.columns.index(label)]


@dataclass(frozen=True)
class TestResult:
    """Outcome of one goodness-of-fit test."""

    __test__ = False  # keep pytest from collecting this as a test class

    name: str
    statistic: float
    p_value: float
    alpha: float
    passed: bool

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_value <= 1.0:
            raise ValueError(f"p-value outside [0, 1]: {self.p_value}")
        if self.passed != (self.p_value >= self.alpha):
            raise ValueError("pass flag inconsistent with (p_value, alpha)")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statistic": self.statistic,
            "p_value": self.p_value,
            "alpha": self.alpha,
            "pass": self.passed,
        }


def _column_labels(config: McConfig) -> tuple[str, ...]:
    labels: list[str] = []
    if COLLECT_ZAGREB in config.collect:
        labels += [f"Z{m}" for m in range(1, config.k + 1)]
    if COLLECT_STARS in config.collect:
        labels += [f"S{m}" for m in range(2, config.k + 2)]
    return tuple(labels)


def run_experiment(config: McConfig, workers: int = 1) -> tuple[SampleMatrix, MomentReport]:
    """Draw all replicates and report their empirical moments.

    Each replicate samples a degree sequence with seed (master, r) and
    records its index vector and/or star vector.  ``workers`` threads fill
    disjoint row ranges; the result is byte-identical for any count.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    params = config.params
    labels = _column_labels(config)
    want_z = COLLECT_ZAGREB in config.collect
    want_s = COLLECT_STARS in config.collect
    exact_in_int64 = config.n * max(config.n - 1, 1) ** config.k <= 2**63 - 1
    dtype = np.int64 if exact_in_int64 else object
    values = np.zeros((config.replicates, len(labels)), dtype=dtype)

    def fill(lo: int, hi: int) -> None:
        for r in range(lo, hi):
            d = sample_gnp_degrees(params, Seed(config.master_seed, r))
            row: list[int] = []
            if want_z:
                row += list(zagreb_vector(d, config.k).values)
            if want_s:
                row += list(star_vector(d, config.k).values)
            values[r, :] = row

    if workers == 1 or config.replicates < 2 * workers:
        fill(0, config.replicates)
    else:
        step = -(-config.replicates // workers)
        ranges = [
            (lo, min(lo + step, config.replicates))
            for lo in range(0, config.replicates, step)
        ]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for f in [pool.submit(fill, lo, hi) for lo, hi in ranges]:
                f.result()

    matrix = SampleMatrix(values, labels, config)
    return matrix, empirical_moments(matrix)


def empirical_moments(s: SampleMatrix) -> MomentReport:
    """Column means and unbiased covariance (divisor R-1) of a sample matrix."""
    x = s.values.astype(np.float64)
    mean = x.mean(axis=0)
    r = x.shape[0]
    if r > 1:
        xc = x - mean
        cov = xc.T @ xc / (r - 1)
    else:
        cov = np.zeros((x.shape[1], x.shape[1]))
    cov = (cov + cov.T) / 2.0
    return MomentReport(s.config.k, mean, cov, SOURCE_MONTE_CARLO, s.config.params, s.columns)


def standardize_samples(s: SampleMatrix, norms: list[Normalizer]) -> SampleMatrix:
    """Entrywise (value - center_m) / scale_m, column m matched by position."""
    if len(norms) != len(s.columns):
        raise ValueError(f"{len(norms)} normalizers for {len(s.columns)} columns")
    x = s.values.astype(np.float64)
    centers = np.array([nm.center for nm in norms])
    scales = np.array([nm.scale for nm in norms])
    return SampleMatrix((x - centers) / scales, s.columns, s.config)


# ---------------------------------------------------------------------------
# Goodness-of-fit tests
# ---------------------------------------------------------------------------


def ks_statistic(sample: np.ndarray) -> float:
    """One-sample Kolmogorov-Smirnov statistic against the standard normal."""
    x = np.sort(np.asarray(sample, dtype=np.float64))
    r = x.size
    if r == 0:
        raise ValueError("empty sample")
    cdf = np.array([norm_cdf(v) for v in x])
    grid = np.arange(1, r + 1, dtype=np.float64) / r
    d_plus = float(np.max(grid - cdf))
    d_minus = float(np.max(cdf - (grid - 1.0 / r)))
    return max(d_plus, d_minus)


def ks_test_normal(sample: np.ndarray, alpha: float) -> TestResult:
    """KS test of a sample against N(0, 1), asymptotic p-value."""
    x = np.asarray(sample, dtype=np.float64)
    if x.size < 50:
        raise ValueError(f"KS test needs at least 50 observations, got {x.size}")
    d = ks_statistic(x)
    p_value = kolmogorov_sf(math.sqrt(x.size) * d)
    return TestResult("ks-normal", d, p_value, alpha, p_value >= alpha)


def chisq_test_poisson(
    counts: np.ndarray, lam: float, alpha: float, min_expected: float = 5.0
) -> TestResult:
    """Pearson chi-square of a value histogram against Poisson(lam).

    ``counts[v]`` is the number of observations equal to v.  Adjacent
    values are pooled left to right until each bin expects at least
    ``min_expected``; the final bin absorbs the entire upper tail.
    """
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    counts = np.asarray(counts, dtype=np.int64)
    if counts.size == 0 or counts.min() < 0:
        raise ValueError("counts must be a non-empty vector of non-negative integers")
    total = int(counts.sum())
    if total == 0:
        raise ValueError("empty histogram")

    # Expected counts per value, with the open tail carrying the rest.
    pmf_cum = 0.0
    observed: list[float] = []
    expected: list[float] = []
    acc_obs = 0.0
    acc_exp = 0.0
    for v in range(counts.size):
        prob = math.exp(v * math.log(lam) - lam - math.lgamma(v + 1))
        pmf_cum += prob
        acc_obs += counts[v]
        acc_exp += total * prob
        if acc_exp >= min_expected:
            observed.append(acc_obs)
            expected.append(acc_exp)
            acc_obs = 0.0
            acc_exp = 0.0
    # Tail bin: everything at or beyond the last histogram cell.
    acc_exp += total * max(0.0, 1.0 - pmf_cum)
    if acc_exp > 0 or acc_obs > 0:
        if expected and acc_exp < min_expected:
            observed[-1] += acc_obs
            expected[-1] += acc_exp
        else:
            observed.append(acc_obs)
            expected.append(acc_exp)

    if len(expected) < 2:
        raise ValueError("pooling left fewer than 2 bins; not enough data for a chi-square test")
    obs = np.array(observed)
    exp = np.array(expected)
    stat = float(np.sum((obs - exp) ** 2 / exp))
    dof = len(expected) - 1
    p_value = gammainc_upper(dof / 2.0, stat / 2.0)
    return TestResult("chisq-poisson", stat, p_value, alpha, p_value >= alpha)


def compare_cov(empirical: np.ndarray, target: CovModel | np.ndarray) -> float:
    """Relative Frobenius error ||E - T||_F / ||T||_F."""
    t = target.matrix if isinstance(target, CovModel) else np.asarray(target, dtype=np.float64)
    e = np.asarray(empirical, dtype=np.float64)
    if e.shape != t.shape:
        raise ValueError(f"shape mismatch: empirical {e.shape} vs target {t.shape}")
    return float(np.linalg.norm(e - t) / np.linalg.norm(t))


# ---------------------------------------------------------------------------
# CSV output
# ---------------------------------------------------------------------------


def write_samples_csv(matrix: SampleMatrix, out: IO[str]) -> None:
    """Write one row per replicate; exact integers as decimal strings."""
    out.write("replicate," + ",".join(matrix.columns) + "\n")
    for r in range(matrix.values.shape[0]):
        row = matrix.values[r]
        out.write(str(r) + "," + ",".join(str(int(v)) for v in row) + "\n")


def samples_csv_text(matrix: SampleMatrix) -> str:
    buf = io.StringIO()
    write_samples_csv(matrix, buf)
    return buf.getvalue()
