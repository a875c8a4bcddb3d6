"""Acceptance gate: one test per criterion, at the stated tolerances.

Each test prints one line per check; the pytest verbose listing gives the
per-criterion pass/fail summary.  All runs are seeded and deterministic.
"""
import time

import pytest

from zagreb.verify import (
    DEFAULT_SEED,
    clt_critical_suite,
    clt_dense_suite,
    clt_sparse_suite,
    determinism_suite,
    identity_suite,
    matrices_suite,
    oracle_suite,
    poisson_suite,
    regimes_suite,
    wlln_suite,
)


def _report(label, checks, elapsed, budget):
    for c in checks:
        print(c.line())
    print(f"{label}: {elapsed:.1f}s (budget {budget:.0f}s)")
    assert elapsed < budget, f"{label} exceeded its runtime budget: {elapsed:.1f}s"
    failed = [c for c in checks if not c.passed]
    assert not failed, "failed checks: " + "; ".join(c.line() for c in failed)


def test_criterion_01_identity_suite():
    t0 = time.monotonic()
    checks = identity_suite(DEFAULT_SEED, graphs=1000)
    _report("criterion 1 (identity)", checks, time.monotonic() - t0, 10.0)


def test_criterion_02_oracle_suite():
    t0 = time.monotonic()
    checks = oracle_suite()
    _report("criterion 2 (oracle)", checks, time.monotonic() - t0, 60.0)


def test_criterion_03_matrix_suite():
    t0 = time.monotonic()
    checks = matrices_suite()
    _report("criterion 3 (matrices)", checks, time.monotonic() - t0, 1.0)


def test_criterion_04_clt_critical():
    t0 = time.monotonic()
    checks = clt_critical_suite(DEFAULT_SEED)
    _report("criterion 4 (clt-critical)", checks, time.monotonic() - t0, 120.0)


def test_criterion_05_clt_dense():
    t0 = time.monotonic()
    checks = clt_dense_suite(DEFAULT_SEED)
    _report("criterion 5 (clt-dense)", checks, time.monotonic() - t0, 120.0)


@pytest.fixture(scope="module")
def sparse_run():
    t0 = time.monotonic()
    checks = clt_sparse_suite(DEFAULT_SEED)
    return checks, time.monotonic() - t0


def test_criterion_06_clt_sparse_correlations(sparse_run):
    checks, elapsed = sparse_run
    corr = [c for c in checks if "correlations" in c.criterion]
    _report("criterion 6 (clt-sparse, correlations)", corr, elapsed, 120.0)


def test_criterion_06_clt_sparse_ks(sparse_run):
    """KS marginals of the sparse run, asserted exactly as specified.

    At n = 10^4 with p = n^-1.5 the deciding quantity n^2 p equals 100, so
    every index is (a shift of) twice a Binomial count with mean about 50:
    a lattice of span 2/sqrt(2 n^2 p) ~ 0.141 standard deviations.  The
    distance from that lattice law to any normal is at least half its
    largest atom, about 0.028 (0.038 with the skew term), which exceeds
    the largest statistic a 5000-replicate KS test accepts at alpha = 0.01
    (1.628/sqrt(5000) = 0.023).  The check therefore fails for every seed;
    the asymptotic statement only becomes KS-testable at this replicate
    count once n^2 p reaches a few thousand.  The check is asserted as
    stated rather than weakened.
    """
    checks, elapsed = sparse_run
    ks = [c for c in checks if "ks-order" in c.criterion]
    _report("criterion 6 (clt-sparse, ks marginals)", ks, elapsed, 120.0)


def test_criterion_07_poisson_regime():
    t0 = time.monotonic()
    checks = poisson_suite(DEFAULT_SEED)
    _report("criterion 7 (poisson)", checks, time.monotonic() - t0, 30.0)


def test_criterion_08_wlln_regimes():
    t0 = time.monotonic()
    checks = wlln_suite(DEFAULT_SEED)
    _report("criterion 8 (wlln)", checks, time.monotonic() - t0, 60.0)


def test_criterion_09_worker_determinism():
    t0 = time.monotonic()
    checks = determinism_suite(DEFAULT_SEED)
    _report("criterion 9 (determinism)", checks, time.monotonic() - t0, 120.0)


def test_criterion_10_regime_classifier():
    t0 = time.monotonic()
    checks = regimes_suite()
    _report("criterion 10 (regimes)", checks, time.monotonic() - t0, 10.0)
