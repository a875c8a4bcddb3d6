"""Named verification suites: statistical reproduction of the limit laws.

Each suite returns a list of :class:`CheckResult`; a suite passes when all
its checks do.  The suites are deterministic given their seed, so they
double as the acceptance gate (tests/test_acceptance.py) and as the CLI
``verify`` subcommand.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import GnpParams, Seed, sample_gnp_degrees
from .indices import check_star_identity, complement_zagreb_check, transform_matrix
from .limits import (
    PLawParseError,
    classify_regime,
    parse_plaw,
    standardizer,
    star_cov_limit,
    star_cov_limit_det,
    zagreb_cov_limit,
)
from .moments import (
    _one_minus_pow,
    enumerate_oracle,
    exact_cov_star,
    exact_cov_zagreb_matrix,
    exact_mean_star,
    exact_mean_zagreb,
)
from .montecarlo import (
    McConfig,
    TestResult,
    chisq_test_poisson,
    compare_cov,
    empirical_moments,
    ks_test_normal,
    run_experiment,
    samples_csv_text,
    standardize_samples,
)

DEFAULT_SEED = 20260802


@dataclass(frozen=True)
class CheckResult:
    criterion: str
    passed: bool
    detail: str
    test: "TestResult | None" = None  # the underlying GOF result, when one ran

    def __post_init__(self) -> None:
        object.__setattr__(self, "passed", bool(self.passed))

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.criterion}  ({self.detail})"


def _close(a: float, b: float, rel: float = 1e-9, abs_: float = 1e-12) -> bool:
    return bool(abs(a - b) <= max(abs_, rel * max(abs(a), abs(b))))


# ---------------------------------------------------------------------------
# Exact identity and formula suites
# ---------------------------------------------------------------------------


def identity_suite(seed: int = DEFAULT_SEED, graphs: int = 1000) -> list[CheckResult]:
    """Star-transform and complement identities on seeded random graphs.

    Exact integer equality for every order up to 8 on ``graphs`` sampled
    degree sequences with n <= 50 and p cycling {0.1, 0.5, 0.9}.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    ps = (0.1, 0.5, 0.9)
    star_ok = complement_ok = 0
    for i in range(graphs):
        n = int(rng.integers(2, 51))
        params = GnpParams(n, ps[i % 3])
        d = sample_gnp_degrees(params, Seed(seed, i))
        star_ok += check_star_identity(d, 8).holds
        complement_ok += complement_zagreb_check(d, 8).holds
    return [
        CheckResult(
            "identity/star-transform",
            star_ok == graphs,
            f"{star_ok}/{graphs} graphs, orders 1..8, exact",
        ),
        CheckResult(
            "identity/complement",
            complement_ok == graphs,
            f"{complement_ok}/{graphs} graphs, orders 1..8, exact",
        ),
    ]


def oracle_suite(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Closed-form moments against exhaustive enumeration, n in {3,4,5}."""
    k = 4
    worst = 0.0
    agree = True
    for n in (3, 4, 5):
        for p in (0.2, 0.5, 0.8):
            params = GnpParams(n, p)
            oracle = enumerate_oracle(params, k)
            exact = exact_cov_zagreb_matrix(params, k)
            for m in range(1, k + 1):
                om = oracle.mean[oracle.component(f"Z{m}")]
                fm = exact.mean[m - 1]
                agree &= _close(om, fm)
                worst = max(worst, abs(om - fm) / max(1.0, abs(om)))
                if m <= n - 1:
                    osm = oracle.mean[oracle.component(f"S{m + 1}")]
                    fsm = exact_mean_star(params, m)
                    agree &= _close(osm, fsm)
            for m in range(1, k + 1):
                for l in range(1, k + 1):
                    oc = oracle.cov[oracle.component(f"Z{m}"), oracle.component(f"Z{l}")]
                    fc = exact.cov[m - 1, l - 1]
                    agree &= _close(oc, fc)
                    worst = max(worst, abs(oc - fc) / max(1.0, abs(oc)))
                    if m <= n - 1 and l <= n - 1:
                        ocs = oracle.cov[oracle.component(f"S{m + 1}"), oracle.component(f"S{l + 1}")]
                        fcs = exact_cov_star(params, m, l)
                        agree &= _close(ocs, fcs)
    spot = GnpParams(3, 0.5)
    spot_ok = (
        _close(exact_mean_zagreb(spot, 2), 4.5)
        and _close(exact_cov_zagreb_matrix(spot, 2).cov[1, 1], 12.75)
        and _close(exact_cov_star(spot, 1, 2), 1.5)
    )
    return [
        CheckResult(
            "oracle/formula-agreement",
            agree,
            f"n in 3..5, p in {{0.2,0.5,0.8}}, k<=4, worst rel dev {worst:.2e}",
        ),
        CheckResult("oracle/spot-values", spot_ok, "mean[Z2]=4.5 var[Z2]=12.75 cov(S2,S3)=1.5 at n=3 p=0.5"),
    ]


def matrices_suite() -> list[CheckResult]:
    """Determinant closed form, bilinear transform, and the k=3 fixture."""
    det_ok = True
    worst_det = 0.0
    for k in range(1, 9):
        for c in (0.5, 1.0, 2.0):
            closed = star_cov_limit_det(c, k)
            lu = float(np.linalg.det(star_cov_limit(c, k).matrix))
            det_ok &= _close(closed, lu, rel=1e-9)
            worst_det = max(worst_det, abs(closed - lu) / abs(closed))
    bil_ok = True
    for k in range(1, 7):
        a = np.array(transform_matrix(k).entries, dtype=np.float64)
        for c in (0.5, 1.0, 2.0):
            direct = zagreb_cov_limit(c, k).matrix
            mapped = a @ star_cov_limit(c, k).matrix @ a.T
            bil_ok &= bool(np.all(np.abs(direct - mapped) <= 1e-9 * np.maximum(1.0, np.abs(direct))))
    fixture = 2.0 * np.array([[1, 3, 10], [3, 10, 36], [10, 36, 139]], dtype=np.float64)
    fix_ok = bool(np.array_equal(zagreb_cov_limit(1.0, 3).matrix, fixture))
    return [
        CheckResult("matrices/determinant", det_ok, f"k<=8, c in {{0.5,1,2}}, worst rel dev {worst_det:.2e}"),
        CheckResult("matrices/bilinear-transform", bil_ok, "k<=6, entrywise 1e-9 relative"),
        CheckResult("matrices/k3-fixture", fix_ok, "critical index covariance at c=1 matches 2*[[1,3,10],...]"),
    ]


# ---------------------------------------------------------------------------
# Monte Carlo limit-law suites
# ---------------------------------------------------------------------------


def _critical_config(seed: int) -> tuple[McConfig, GnpParams]:
    law = parse_plaw("1*n^-1")
    n = 2000
    config = McConfig(n=n, k=3, replicates=5000, master_seed=seed, plaw=law)
    return config, config.params


def clt_critical_suite(seed: int = DEFAULT_SEED, workers: int = 1) -> list[CheckResult]:
    """Critical window np -> 1: covariance target and marginal normality."""
    config, params = _critical_config(seed)
    report = classify_regime(config.plaw, config.k)
    norms, target = standardizer(report, params, config.k)
    matrix, _ = run_experiment(config, workers=workers)
    std = standardize_samples(matrix, norms)
    emp = empirical_moments(std)
    frob = compare_cov(emp.cov, target)
    out = [
        CheckResult(
            "clt-critical/covariance",
            frob <= 0.15,
            f"relative Frobenius error {frob:.4f} <= 0.15 (n=2000, c=1, k=3, R=5000)",
        )
    ]
    for m in range(1, config.k + 1):
        col = std.values[:, m - 1] / math.sqrt(target.matrix[m - 1, m - 1])
        t = ks_test_normal(col, 0.01)
        out.append(
            CheckResult(
                f"clt-critical/ks-order-{m}",
                t.passed,
                f"D={t.statistic:.4f}, p={t.p_value:.4f} >= 0.01",
                test=t,
            )
        )
    return out


def clt_dense_suite(seed: int = DEFAULT_SEED, workers: int = 1) -> list[CheckResult]:
    """Dense regime p = 0.5: rank-one limit, normal marginals."""
    law = parse_plaw("0.5")
    config = McConfig(n=500, k=3, replicates=5000, master_seed=seed, plaw=law)
    report = classify_regime(law, config.k)
    norms, _ = standardizer(report, config.params, config.k)
    matrix, _ = run_experiment(config, workers=workers)
    std = standardize_samples(matrix, norms)
    out = []
    for m in range(1, config.k + 1):
        t = ks_test_normal(std.values[:, m - 1], 0.01)
        out.append(
            CheckResult(
                f"clt-dense/ks-order-{m}",
                t.passed,
                f"D={t.statistic:.4f}, p={t.p_value:.4f} >= 0.01",
                test=t,
            )
        )
    corr = np.corrcoef(std.values.T)
    min_corr = float(corr[np.triu_indices_from(corr, 1)].min())
    out.append(
        CheckResult("clt-dense/correlations", min_corr >= 0.95, f"min pairwise corr {min_corr:.4f} >= 0.95")
    )
    return out


def clt_sparse_suite(seed: int = DEFAULT_SEED, workers: int = 1) -> list[CheckResult]:
    """Sparse regime p = n^-1.5: edge count dominates every order."""
    law = parse_plaw("1*n^-1.5")
    config = McConfig(n=10_000, k=3, replicates=5000, master_seed=seed, plaw=law)
    report = classify_regime(law, config.k)
    norms, _ = standardizer(report, config.params, config.k)
    matrix, _ = run_experiment(config, workers=workers)
    std = standardize_samples(matrix, norms)
    out = []
    for m in range(1, config.k + 1):
        t = ks_test_normal(std.values[:, m - 1], 0.01)
        out.append(
            CheckResult(
                f"clt-sparse/ks-order-{m}",
                t.passed,
                f"D={t.statistic:.4f}, p={t.p_value:.4f} >= 0.01",
                test=t,
            )
        )
    corr = np.corrcoef(std.values.T)
    min_corr = float(corr[np.triu_indices_from(corr, 1)].min())
    out.append(
        CheckResult("clt-sparse/correlations", min_corr >= 0.95, f"min pairwise corr {min_corr:.4f} >= 0.95")
    )
    return out


def poisson_suite(seed: int = DEFAULT_SEED, workers: int = 1) -> list[CheckResult]:
    """Poisson window n^2 p -> 2: half the first index is Poisson(1)."""
    law = parse_plaw("2*n^-2")
    report = classify_regime(law, 1)
    lam = report.parameter / 2.0
    config = McConfig(n=100, k=1, replicates=10_000, master_seed=seed, plaw=law)
    matrix, _ = run_experiment(config, workers=workers)
    z1 = matrix.values[:, 0].astype(np.int64)
    halves = z1 // 2
    non_integer = int(np.count_nonzero(z1 % 2))  # cannot occur: degree-power sums are even
    counts = np.bincount(halves)
    t = chisq_test_poisson(counts, lam, 0.01)
    return [
        CheckResult(
            "poisson/chisq",
            t.passed and non_integer == 0,
            f"chi2={t.statistic:.3f}, p={t.p_value:.4f} >= 0.01, lambda={lam}, "
            f"{non_integer} non-integer values",
            test=t,
        )
    ]


def wlln_suite(seed: int = DEFAULT_SEED, workers: int = 1) -> list[CheckResult]:
    """Weak-law ratios: to the mean (sparse side) and to the complement gap."""
    config = McConfig(n=500, k=3, replicates=1000, master_seed=seed, p=0.3)
    matrix, _ = run_experiment(config, workers=workers)
    mean_z3 = exact_mean_zagreb(config.params, 3)
    ratio = matrix.values[:, 2].astype(np.float64) / mean_z3
    r_mean, r_sd = float(ratio.mean()), float(ratio.std(ddof=1))
    out = [
        CheckResult(
            "wlln/ratio-to-mean",
            abs(r_mean - 1.0) <= 0.01 and r_sd < 0.05,
            f"mean {r_mean:.5f} within 1% of 1, sd {r_sd:.5f} < 0.05 (n=500, p=0.3, k=3)",
        )
    ]
    n = 300
    p = 1.0 - 2.0 / n
    config2 = McConfig(n=n, k=2, replicates=1000, master_seed=seed + 1, p=p)
    matrix2, _ = run_experiment(config2, workers=workers)
    z2 = matrix2.values[:, 1].astype(np.float64)
    gap = n * float(n - 1) ** 2 - z2
    predicted = float(n) ** 3 * _one_minus_pow(p, 2)
    c_mean = float((gap / predicted).mean())
    out.append(
        CheckResult(
            "wlln/complement-ratio",
            abs(c_mean - 1.0) <= 0.10,
            f"mean {c_mean:.5f} within 10% of 1 (n=300, p=1-2/n, k=2)",
        )
    )
    return out


def determinism_suite(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """The critical-window run must be byte-identical for 1 and 8 workers."""
    config, _ = _critical_config(seed)
    csv1 = samples_csv_text(run_experiment(config, workers=1)[0])
    csv8 = samples_csv_text(run_experiment(config, workers=8)[0])
    return [
        CheckResult(
            "determinism/worker-count",
            csv1 == csv8,
            f"{len(csv1)} CSV bytes identical across worker counts 1 and 8",
        )
    ]


REGIME_FIXTURES: tuple[tuple[str, str, float | None, str], ...] = (
    ("1*n^-3", "DegenerateZero", None, "none"),
    ("2*n^-2", "PoissonHalfLambda", 2.0, "none"),
    ("1-1*n^-3", "DegenerateComplete", None, "none"),
    ("1-2*n^-2", "PoissonComplement", 2.0, "none"),
    ("1*n^-1.5", "CLT-Sparse", None, "normal"),
    ("1*n^-1", "CLT-Critical", 1.0, "normal"),
    ("0.5", "CLT-Dense", None, "normal"),
    ("1-2*n^-1", "CLT-Single", None, "open"),
)


def regimes_suite() -> list[CheckResult]:
    """The eight documented law fixtures plus parser goldens."""
    ok = True
    for text, regime, parameter, joint in REGIME_FIXTURES:
        rep = classify_regime(parse_plaw(text), 3)
        ok &= rep.regime == regime and rep.joint_normality == joint
        if parameter is None:
            ok &= rep.parameter is None
        else:
            ok &= rep.parameter is not None and _close(rep.parameter, parameter)
    parser_ok = (
        str(parse_plaw("0.5")) == "0.5"
        and str(parse_plaw(" 2 * n^- 1 ")) == "2*n^-1"
        and str(parse_plaw("1-3*n^-2")) == "1-3*n^-2"
    )
    for bad, exc in (("1.5", ValueError), ("n^-2", PLawParseError), ("0.5*m^-1", PLawParseError)):
        try:
            parse_plaw(bad)
            parser_ok = False
        except exc:
            pass
        except ValueError:
            # PLawParseError subclasses ValueError; any other ValueError here
            # means the domain check fired where a parse error was expected.
            parser_ok = parser_ok and exc is ValueError
    return [
        CheckResult("regimes/fixtures", ok, f"{len(REGIME_FIXTURES)} (law, regime) fixtures"),
        CheckResult("regimes/parser-goldens", parser_ok, "round-trips and rejections"),
    ]


SUITES = {
    "identity": lambda seed=DEFAULT_SEED, workers=1: identity_suite(seed),
    "oracle": lambda seed=DEFAULT_SEED, workers=1: oracle_suite(seed),
    "matrices": lambda seed=DEFAULT_SEED, workers=1: matrices_suite(),
    "clt-critical": clt_critical_suite,
    "clt-dense": clt_dense_suite,
    "clt-sparse": clt_sparse_suite,
    "poisson": poisson_suite,
    "wlln": wlln_suite,
    "determinism": lambda seed=DEFAULT_SEED, workers=1: determinism_suite(seed),
    "regimes": lambda seed=DEFAULT_SEED, workers=1: regimes_suite(),
}


def run_suite(name: str, seed: int = DEFAULT_SEED, workers: int = 1) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite_name in SUITES:
            results.extend(run_suite(suite_name, seed=seed, workers=workers))
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    return SUITES[name](seed=seed, workers=workers)
