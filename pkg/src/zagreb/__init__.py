"""Generalized Zagreb indices and star counts of G(n, p).

A numpy-based library for computing degree-power indices and star counts
of simple graphs, their exact and asymptotic moments under the
Erdos-Renyi model, the classification of p(n) laws into limit regimes
(degenerate, Poisson, weak-law, Gaussian), and seeded Monte Carlo
verification of the Gaussian and Poisson limits with built-in
goodness-of-fit tests and an exhaustive-enumeration oracle.
"""

__version__ = "0.1.0"

from .combinatorics import (
    MAX_ORDER,
    binomial,
    falling_factorial,
    multinomial,
    stirling2,
    stirling2_row,
)
from .graph import (
    DegreeSequence,
    EdgeListError,
    GnpParams,
    Seed,
    SimpleGraph,
    complement_degrees,
    degree_sequence,
    mix_seed,
    read_edge_list,
    sample_gnp_degrees,
    sample_gnp_graph,
)
from .indices import (
    IdentityCheck,
    IndexVector,
    StarVector,
    TransformMatrix,
    check_star_identity,
    complement_zagreb_check,
    star_count,
    star_vector,
    transform_matrix,
    zagreb_index,
    zagreb_vector,
)
from .moments import (
    MomentReport,
    asymp_cov_zagreb,
    asymp_mean_zagreb,
    asymp_var_zagreb,
    enumerate_oracle,
    exact_cov_star,
    exact_cov_zagreb,
    exact_cov_zagreb_matrix,
    exact_mean_star,
    exact_mean_zagreb,
    exact_var_zagreb,
)
from .limits import (
    CovModel,
    Normalizer,
    PLaw,
    PLawParseError,
    RegimeReport,
    classify_regime,
    ones_matrix,
    parse_plaw,
    standardizer,
    star_cov_limit,
    star_cov_limit_det,
    zagreb_cov_limit,
)
from .montecarlo import (
    McConfig,
    SampleMatrix,
    TestResult,
    chisq_test_poisson,
    compare_cov,
    empirical_moments,
    ks_statistic,
    ks_test_normal,
    run_experiment,
    samples_csv_text,
    standardize_samples,
    write_samples_csv,
)
from .verify import DEFAULT_SEED, CheckResult, run_suite
