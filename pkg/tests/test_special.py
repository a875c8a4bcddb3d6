import math

import numpy as np
import pytest
import scipy.special as sp

from zagreb.special import (
    erf,
    gammainc_lower,
    gammainc_upper,
    kolmogorov_sf,
    norm_cdf,
    poisson_pmf,
)


def test_erf_against_stdlib_within_target():
    # documented target: absolute error <= 1e-12
    xs = np.linspace(-6.5, 6.5, 1001)
    worst = max(abs(erf(float(x)) - math.erf(float(x))) for x in xs)
    assert worst <= 1e-12


def test_erf_edges():
    assert erf(0.0) == 0.0
    assert erf(10.0) == 1.0
    assert erf(-10.0) == -1.0
    assert erf(-1.25) == -erf(1.25)


def test_norm_cdf_basics():
    assert norm_cdf(0.0) == 0.5
    assert abs(norm_cdf(1.959963984540054) - 0.975) < 1e-12
    assert norm_cdf(-8.0) < 1e-14


def test_gammainc_against_scipy_within_target():
    # documented target: absolute error <= 1e-10
    worst = 0.0
    for a in (0.5, 1.0, 2.5, 3.0, 7.0, 17.5, 60.0):
        for x in np.linspace(1e-3, 4 * a + 20, 300):
            worst = max(worst, abs(gammainc_lower(a, float(x)) - sp.gammainc(a, float(x))))
            worst = max(worst, abs(gammainc_upper(a, float(x)) - sp.gammaincc(a, float(x))))
    assert worst <= 1e-10


def test_gammainc_edges_and_complement():
    assert gammainc_lower(2.0, 0.0) == 0.0
    assert gammainc_upper(2.0, 0.0) == 1.0
    for a, x in ((0.5, 0.3), (4.0, 9.0)):
        assert gammainc_lower(a, x) + gammainc_upper(a, x) == pytest.approx(1.0, abs=1e-13)
    with pytest.raises(ValueError):
        gammainc_lower(0.0, 1.0)
    with pytest.raises(ValueError):
        gammainc_upper(1.0, -1.0)


def test_kolmogorov_sf_against_scipy_within_target():
    xs = np.linspace(0.06, 3.0, 500)
    worst = max(abs(kolmogorov_sf(float(x)) - sp.kolmogorov(float(x))) for x in xs)
    assert worst <= 1e-12


def test_kolmogorov_sf_edges():
    assert kolmogorov_sf(0.0) == 1.0
    assert kolmogorov_sf(0.01) == 1.0
    assert kolmogorov_sf(5.0) < 1e-20
    # monotone decreasing
    vals = [kolmogorov_sf(x) for x in (0.3, 0.6, 1.0, 1.6, 2.2)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_poisson_pmf_normalizes_and_matches_ratio():
    lam = 3.7
    total = sum(poisson_pmf(k, lam) for k in range(80))
    assert total == pytest.approx(1.0, abs=1e-12)
    for k in range(1, 30):
        assert poisson_pmf(k, lam) == pytest.approx(poisson_pmf(k - 1, lam) * lam / k, rel=1e-12)
    assert poisson_pmf(-1, lam) == 0.0
