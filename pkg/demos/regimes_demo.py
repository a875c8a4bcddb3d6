#!/usr/bin/env python3
"""Classify p(n) laws into their limit regimes and inspect the Gaussian
covariance targets.

The deciding quantities are the limits of n^2 p, np, n^2 (1-p) and
n^2 (1-p)^3; for the monomial law grammar they reduce to exponent
comparisons.  The ultra-dense window (n^2 (1-p) -> infinity but
n^2 (1-p)^3 bounded) is normal order by order while the joint law is an
open question, and is reported as such.
"""
import numpy as np

from zagreb import (
    classify_regime,
    ones_matrix,
    parse_plaw,
    star_cov_limit,
    star_cov_limit_det,
    zagreb_cov_limit,
)

LAWS = ["1*n^-3", "2*n^-2", "1*n^-1.5", "1*n^-1", "0.5", "1-2*n^-1", "1-2*n^-2", "1-1*n^-3"]

print("=" * 78)
print("regime classification (k = 3)")
print("=" * 78)
for text in LAWS:
    rep = classify_regime(parse_plaw(text), 3)
    param = "" if rep.parameter is None else f"  parameter={rep.parameter:g}"
    print(f"\np(n) = {text:>10}  ->  {rep.regime}{param}   joint={rep.joint_normality}")
    print(f"    {rep.normalization}")

print("\n" + "=" * 78)
print("critical-window covariance targets at c = 1")
print("=" * 78)
print("\nstar-count target (k = 3):")
print(star_cov_limit(1.0, 3).matrix)
print("\nindex target (k = 3), equal to 2 * [[1,3,10],[3,10,36],[10,36,139]]:")
print(zagreb_cov_limit(1.0, 3).matrix)

print("\ndeterminant closed form vs LU decomposition:")
for k in (2, 4, 6):
    for c in (0.5, 2.0):
        closed = star_cov_limit_det(c, k)
        lu = float(np.linalg.det(star_cov_limit(c, k).matrix))
        print(f"  k={k} c={c}: closed {closed:.10e}   LU {lu:.10e}")

print("\nthe dense-regime target is the rank-one all-ones matrix:")
print(ones_matrix(3).matrix)
