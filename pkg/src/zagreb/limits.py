"""Asymptotic regimes of p(n) laws and the matching normalizations.

The edge-probability laws are restricted to three monomial forms — a
constant, a*n^-b, and 1 - a*n^-b — which cover every limit regime of the
index family while keeping all the deciding limits (n^2 p, np, n^2 (1-p),
n^2 (1-p)^3) computable by comparing exponents.  Classification follows a
fixed priority: degenerate and Poisson windows first, then the Gaussian
regimes, so boundary laws such as p = c*n^-2 land on the Poisson side.

Gaussian regimes come with explicit centerings and scales.  Centering is
always by the exact expectation where the theory requires it: replacing it
with its leading term shifts the statistic by the order of its standard
deviation, which silently breaks the limit statement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import MAX_ORDER, stirling2
from .graph import GnpParams
from .moments import _powi, asymp_mean_zagreb, asymp_var_zagreb, exact_mean_zagreb

FORM_CONST = "const"
FORM_POWER_LOW = "power-low"
FORM_POWER_HIGH = "power-high"

REGIME_DEGENERATE_ZERO = "DegenerateZero"
REGIME_POISSON = "PoissonHalfLambda"
REGIME_DEGENERATE_COMPLETE = "DegenerateComplete"
REGIME_POISSON_COMPLEMENT = "PoissonComplement"
REGIME_CLT_SPARSE = "CLT-Sparse"
REGIME_CLT_CRITICAL = "CLT-Critical"
REGIME_CLT_DENSE = "CLT-Dense"
REGIME_CLT_SINGLE = "CLT-Single"

CLT_REGIMES = (REGIME_CLT_SPARSE, REGIME_CLT_CRITICAL, REGIME_CLT_DENSE, REGIME_CLT_SINGLE)


class PLawParseError(ValueError):
    """Rejected p(n)-law text; carries the offending position."""

    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        super().__init__(f"at position {pos} in {text!r}: expected {expected}")


def _fmt_num(x: float) -> str:
    if x == int(x):
        return str(int(x))
    return np.format_float_positional(x, trim="-")


@dataclass(frozen=True)
class PLaw:
    """An edge-probability law p(n): const a, a*n^-b, or 1 - a*n^-b.

    ``n_valid`` is the smallest n from which p(n) lies strictly inside
    (0, 1) for every larger n.
    """

    form: str
    a: float
    b: float = 0.0
    n_valid: int = 1

    def __post_init__(self) -> None:
        if self.form == FORM_CONST:
            if not 0.0 < self.a < 1.0:
                raise ValueError(f"constant law needs 0 < a < 1, got a={self.a}")
        elif self.form in (FORM_POWER_LOW, FORM_POWER_HIGH):
            if self.a <= 0:
                raise ValueError(f"power law needs a > 0, got a={self.a}")
            if self.b <= 0:
                raise ValueError(f"power law needs b > 0, got b={self.b}")
        else:
            raise ValueError(f"unknown law form {self.form!r}")
        object.__setattr__(self, "n_valid", self._compute_n_valid())

    def _compute_n_valid(self) -> int:
        if self.form == FORM_CONST:
            return 1
        n0 = max(1, math.ceil(self.a ** (1.0 / self.b)))
        while not 0.0 < self._raw_eval(n0) < 1.0:
            n0 += 1
        return n0

    def _raw_eval(self, n: int) -> float:
        if self.form == FORM_CONST:
            return self.a
        tail = self.a * float(n) ** (-self.b)
        return tail if self.form == FORM_POWER_LOW else 1.0 - tail

    def evaluate(self, n: int) -> float:
        """p(n); only guaranteed inside (0, 1) for n >= n_valid."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        return self._raw_eval(n)

    def __str__(self) -> str:
        if self.form == FORM_CONST:
            return _fmt_num(self.a)
        body = f"{_fmt_num(self.a)}*n^-{_fmt_num(self.b)}"
        return body if self.form == FORM_POWER_LOW else f"1-{body}"


def _scan_number(text: str, pos: int) -> tuple[float, int]:
    start = pos
    while pos < len(text) and (text[pos].isdigit() or text[pos] == "."):
        pos += 1
    token = text[start:pos]
    if not token or token == "." or token.count(".") > 1:
        raise PLawParseError(text, start, "a positive decimal number")
    return float(token), pos


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _expect(text: str, pos: int, literal: str) -> int:
    pos = _skip_ws(text, pos)
    if not text.startswith(literal, pos):
        raise PLawParseError(text, pos, f"{literal!r}")
    return pos + len(literal)


def parse_plaw(text: str) -> PLaw:
    """Parse a p(n)-law string: NUM | NUM*n^-NUM | 1-NUM*n^-NUM.

    Whitespace around tokens is ignored.  Parse failures raise
    :class:`PLawParseError` with the position; structurally valid laws
    whose numbers violate the form constraints raise ``ValueError``.
    """
    pos = _skip_ws(text, 0)
    first, pos = _scan_number(text, pos)
    pos = _skip_ws(text, pos)
    if pos == len(text):
        return PLaw(FORM_CONST, first)
    if text[pos] == "-":
        if first != 1.0:
            raise PLawParseError(text, pos, "'*n^-' or end of input ('1-' starts the complement form)")
        pos += 1
        a, pos = _scan_number(text, _skip_ws(text, pos))
        pos = _expect(text, pos, "*")
        pos = _expect(text, pos, "n")
        pos = _expect(text, pos, "^")
        pos = _expect(text, pos, "-")
        b, pos = _scan_number(text, _skip_ws(text, pos))
        pos = _skip_ws(text, pos)
        if pos != len(text):
            raise PLawParseError(text, pos, "end of input")
        return PLaw(FORM_POWER_HIGH, a, b)
    pos = _expect(text, pos, "*")
    pos = _expect(text, pos, "n")
    pos = _expect(text, pos, "^")
    pos = _expect(text, pos, "-")
    b, pos = _scan_number(text, _skip_ws(text, pos))
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise PLawParseError(text, pos, "end of input")
    return PLaw(FORM_POWER_LOW, first, b)


# ---------------------------------------------------------------------------
# Regime classification
# ---------------------------------------------------------------------------

_ZERO = "zero"
_FINITE = "finite"
_INF = "inf"


def _monomial_limit(coeff: float, expo: float) -> tuple[str, float]:
    if expo > 0:
        return (_INF, math.inf)
    if expo == 0:
        return (_FINITE, coeff)
    return (_ZERO, 0.0)


def _law_limits(law: PLaw) -> dict[str, tuple[str, float]]:
    """Limits of np, n^2 p, n^2 (1-p), n^2 (1-p)^3 for a monomial law."""
    if law.form == FORM_CONST:
        return {
            "np": (_INF, math.inf),
            "n2p": (_INF, math.inf),
            "n2q": (_INF, math.inf),
            "n2q3": (_INF, math.inf),
        }
    if law.form == FORM_POWER_LOW:
        return {
            "np": _monomial_limit(law.a, 1.0 - law.b),
            "n2p": _monomial_limit(law.a, 2.0 - law.b),
            "n2q": (_INF, math.inf),
            "n2q3": (_INF, math.inf),
        }
    return {
        "np": (_INF, math.inf),
        "n2p": (_INF, math.inf),
        "n2q": _monomial_limit(law.a, 2.0 - law.b),
        "n2q3": _monomial_limit(law.a**3, 2.0 - 3.0 * law.b),
    }


@dataclass(frozen=True)
class RegimeReport:
    """Which limit law governs the index vector under a given p(n) law."""

    regime: str
    k: int
    parameter: float | None
    normalization: str
    limit_law: str
    joint_normality: str  # "normal", "open", or "none"
    single_order_normal: bool  # whether n^2 p (1-p) -> infinity
    wlln: tuple[str, ...]
    law: PLaw

    def to_dict(self) -> dict:
        return {
            "regime": self.regime,
            "k": self.k,
            "parameter": self.parameter,
            "normalization": self.normalization,
            "limit_law": self.limit_law,
            "joint_normality": self.joint_normality,
            "single_order_normal": self.single_order_normal,
            "wlln": list(self.wlln),
            "law": str(self.law),
        }


def classify_regime(law: PLaw, k: int) -> RegimeReport:
    """Classify a p(n) law into its limit regime for orders 1..k.

    Priority: vanishing and Poisson windows on either boundary first, then
    the Gaussian regimes ordered sparse, critical, dense, and finally the
    ultra-dense window where each order is normal on its own but the joint
    law is an open question.
    """
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {k}")
    lims = _law_limits(law)
    np_kind, np_val = lims["np"]
    n2p_kind, n2p_val = lims["n2p"]
    n2q_kind, n2q_val = lims["n2q"]
    n2q3_kind, _ = lims["n2q3"]

    single_normal = n2p_kind == _INF and n2q_kind == _INF
    wlln = tuple(
        label
        for cond, label in (
            (n2p_kind == _INF, "WLLN-Ratio"),
            (n2q_kind == _INF, "WLLN-ComplementRatio"),
        )
        if cond
    )

    def report(regime, parameter, normalization, limit_law, joint):
        return RegimeReport(
            regime, k, parameter, normalization, limit_law, joint, single_normal, wlln, law
        )

    if n2p_kind == _ZERO:
        return report(
            REGIME_DEGENERATE_ZERO, None,
            "none: all indices converge to 0 in probability",
            "DegenerateZero", "none",
        )
    if n2p_kind == _FINITE:
        lam = n2p_val
        return report(
            REGIME_POISSON, lam,
            f"Z(k)/2 converges in distribution to Poisson({_fmt_num(lam)}/2) for every order k",
            "PoissonHalfLambda", "none",
        )
    if n2q_kind == _ZERO:
        return report(
            REGIME_DEGENERATE_COMPLETE, None,
            "none: the graph is complete w.h.p., indices equal n(n-1)^k",
            "DegenerateComplete", "none",
        )
    if n2q_kind == _FINITE:
        lam = n2q_val
        return report(
            REGIME_POISSON_COMPLEMENT, lam,
            f"(n(n-1)^k - Z(k)) / (2 k n^(k-1)) converges to Poisson({_fmt_num(lam)}/2)",
            "PoissonComplement", "none",
        )
    if np_kind == _ZERO:  # here n^2 p -> inf already holds
        return report(
            REGIME_CLT_SPARSE, None,
            "center each order at its leading-term mean, scale all by sqrt(2 n^2 p); "
            "target is the rank-one all-ones covariance",
            "CLT-Sparse(edge-dominant)", "normal",
        )
    if np_kind == _FINITE:
        c = np_val
        return report(
            REGIME_CLT_CRITICAL, c,
            "center each order at its exact mean, scale all by sqrt(n); "
            f"target is the critical index covariance at c={_fmt_num(c)}",
            "CLT-Critical(index-cov)", "normal",
        )
    if n2q3_kind == _INF:
        return report(
            REGIME_CLT_DENSE, None,
            "center each order m at its exact mean, scale by m (np)^m sqrt(2(1-p)/p); "
            "target is the rank-one all-ones covariance",
            "CLT-Dense(rank-one)", "normal",
        )
    return report(
        REGIME_CLT_SINGLE, None,
        "center each order at its exact mean, scale by the square root of its "
        "leading-order variance; each order is normal on its own",
        "CLT-Single(per-order)", "open",
    )


# ---------------------------------------------------------------------------
# Limiting covariance models
# ---------------------------------------------------------------------------

KIND_STAR_CRITICAL = "star-critical"
KIND_ZAGREB_CRITICAL = "zagreb-critical"
KIND_ONES = "ones"


@dataclass(frozen=True)
class CovModel:
    """A k x k limiting covariance matrix with its provenance."""

    kind: str
    k: int
    c: float | None
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.float64)
        if m.shape != (self.k, self.k):
            raise ValueError(f"matrix shape {m.shape} does not match k={self.k}")
        if not np.array_equal(m, m.T):
            raise ValueError("limiting covariance must be symmetric")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def star_cov_limit(c: float, k: int) -> CovModel:
    """Limiting covariance of the scaled star-count vector when np -> c.

    Entry (m, l) is c^{m+l-1}/((m-1)!(l-1)!) plus the shared-leaf sum
    over s of c^{m+l-s}/(s!(m-s)!(l-s)!).
    """
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {k}")
    out = np.empty((k, k))
    for m in range(1, k + 1):
        for l in range(m, k + 1):
            v = _powi(c, m + l - 1) / float(math.factorial(m - 1) * math.factorial(l - 1))
            for s in range(1, min(m, l) + 1):
                denom = math.factorial(s) * math.factorial(m - s) * math.factorial(l - s)
                v += _powi(c, m + l - s) / float(denom)
            out[m - 1, l - 1] = out[l - 1, m - 1] = v
    return CovModel(KIND_STAR_CRITICAL, k, c, out)


def star_cov_limit_det(c: float, k: int) -> float:
    """Closed-form determinant of :func:`star_cov_limit`: 2 c^{k(k+1)/2} / prod m!."""
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {k}")
    det = 2.0 * _powi(c, k * (k + 1) // 2)
    for m in range(1, k + 1):
        det /= float(math.factorial(m))
    return det


def zagreb_cov_limit(c: float, k: int) -> CovModel:
    """Limiting covariance of the scaled index vector when np -> c.

    The bilinear image of :func:`star_cov_limit` under the star-to-index
    transform, written directly as a double sum over partition numbers.
    """
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {k}")
    out = np.empty((k, k))
    for m in range(1, k + 1):
        for l in range(m, k + 1):
            total = 0.0
            for i in range(1, m + 1):
                si = stirling2(m, i)
                for j in range(1, l + 1):
                    sj = stirling2(l, j)
                    v = i * j * _powi(c, i + j - 1)
                    fij = math.factorial(i) * math.factorial(j)
                    for s in range(1, min(i, j) + 1):
                        denom = math.factorial(s) * math.factorial(i - s) * math.factorial(j - s)
                        v += (fij // denom) * _powi(c, i + j - s)
                    total += si * sj * v
            out[m - 1, l - 1] = out[l - 1, m - 1] = total
    return CovModel(KIND_ZAGREB_CRITICAL, k, c, out)


def ones_matrix(k: int) -> CovModel:
    """The rank-one all-ones covariance target."""
    if not 1 <= k <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}], got {k}")
    return CovModel(KIND_ONES, k, None, np.ones((k, k)))


# ---------------------------------------------------------------------------
# Normalizations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Normalizer:
    """Affine standardization (x - center) / scale for one index order."""

    order: int
    center: float
    scale: float
    n: int

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError(f"scale must be positive, got {self.scale}")


def standardizer(
    report: RegimeReport, params: GnpParams, k: int
) -> tuple[list[Normalizer], CovModel]:
    """Centering and scale per order 1..k plus the covariance target.

    Only meaningful in the Gaussian regimes; Poisson and degenerate
    regimes have no affine normalization to a normal limit.
    """
    if report.regime not in CLT_REGIMES:
        raise ValueError(f"regime {report.regime} has no Gaussian normalization")
    n, p = params.n, params.p
    norms: list[Normalizer] = []
    if report.regime == REGIME_CLT_CRITICAL:
        scale = math.sqrt(n)
        for m in range(1, k + 1):
            norms.append(Normalizer(m, exact_mean_zagreb(params, m), scale, n))
        return norms, zagreb_cov_limit(report.parameter, k)
    if report.regime == REGIME_CLT_DENSE:
        factor = math.sqrt(2.0 * (1.0 - p) / p)
        for m in range(1, k + 1):
            scale = m * _powi(n * p, m) * factor
            norms.append(Normalizer(m, exact_mean_zagreb(params, m), scale, n))
        return norms, ones_matrix(k)
    if report.regime == REGIME_CLT_SPARSE:
        scale = math.sqrt(2.0 * n * n * p)
        for m in range(1, k + 1):
            norms.append(Normalizer(m, asymp_mean_zagreb(params, m), scale, n))
        return norms, ones_matrix(k)
    # Ultra-dense single-order window: each order standardized by the
    # square root of its own leading-order variance; no joint target.
    for m in range(1, k + 1):
        norms.append(
            Normalizer(m, exact_mean_zagreb(params, m), math.sqrt(asymp_var_zagreb(params, m)), n)
        )
    return norms, ones_matrix(1)
