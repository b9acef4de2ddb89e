"""Stopping-condition model for the stochastic solver.

Evaluations-to-target samples from independent runs are exponentially
distributed; this module fits the rate by maximum likelihood, scores the
fit with the Anderson-Darling statistic, models the rate across instance
sizes as lambda(L) = a * b^L (log-linear least squares), and turns the
model into evaluation budgets and optimality probabilities:

    budget per run  = ln(1 - P) / (-lambda(L) * N)   for N runs
    P(optimal)      = 1 - exp(-lambda(L) * total_evaluations)
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ExpFit",
    "TrendModel",
    "PUBLISHED_TREND",
    "fit_exponential",
    "anderson_darling_exponential",
    "fit_lambda_trend",
    "nses_limit",
    "optimality_probability",
]


@dataclass(frozen=True)
class ExpFit:
    """Maximum-likelihood exponential rate: lam = 1 / sample mean."""

    lam: float
    sample_count: int
    mean_nses: float


@dataclass(frozen=True)
class TrendModel:
    """Rate trend lambda(L) = a * b^L with its log-space R^2."""

    a: float
    b: float
    fit_r2: float
    source_L_range: tuple[int, int] | None = None

    def rate(self, length: int) -> float:
        return self.a * self.b**length

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "fit_r2": self.fit_r2,
            "source_L_range": list(self.source_L_range)
            if self.source_L_range
            else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "TrendModel":
        rng = data.get("source_L_range")
        return cls(
            a=float(data["a"]),
            b=float(data["b"]),
            fit_r2=float(data["fit_r2"]),
            source_L_range=(int(rng[0]), int(rng[1])) if rng else None,
        )


# Reference model published for calibration runs on L = 71..119.
PUBLISHED_TREND = TrendModel(a=0.006753, b=0.8617, fit_r2=0.9429, source_L_range=(71, 119))

_BELOW_ONE = math.nextafter(1.0, 0.0)


def _uncensored(samples) -> list[float]:
    if hasattr(samples, "uncensored"):
        return [float(x) for x in samples.uncensored]
    return [float(x) for x in samples]


def fit_exponential(samples) -> ExpFit:
    """MLE exponential fit of the uncensored samples: rate = 1 / mean.

    Accepts a SampleSet (censored entries are excluded) or a plain iterable
    of positive values.
    """
    xs = _uncensored(samples)
    if not xs:
        raise ValueError("no uncensored samples to fit")
    if min(xs) <= 0:
        raise ValueError("samples must be positive")
    mean = sum(xs) / len(xs)
    return ExpFit(lam=1.0 / mean, sample_count=len(xs), mean_nses=mean)


def anderson_darling_exponential(samples, fit: ExpFit) -> float:
    """Anderson-Darling A^2 of the samples against Exp(fit.lam).

    A^2 = -m - (1/m) * sum (2i - 1) * [ln F(x_(i)) + ln(1 - F(x_(m-i+1)))]
    with F(x) = 1 - exp(-lam x) and x_(i) ascending.  Returns the raw
    statistic; no small-sample correction or verdict is applied.
    """
    xs = np.sort(np.asarray(_uncensored(samples), dtype=np.float64))
    m = xs.size
    if m < 1:
        raise ValueError("no uncensored samples")
    if xs[0] <= 0:
        raise ValueError("samples must be positive")
    z = fit.lam * xs
    # ln F(x) = log1p(-exp(-z)); ln(1 - F(x)) = -z
    log_cdf = np.log1p(-np.exp(-z))
    log_sf = -z
    i = np.arange(1, m + 1)
    s = np.sum((2 * i - 1) * (log_cdf + log_sf[::-1]))
    return float(-m - s / m)


def fit_lambda_trend(points) -> TrendModel:
    """Fit lambda(L) = a * b^L by least squares on (L, ln lambda).

    Args:
        points: iterable of (L, lambda) pairs; at least two distinct L,
            all lambdas positive.
    """
    pts = [(int(length), float(lam)) for length, lam in points]
    if len(pts) < 2:
        raise ValueError("need at least two (L, lambda) points")
    if any(lam <= 0 for _, lam in pts):
        raise ValueError("lambdas must be positive")
    ls = np.array([p[0] for p in pts], dtype=np.float64)
    if np.unique(ls).size < 2:
        raise ValueError("need at least two distinct L values")
    logs = np.log([p[1] for p in pts])
    slope, intercept = np.polyfit(ls, logs, 1)
    residuals = logs - (slope * ls + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((logs - logs.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return TrendModel(
        a=float(np.exp(intercept)),
        b=float(np.exp(slope)),
        fit_r2=r2,
        source_L_range=(int(ls.min()), int(ls.max())),
    )


def nses_limit(length: int, p: float, runs: int, model: TrendModel) -> float:
    """Per-run evaluation budget to reach the optimum with probability p.

    Computes ln(1 - p) / (-lambda(L) * N) for N independent runs sharing
    the budget.
    """
    if not 0 < p < 1:
        raise ValueError("p must be in (0, 1)")
    if runs < 1:
        raise ValueError("runs must be >= 1")
    return math.log(1.0 - p) / (-model.rate(length) * runs)


def optimality_probability(length: int, total_nses: float, model: TrendModel) -> float:
    """Probability that the best sequence found is optimal, 1 - exp(-lambda * total)."""
    if total_nses < 0:
        raise ValueError("total_nses must be >= 0")
    value = -math.expm1(-model.rate(length) * total_nses)
    # a stochastic search never certifies optimality: stay strictly below 1
    # even where the double rounds up
    return min(value, _BELOW_ONE)
