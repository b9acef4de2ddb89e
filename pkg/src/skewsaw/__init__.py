"""Skew-symmetric LABS solver built on parallel contiguous self-avoiding walks."""

from .codec import DecodeError, decode, encode
from .core import (
    EnergyRecord,
    autocorrelation,
    autocorrelations,
    energy,
    expand_skew,
    half_dim,
    merit_factor,
    sidelobe_array,
)
from .neighborhood import EvalState, apply_flip, compute_deltas, flip, naive_oracle
from .published import BEST_KNOWN, KnownResult
from .runner import (
    RunConfig,
    RunRecord,
    SampleSet,
    solve,
    target_campaign,
    throughput_report,
)
from .saw import (
    WalkConfig,
    WalkResult,
    WalkTrace,
    exhaustive_optimum,
    key,
    run_walk,
    run_walk_traced,
)
from .stats import (
    PUBLISHED_TREND,
    ExpFit,
    TrendModel,
    anderson_darling_exponential,
    fit_exponential,
    fit_lambda_trend,
    nses_limit,
    optimality_probability,
)

__version__ = "0.1.0"
