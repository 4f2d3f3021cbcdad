"""avg-sfde: asymptotics, simulation and verification for the affine
stochastic functional differential equation with an average functional

    dX(t) = (a X(t) + b (1+t)^{-1} int_{-1}^t X(s) ds) dt + sigma dB(t).

Modules: core (parameters, regimes), specfun (special-function kernel),
resolvent (r(t,s) decompositions + ODE oracle), meanpath (E[X], growth
laws), autocov (memory diagnostics), montecarlo (path simulation), verify
(release gates), cli (command line).
"""

__version__ = "0.1.0"

from .autocov import (
    AcfEstimate,
    DecayFit,
    acf_estimate,
    covariance,
    ct_limit,
    decay_fit,
    limiting_acf,
    yule_walker_residual,
)
from .core import Params, Regime, RegimeLabel, ab_to_market, classify, market_to_ab
from .meanpath import (
    LimitStats,
    MeanSolution,
    growth_normalizer,
    limit_stats,
    mean_eval,
    mean_solution,
)
from .montecarlo import (
    Ensemble,
    Path,
    em_final_values,
    exact_marginal_draws,
    growth_ratio,
    lil_ensemble_stats,
    lil_statistic,
    running_average,
    simulate_em,
    simulate_em_ensemble,
    simulate_exact,
    xu_difference,
    xu_final_ensemble,
)
from .resolvent import (
    BasisPair,
    TildeSolution,
    basis,
    resolvent_eval,
    resolvent_ode_oracle,
    tilde_second_solution,
)

__all__ = [
    "__version__",
    "AcfEstimate", "DecayFit", "acf_estimate", "covariance", "ct_limit",
    "decay_fit", "limiting_acf", "yule_walker_residual",
    "Params", "Regime", "RegimeLabel", "ab_to_market", "classify", "market_to_ab",
    "LimitStats", "MeanSolution", "growth_normalizer", "limit_stats",
    "mean_eval", "mean_solution",
    "Ensemble", "Path", "em_final_values", "exact_marginal_draws",
    "growth_ratio", "lil_ensemble_stats", "lil_statistic", "running_average",
    "simulate_em", "simulate_em_ensemble", "simulate_exact", "xu_difference",
    "xu_final_ensemble",
    "BasisPair", "TildeSolution", "basis", "resolvent_eval",
    "resolvent_ode_oracle", "tilde_second_solution",
]
