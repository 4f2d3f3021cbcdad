"""Path simulation and pathwise estimators.

Two schemes:

* Euler-Maruyama on a uniform grid, with the average functional carried as a
  trapezoid-updated running integral (state (X, A), A(0) = int_{-1}^0 psi).
* An exact-in-distribution Gaussian scheme from the variation-of-parameters
  representation X(t) = x(t) + sigma int_0^t r(t,s) dB(s): the Ito integral
  is discretized with midpoint resolvent weights on a partition refined until
  the discrete variance matches the quadrature variance per output time.

Noise: one Philox (counter-based) stream per path, spawned from
(master seed, path index); normal variates by inverse CDF applied to 53-bit
uniforms shifted into (0, 1).  Identical (params, grid, seed) reproduce
bit-identical paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtri

from .core import Params, Regime, RegimeLabel, classify
from .errors import (
    DiscretizationError,
    DomainError,
    InvalidArgumentError,
    UnsupportedParametersError,
)
from .meanpath import growth_normalizer, mean_eval, mean_solution
from .quadrature import quad_adaptive
from .resolvent import resolvent_eval

_E_E = math.exp(math.e)
_INV53 = 2.0 ** -53
_BLOCK_STEPS = 1024


@dataclass
class Path:
    times: np.ndarray
    values: np.ndarray
    scheme: str              # "euler" or "exact"
    seed: int
    dt: float | None         # step for euler; None for exact (grid in times)
    params: Params | None = None

    def __post_init__(self):
        if np.any(np.diff(self.times) <= 0.0):
            raise InvalidArgumentError("path times must be strictly increasing")


@dataclass
class Ensemble:
    paths: list[Path] = field(default_factory=list)
    params: Params | None = None

    def values_matrix(self) -> np.ndarray:
        return np.stack([p.values for p in self.paths])


def path_stream(master_seed: int, path_index: int) -> np.random.Generator:
    """Independent counter-based stream for one path."""
    ss = np.random.SeedSequence(master_seed, spawn_key=(path_index,))
    return np.random.Generator(np.random.Philox(ss))


def normals(rng: np.random.Generator, n: int) -> np.ndarray:
    """Standard normals by inverse CDF on (0,1)-interior 53-bit uniforms."""
    u = (rng.integers(0, 1 << 53, size=n, dtype=np.uint64).astype(np.float64) + 0.5) * _INV53
    return ndtri(u)


# ---------------------------------------------------------------------------
# Euler-Maruyama engine
# ---------------------------------------------------------------------------

def _em_engine(params: Params, t_max: float, dt: float, n_paths: int, seed: int,
               *, drift_only: bool = False, pair_ou: bool = False,
               observer=None, record_steps=None, negate_noise: bool = False):
    """Vectorized EM over n_paths.  Returns (X_final, U_final or None,
    recorded) where recorded maps step index -> value matrix snapshot.

    observer(step_index, t_next, X, U) is called after every step.
    """
    if dt <= 0 or t_max <= 0:
        raise InvalidArgumentError("t_max and dt must be positive")
    if dt > t_max / 10.0:
        raise InvalidArgumentError("dt must be at most t_max/10")
    n_steps = int(round(t_max / dt))
    if abs(n_steps * dt - t_max) > 1e-9 * t_max:
        raise InvalidArgumentError("t_max must be an integer multiple of dt")

    a, b, sigma = params.a, params.b, params.sigma
    X = np.full(n_paths, float(params.psi0))
    A = np.full(n_paths, float(params.psi_int))
    U = np.zeros(n_paths) if pair_ou else None
    gens = [path_stream(seed, i) for i in range(n_paths)]
    sq = math.sqrt(dt)
    record = {} if record_steps else None
    want = set(record_steps) if record_steps else ()
    if record and 0 in want:
        record[0] = (X.copy(), U.copy() if pair_ou else None)

    step = 0
    while step < n_steps:
        block = min(_BLOCK_STEPS, n_steps - step)
        if drift_only:
            z = None
        else:
            z = np.empty((n_paths, block))
            for i, g in enumerate(gens):
                z[i] = normals(g, block)
            if negate_noise:
                z = -z
        for j in range(block):
            t = step * dt
            shock = 0.0 if drift_only else sigma * sq * z[:, j]
            Xn = X + (a * X + b * A / (1.0 + t)) * dt + shock
            A += dt * 0.5 * (X + Xn)
            X = Xn
            if pair_ou:
                U = U + a * U * dt + shock
            step += 1
            if observer is not None:
                observer(step, step * dt, X, U)
            if record is not None and step in want:
                record[step] = (X.copy(), U.copy() if pair_ou else None)
    return X, U, record


def simulate_em(params: Params, t_max: float, dt: float, seed: int, *,
                drift_only: bool = False, record_stride: int = 1) -> Path:
    """One Euler-Maruyama path on the uniform grid k dt, deterministic in seed."""
    n_steps = int(round(t_max / dt))
    stride = max(1, int(record_stride))
    keep = list(range(0, n_steps + 1, stride))
    if keep[-1] != n_steps:
        keep.append(n_steps)
    values = np.empty(len(keep))
    idx = {k: i for i, k in enumerate(keep)}
    values[0] = params.psi0

    def obs(step, t, X, U):
        i = idx.get(step)
        if i is not None:
            values[i] = X[0]

    _em_engine(params, t_max, dt, 1, seed, drift_only=drift_only, observer=obs)
    times = np.array(keep, dtype=float) * dt
    return Path(times, values, "euler", seed, dt, params)


def em_final_values(params: Params, t_max: float, dt: float, n_paths: int,
                    seed: int, *, drift_only: bool = False) -> np.ndarray:
    """X(t_max) across an ensemble (vectorized; one stream per path)."""
    X, _, _ = _em_engine(params, t_max, dt, n_paths, seed, drift_only=drift_only)
    return X


def simulate_em_ensemble(params: Params, t_max: float, dt: float, n_paths: int,
                         seed: int, *, record_stride: int | None = None) -> Ensemble:
    """Ensemble of EM paths sharing the time grid, subsampled by record_stride."""
    n_steps = int(round(t_max / dt))
    stride = record_stride or max(1, n_steps // 256)
    keep = sorted(set(list(range(0, n_steps + 1, stride)) + [n_steps]))
    snaps = np.empty((n_paths, len(keep)))
    idx = {k: i for i, k in enumerate(keep)}
    snaps[:, 0] = params.psi0

    def obs(step, t, X, U):
        i = idx.get(step)
        if i is not None:
            snaps[:, i] = X

    _em_engine(params, t_max, dt, n_paths, seed, observer=obs)
    times = np.array(keep, dtype=float) * dt
    paths = [Path(times, snaps[i], "euler", seed, dt, params) for i in range(n_paths)]
    return Ensemble(paths, params)


# ---------------------------------------------------------------------------
# exact Gaussian scheme
# ---------------------------------------------------------------------------

def _variance_quadrature(params: Params, t: float, tol: float = 1e-10) -> float:
    """int_0^t r(t,s)^2 ds (noise variance at t divided by sigma^2)."""
    if t <= 0.0:
        return 0.0

    def f(ss):
        rr = resolvent_eval(params.a, params.b, t, ss)
        return rr * rr

    return quad_adaptive(f, 0.0, t, abs_tol=tol, rel_tol=tol).value


def exact_partition(params: Params, times, *, rel_var_tol: float = 0.005,
                    max_depth: int = 12) -> np.ndarray:
    """Refine the increment partition until the midpoint-rule variance matches
    the quadrature variance within rel_var_tol at every output time."""
    times = np.asarray(times, dtype=float)
    if np.any(times < 0.0) or np.any(np.diff(times) <= 0.0):
        raise DomainError("times must be nonnegative and increasing")
    knots = np.unique(np.concatenate([[0.0], times]))
    targets = {float(t): _variance_quadrature(params, float(t)) for t in times if t > 0.0}
    for _ in range(max_depth + 1):
        mids = 0.5 * (knots[1:] + knots[:-1])
        widths = np.diff(knots)
        ok = True
        for t, v_exact in targets.items():
            sel = mids < t
            r = resolvent_eval(params.a, params.b, t, mids[sel])
            v_disc = float(np.sum(r * r * widths[sel]))
            if abs(v_disc - v_exact) > rel_var_tol * v_exact:
                ok = False
                break
        if ok:
            return knots
        knots = np.sort(np.concatenate([knots, mids]))
    raise DiscretizationError(
        f"variance match not reached within depth {max_depth}")


def exact_marginal_draws(params: Params, times, seed: int, n_draws: int,
                         *, partition: np.ndarray | None = None) -> np.ndarray:
    """(n_draws, n_times) exact-Gaussian samples of X at the given times.

    Draw i uses the path-i noise stream, so one draw reproduces
    simulate_exact with the same seed."""
    times = np.asarray(times, dtype=float)
    knots = exact_partition(params, times) if partition is None else partition
    mids = 0.5 * (knots[1:] + knots[:-1])
    widths = np.diff(knots)
    sol = mean_solution(params)
    xbar = mean_eval(sol, times)
    weight = np.empty((times.size, mids.size))
    for k, t in enumerate(times):
        live = mids < t
        weight[k] = np.where(live, resolvent_eval(params.a, params.b, float(t), mids), 0.0)
    out = np.empty((n_draws, times.size))
    sqw = np.sqrt(widths)
    for i in range(n_draws):
        db = normals(path_stream(seed, i), mids.size) * sqw
        out[i] = xbar + params.sigma * weight @ db
    return out


def simulate_exact(params: Params, times, seed: int) -> Path:
    """One exact-in-distribution Gaussian path sampled at `times`."""
    times = np.asarray(times, dtype=float)
    vals = exact_marginal_draws(params, times, seed, 1)[0]
    if times[0] == 0.0:
        vals[0] = params.psi0
    return Path(times, vals, "exact", seed, None, params)


# ---------------------------------------------------------------------------
# pathwise estimators
# ---------------------------------------------------------------------------

def growth_ratio(path: Path, regime: Regime):
    """X(t)/normalizer(t) on the portion of the grid where the normalizer is
    defined.  Returns (times, ratios)."""
    if regime.label not in (RegimeLabel.EXPONENTIAL_GROWTH,
                            RegimeLabel.POLYNOMIAL_GROWTH,
                            RegimeLabel.SUBEXPONENTIAL_GROWTH):
        raise UnsupportedParametersError("growth_ratio requires a growth regime")
    p = path.params
    sel = path.times >= 1.0
    t = path.times[sel]
    norm = growth_normalizer(regime, p.a, p.b, t)
    return t, path.values[sel] / norm


def lil_statistic(path: Path, mode: str):
    """Running sup/inf of the normalized fluctuation statistic over
    t in [10 e^e, t_max]."""
    if mode == "brownian_like":
        start = 10.0 * _E_E

        def norm(t):
            return np.sqrt(2.0 * t * np.log(np.log(t)))
    elif mode == "recurrent":
        start = 10.0 * _E_E

        def norm(t):
            return np.sqrt(2.0 * np.log(t))
    else:
        raise InvalidArgumentError("mode must be 'brownian_like' or 'recurrent'")
    if path.times[-1] < 1e3:
        raise DomainError("lil_statistic requires t_max >= 1e3")
    sel = path.times >= start
    stat = path.values[sel] / norm(path.times[sel])
    return float(np.max(stat)), float(np.min(stat))


def lil_ensemble_stats(params: Params, t_max: float, dt: float, n_paths: int,
                       seed: int, mode: str, *, negate_noise: bool = False):
    """(sups, infs) of the running LIL statistic per path, computed online."""
    if mode not in ("brownian_like", "recurrent"):
        raise InvalidArgumentError("mode must be 'brownian_like' or 'recurrent'")
    if t_max < 1e3:
        raise DomainError("requires t_max >= 1e3")
    start = 10.0 * _E_E
    sups = np.full(n_paths, -np.inf)
    infs = np.full(n_paths, np.inf)

    def obs(step, t, X, U):
        if t < start:
            return
        if mode == "brownian_like":
            denom = math.sqrt(2.0 * t * math.log(math.log(t)))
        else:
            denom = math.sqrt(2.0 * math.log(t))
        stat = X / denom
        np.maximum(sups, stat, out=sups)
        np.minimum(infs, stat, out=infs)

    _em_engine(params, t_max, dt, n_paths, seed, observer=obs,
               negate_noise=negate_noise)
    return sups, infs


def running_average(path: Path) -> np.ndarray:
    """(1+t)^{-1} (int_{-1}^0 psi + int_0^t X), trapezoidal on the path grid."""
    p = path.params
    integ = np.concatenate([[0.0], np.cumsum(
        0.5 * (path.values[1:] + path.values[:-1]) * np.diff(path.times))])
    return (p.psi_int + integ) / (1.0 + path.times)


def xu_difference(params: Params, t_max: float, dt: float, seed: int, *,
                  record_stride: int = 1):
    """X - U along one path, both driven by the same Brownian increments;
    U is the zero-start OU companion.  Returns (times, differences)."""
    regime = classify(params.a, params.b)
    if not (params.a < 0.0 and params.a + params.b <= 1e-12):
        raise UnsupportedParametersError("xu_difference requires a < 0, a + b <= 0")
    n_steps = int(round(t_max / dt))
    stride = max(1, int(record_stride))
    keep = sorted(set(list(range(0, n_steps + 1, stride)) + [n_steps]))
    idx = {k: i for i, k in enumerate(keep)}
    diffs = np.empty(len(keep))
    diffs[0] = params.psi0

    def obs(step, t, X, U):
        i = idx.get(step)
        if i is not None:
            diffs[i] = X[0] - U[0]

    _em_engine(params, t_max, dt, 1, seed, pair_ou=True, observer=obs)
    return np.array(keep, dtype=float) * dt, diffs


def xu_final_ensemble(params: Params, t_max: float, dt: float, n_paths: int,
                      seed: int) -> np.ndarray:
    """X(t_max) - U(t_max) across an ensemble with shared noise per path."""
    if not (params.a < 0.0 and params.a + params.b <= 1e-12):
        raise UnsupportedParametersError("requires a < 0, a + b <= 0")
    X, U, _ = _em_engine(params, t_max, dt, n_paths, seed, pair_ou=True)
    return X - U
