"""Command-line front end.

Subcommands: classify, mean, acf, simulate, sweep, verify.  Data files are
comma-separated text with the header line `# avg-sfde v1 <command>`;
verification reports are nested key-value text.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 numeric/unsupported-regime error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .autocov import covariance, decay_fit, limiting_acf
from .config import (
    PARAM_KEYS,
    build_params,
    parse_delta_spec,
    parse_range_spec,
    read_config_file,
)
from .core import BOUNDARY_TOL, Params, RegimeLabel, ab_to_market, classify
from .errors import (
    DiscretizationError,
    DomainError,
    InvalidArgumentError,
    SignChangeError,
    StiffnessError,
    UnsupportedParametersError,
)
from .meanpath import growth_normalizer, mean_eval, mean_solution
from .montecarlo import simulate_em_ensemble
from .verify import SUITES, run_suites

_SCHEMA = "avg-sfde v1"

#: descriptive catalog of the asymptotic law per regime (used by `classify`)
_LAWS = {
    RegimeLabel.RECURRENT_OU: (
        "recurrent-OU fluctuations",
        "limsup X(t)/sqrt(2 log t) = sigma/sqrt(2|a|); X - OU -> 0; "
        "lag-decay of Cov is polynomial of exponent -(1+b/a)"),
    RegimeLabel.RECURRENT_SHIFTED: (
        "recurrent fluctuations about a random level",
        "X - OU -> L (Gaussian); running average -> L; "
        "limiting ACF gains an additive constant"),
    RegimeLabel.POLYNOMIAL_GROWTH: (
        "polynomial growth",
        "X(t)/t^{-(1+b/a)} -> C, a Gaussian random variable"),
    RegimeLabel.EXPONENTIAL_GROWTH: (
        "exponential growth",
        "X(t)/(e^{at} t^{b/a}) -> C, a Gaussian random variable"),
    RegimeLabel.SUBEXPONENTIAL_GROWTH: (
        "subexponential (super-polynomial) growth",
        "X(t)/(t^{-1/4} e^{2 sqrt(bt)}) -> C, a Gaussian random variable"),
    RegimeLabel.BROWNIAN_LIKE: (
        "Brownian-like recurrence",
        "Var X(t)/t -> sigma^2/3; limsup X/sqrt(2 t loglog t) = sigma/sqrt(3)"),
    RegimeLabel.DEGENERATE_OU: (
        "Ornstein-Uhlenbeck (b = 0)",
        "r(t,s) = e^{a(t-s)}; exponential ACF decay"),
    RegimeLabel.DEGENERATE_BM: (
        "scaled Brownian motion (a = b = 0)",
        "X = psi(0) + sigma B; classical LIL"),
    RegimeLabel.DEGENERATE_EXP: (
        "deterministic-rate exponential growth (b = 0)",
        "X(t)/e^{at} -> Gaussian limit; OU closed forms apply"),
}

_NORMALIZER_TEXT = {
    RegimeLabel.EXPONENTIAL_GROWTH: "e^{a t} t^{b/a}",
    RegimeLabel.POLYNOMIAL_GROWTH: "t^{-(1+b/a)}",
    RegimeLabel.SUBEXPONENTIAL_GROWTH: "t^{-1/4} e^{2 sqrt(b t)}",
    RegimeLabel.RECURRENT_OU: "sqrt(2 log t)",
    RegimeLabel.RECURRENT_SHIFTED: "sqrt(2 log t)",
    RegimeLabel.BROWNIAN_LIKE: "sqrt(2 t loglog t)",
    RegimeLabel.DEGENERATE_BM: "sqrt(2 t loglog t)",
}


def _writer(out_path):
    if out_path in (None, "-"):
        return sys.stdout, False
    return open(out_path, "w"), True


def _emit_csv(out_path, command, header, rows):
    fh, close = _writer(out_path)
    try:
        fh.write(f"# {_SCHEMA} {command}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(
                repr(float(v)) if isinstance(v, (float, np.floating)) else str(v)
                for v in row) + "\n")
    finally:
        if close:
            fh.close()


def read_csv(path):
    """Re-read a file written by this tool: returns (command, header, rows)."""
    with open(path) as fh:
        first = fh.readline().rstrip("\n")
        if not first.startswith(f"# {_SCHEMA} "):
            raise InvalidArgumentError(f"not an {_SCHEMA} file: {path}")
        command = first.split(" ", 3)[3]
        header = fh.readline().rstrip("\n").split(",")
        rows = []
        for line in fh:
            parts = line.rstrip("\n").split(",")
            rows.append([_maybe_float(v) for v in parts])
    return command, header, rows


def _maybe_float(v):
    try:
        return float(v)
    except ValueError:
        return v


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("AVG_SFDE_THREADS", "1")))
    except ValueError:
        return 1


def _params_from_args(args, file_values) -> Params:
    merged = dict(file_values.get("params", {}))
    for key in PARAM_KEYS:
        attr = key.replace("-", "_")
        val = getattr(args, attr, None)
        if val is not None:
            merged[key] = val
    return build_params(merged)


def _option(args, file_values, section, key, default=None, cast=float):
    attr = key.replace("-", "_")
    val = getattr(args, attr, None)
    if val is not None:
        return val
    sec = file_values.get(section, {})
    if key in sec:
        return cast(sec[key]) if cast is not None else sec[key]
    return default


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args, file_values) -> int:
    p = _params_from_args(args, file_values)
    regime = classify(p.a, p.b)
    alpha, beta = ab_to_market(p.a, p.b)
    law_name, law_text = _LAWS[regime.label]
    print(f"a = {p.a!r}, b = {p.b!r}")
    print(f"regime: {regime.name}")
    print(f"degenerate_integer: {regime.degenerate_integer}")
    print(f"asymptotic law: {law_name}")
    print(f"  {law_text}")
    norm = _NORMALIZER_TEXT.get(regime.label)
    print(f"growth normalizer: {norm if norm else 'none for this regime'}")
    print(f"market mapping inverse: alpha = {alpha!r}, beta = {beta!r}")
    return 0


def cmd_mean(args, file_values) -> int:
    p = _params_from_args(args, file_values)
    t_max = _option(args, file_values, "mean", "t-max", 20.0)
    n = int(_option(args, file_values, "mean", "n-points", 201))
    log_grid = bool(_option(args, file_values, "mean", "log-grid", False, cast=None))
    regime = classify(p.a, p.b)
    sol = mean_solution(p)
    if log_grid:
        ts = np.geomspace(max(1e-3, t_max * 1e-6), t_max, n)
    else:
        ts = np.linspace(0.0, t_max, n)
    xs = mean_eval(sol, ts)
    rows = []
    for t, x in zip(ts, xs):
        try:
            nv = float(growth_normalizer(regime, p.a, p.b, float(t))) if t > 0 else float("nan")
        except (UnsupportedParametersError, DomainError):
            nv = float("nan")
        ratio = x / nv if nv == nv and nv != 0.0 else float("nan")
        rows.append([float(t), float(x), nv, ratio])
    _emit_csv(args.out, "mean", ["t", "x", "normalizer", "ratio"], rows)
    return 0


def cmd_acf(args, file_values) -> int:
    p = _params_from_args(args, file_values)
    t = _option(args, file_values, "acf", "t", 1.0)
    spec = _option(args, file_values, "acf", "delta", "1:50:25", cast=None)
    tol = _option(args, file_values, "acf", "tol", 1e-9)
    deltas = parse_delta_spec(spec)
    exponent = 1.0 + p.b / p.a if p.a != 0.0 else float("nan")
    rows = []
    for d in deltas:
        c = covariance(p, float(t), float(d), quad_tol=tol)
        try:
            lim = limiting_acf(p, float(d))
        except UnsupportedParametersError:
            lim = float("nan")
        rows.append([float(d), c, c * float(d) ** exponent, lim])
    _emit_csv(args.out, "acf", ["delta", "cov", "cov_delta_pow", "limiting_acf"], rows)
    if deltas[0] > 0 and deltas[-1] / deltas[0] >= 10.0 and len(deltas) >= 8:
        try:
            fit = decay_fit(p, float(t), float(deltas[0]), float(deltas[-1]), len(deltas))
            print(f"decay fit: slope {fit.fitted_exponent:.4f} "
                  f"(theory {fit.theoretical_exponent:.4f}), "
                  f"plateau {fit.fitted_constant:.6g}, c_t {fit.c_t_quadrature:.6g}, "
                  f"fit rms {fit.fit_rms:.2e}", file=sys.stderr)
        except (UnsupportedParametersError, SignChangeError) as exc:
            print(f"decay fit unavailable: {exc}", file=sys.stderr)
    return 0


def cmd_simulate(args, file_values) -> int:
    p = _params_from_args(args, file_values)
    t_max = _option(args, file_values, "simulate", "t-max", 50.0)
    dt = _option(args, file_values, "simulate", "dt", 2.0 ** -7)
    n_paths = int(_option(args, file_values, "simulate", "n-paths", 16))
    seed = int(_option(args, file_values, "simulate", "seed", 0))
    ens = simulate_em_ensemble(p, t_max, dt, n_paths, seed)
    mat = ens.values_matrix()
    times = ens.paths[0].times
    keep = min(n_paths, 8)
    header = ["t", "mean", "std"] + [f"path{i}" for i in range(keep)]
    rows = []
    for j, t in enumerate(times):
        col = mat[:, j]
        rows.append([float(t), float(col.mean()), float(col.std(ddof=1)) if n_paths > 1 else 0.0]
                    + [float(mat[i, j]) for i in range(keep)])
    _emit_csv(args.out, "simulate", header, rows)
    print(f"paths: {n_paths}  scheme: euler  dt: {dt!r}  seed: {seed}", file=sys.stderr)
    print(f"final: mean {float(mat[:, -1].mean())!r}  "
          f"std {float(mat[:, -1].std(ddof=1)) if n_paths > 1 else 0.0!r}", file=sys.stderr)
    return 0


def cmd_sweep(args, file_values) -> int:
    a_spec = _option(args, file_values, "sweep", "a-range", "-2:2:0.1", cast=None)
    b_spec = _option(args, file_values, "sweep", "b-range", "-2:2:0.1", cast=None)
    avals = parse_range_spec(a_spec)
    bvals = parse_range_spec(b_spec)

    def cell(ab):
        a, b = ab
        r = classify(float(a), float(b))
        return [float(a), float(b), r.name, int(r.degenerate_integer)]

    cells = [(a, b) for a in avals for b in bvals]
    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(cell, cells))
    else:
        rows = [cell(c) for c in cells]
    _emit_csv(args.out, "sweep", ["a", "b", "regime", "degenerate"], rows)
    return 0


def cmd_verify(args, file_values) -> int:
    names = [args.suite] if args.suite else ["all"]
    results, ok = run_suites(names)
    fh, close = _writer(args.out)
    try:
        fh.write(f"# {_SCHEMA} verify\n")
        fh.write("report:\n")
        for r in results:
            fh.write(f"  {r.name}:\n")
            fh.write(f"    status: {'pass' if r.passed else 'FAIL'}\n")
            for k, v in r.detail.items():
                fh.write(f"    {k}: {v}\n")
        fh.write(f"overall: {'pass' if ok else 'FAIL'}\n")
    finally:
        if close:
            fh.close()
    for r in results:
        print(r.line(), file=sys.stderr)
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def _add_param_flags(sp):
    sp.add_argument("--a", type=float, default=None)
    sp.add_argument("--b", type=float, default=None)
    sp.add_argument("--alpha", type=float, default=None)
    sp.add_argument("--beta", type=float, default=None)
    sp.add_argument("--sigma", type=float, default=None)
    sp.add_argument("--psi0", type=float, default=None)
    sp.add_argument("--psi-int", dest="psi_int", type=float, default=None)
    sp.add_argument("--config", default=None, help="INI config file; flags override")
    sp.add_argument("--out", default=None, help="output file ('-' or omit for stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="avg-sfde",
        description="Asymptotics, simulation and verification for the affine "
                    "SFDE with an average functional")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="regime of (a, b) or (alpha, beta)")
    _add_param_flags(sp)

    sp = sub.add_parser("mean", help="mean path x(t) with growth normalizer")
    _add_param_flags(sp)
    sp.add_argument("--t-max", dest="t_max", type=float, default=None)
    sp.add_argument("--n-points", dest="n_points", type=int, default=None)
    sp.add_argument("--log-grid", dest="log_grid", action="store_const", const=True, default=None)

    sp = sub.add_parser("acf", help="lag autocovariance at fixed start time")
    _add_param_flags(sp)
    sp.add_argument("--t", type=float, default=None)
    sp.add_argument("--delta", default=None, help="lo:hi:N, lo:hi:logN, or list")
    sp.add_argument("--tol", type=float, default=None)

    sp = sub.add_parser("simulate", help="Euler-Maruyama ensemble")
    _add_param_flags(sp)
    sp.add_argument("--t-max", dest="t_max", type=float, default=None)
    sp.add_argument("--dt", type=float, default=None)
    sp.add_argument("--n-paths", dest="n_paths", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)

    sp = sub.add_parser("sweep", help="regime labels over an (a, b) grid")
    sp.add_argument("--a-range", dest="a_range", default=None, help="lo:hi:step")
    sp.add_argument("--b-range", dest="b_range", default=None, help="lo:hi:step")
    sp.add_argument("--config", default=None)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default=None, choices=sorted(SUITES) + ["all"])
    sp.add_argument("--config", default=None)
    sp.add_argument("--out", default=None)
    return ap


_COMMANDS = {
    "classify": cmd_classify,
    "mean": cmd_mean,
    "acf": cmd_acf,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def _merge_value_flags(argv):
    """Let range/grid flags take values beginning with '-' (e.g. -2:2:0.1)."""
    merged = []
    join_next = None
    for tok in argv:
        if join_next is not None:
            merged.append(f"{join_next}={tok}")
            join_next = None
            continue
        if tok in ("--a-range", "--b-range", "--delta"):
            join_next = tok
            continue
        merged.append(tok)
    if join_next is not None:
        merged.append(join_next)
    return merged


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(_merge_value_flags(sys.argv[1:] if argv is None else list(argv)))
    file_values = {}
    cfg = getattr(args, "config", None)
    if cfg:
        try:
            file_values = read_config_file(cfg)
        except OSError as exc:
            print(f"cannot read config: {exc}", file=sys.stderr)
            return 2
    try:
        return _COMMANDS[args.command](args, file_values)
    except InvalidArgumentError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (UnsupportedParametersError, DomainError, StiffnessError,
            DiscretizationError, SignChangeError, OverflowError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
