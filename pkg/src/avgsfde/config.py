"""Run configuration: model parameters plus per-command options.

Config files are flat INI-style key-value text with one section per
subcommand plus a [params] section; command-line flags override file values.

    [params]
    a = -1.0
    b = 0.5
    sigma = 1.0
    psi0 = 1.0
    psi-int = 0.0

    [acf]
    t = 1.0
    delta = 50:500:log16
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field

import numpy as np

from .core import Params, market_to_ab
from .errors import InvalidArgumentError

PARAM_KEYS = ("a", "b", "alpha", "beta", "sigma", "psi0", "psi-int")


@dataclass
class RunConfig:
    params: Params
    options: dict = field(default_factory=dict)


def read_config_file(path: str) -> dict[str, dict[str, str]]:
    cp = configparser.ConfigParser()
    with open(path) as fh:
        cp.read_file(fh)
    return {sec: dict(cp.items(sec)) for sec in cp.sections()}


def build_params(values: dict) -> Params:
    """Build Params from a flat mapping holding either (a, b) or (alpha, beta)."""
    have_ab = values.get("a") is not None or values.get("b") is not None
    have_mkt = values.get("alpha") is not None or values.get("beta") is not None
    if have_ab and have_mkt:
        raise InvalidArgumentError("give either (a, b) or (alpha, beta), not both")
    if have_mkt:
        alpha = float(values.get("alpha", 0.0))
        beta = float(values.get("beta", 0.0))
        a, b = market_to_ab(alpha, beta)
    elif have_ab:
        a = float(values.get("a", 0.0))
        b = float(values.get("b", 0.0))
    else:
        raise InvalidArgumentError("model parameters required: (a, b) or (alpha, beta)")
    return Params(
        a=a, b=b,
        sigma=float(values.get("sigma", 1.0)),
        psi0=float(values.get("psi0", 1.0)),
        psi_int=float(values.get("psi-int", values.get("psi_int", 0.0))),
    )


def parse_delta_spec(spec: str) -> np.ndarray:
    """Lag grids: 'lo:hi:N' (linear), 'lo:hi:logN' (geometric), or 'v1,v2,...'."""
    if ":" in spec:
        lo_s, hi_s, n_s = spec.split(":")
        lo, hi = float(lo_s), float(hi_s)
        if n_s.startswith("log"):
            n = int(n_s[3:])
            if lo <= 0:
                raise InvalidArgumentError("log grid needs lo > 0")
            return np.geomspace(lo, hi, n)
        return np.linspace(lo, hi, int(n_s))
    vals = np.array([float(v) for v in spec.split(",")])
    if np.any(np.diff(vals) <= 0):
        raise InvalidArgumentError("delta list must be increasing")
    return vals


def parse_range_spec(spec: str) -> np.ndarray:
    """Sweep ranges 'lo:hi:step' inclusive of both ends (within rounding)."""
    lo_s, hi_s, step_s = spec.split(":")
    lo, hi, step = float(lo_s), float(hi_s), float(step_s)
    if step <= 0 or hi < lo:
        raise InvalidArgumentError(f"bad range {spec!r}")
    n = int(math.floor((hi - lo) / step + 0.5)) + 1
    return lo + step * np.arange(n)
