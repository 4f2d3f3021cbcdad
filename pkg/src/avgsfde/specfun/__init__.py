"""Real-argument special-function kernel.

Gamma, Kummer M, Tricomi U (beta in {1, 2}), Bessel J/Y and modified Bessel
I/K of orders 0 and 1, plus the derivative identities the resolvent
decompositions rely on.
"""

from .accuracy import TARGET_REL_ERR, FnAccuracy
from .bessel import bessel_i, bessel_j, bessel_k, bessel_y
from .gammafn import digamma, gamma, gammaln_abs, rgamma
from .kummer import kummer_m, kummer_m_prime
from .tricomi import (
    tricomi_polynomial_coefficients,
    tricomi_u,
    tricomi_u_prime,
)

__all__ = [
    "TARGET_REL_ERR",
    "FnAccuracy",
    "bessel_i",
    "bessel_j",
    "bessel_k",
    "bessel_y",
    "digamma",
    "gamma",
    "gammaln_abs",
    "rgamma",
    "kummer_m",
    "kummer_m_prime",
    "tricomi_u",
    "tricomi_u_prime",
    "tricomi_polynomial_coefficients",
]
