"""Accuracy metadata attached to series/asymptotic special-function values."""

from __future__ import annotations

from dataclasses import dataclass

#: default relative-error target of the kernel
TARGET_REL_ERR = 1e-10


@dataclass(frozen=True)
class FnAccuracy:
    """Target and achieved relative error estimate for one evaluation.

    The achieved estimate is a forward bound assembled from truncation sizes
    and cancellation (sum of |terms| against |result|); it is an estimate,
    not a guarantee.
    """

    target_rel_err: float
    achieved_rel_err_estimate: float

    @property
    def met(self) -> bool:
        return self.achieved_rel_err_estimate <= self.target_rel_err
