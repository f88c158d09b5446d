"""Amplitude-damping codes and their syndrome-based recovery."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RecoveredState:
    """Logical two-qubit state after syndrome measurement and recovery.

    ``success_weight`` is the probability of a correctable syndrome,
    ``failure_weight`` that of a syndrome sent to the maximally mixed state.
    """

    logical_rho: np.ndarray
    success_weight: float
    failure_weight: float


from .four_one import encode41x41, measure_and_recover41  # noqa: E402
from .six_two import encode62, measure_and_recover62  # noqa: E402

__all__ = ["RecoveredState", "encode41x41", "encode62", "measure_and_recover41", "measure_and_recover62"]
