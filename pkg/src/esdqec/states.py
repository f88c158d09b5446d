"""Two-qubit pure states: the four Bell-like/separable families and the
general five-angle parametrisation.

Amplitudes are ordered ``(|00>, |01>, |10>, |11>)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FAMILIES = ("phi", "psi", "zeta", "xi")

# (index of the cos(alpha) term, index of the e^{i beta} sin(alpha) term)
_FAMILY_SLOTS = {
    "phi": (3, 0),   # cos a |11> + e^{ib} sin a |00>
    "psi": (2, 1),   # cos a |10> + e^{ib} sin a |01>
    "zeta": (1, 0),  # cos a |01> + e^{ib} sin a |00>
    "xi": (3, 2),    # cos a |11> + e^{ib} sin a |10>
}


@dataclass(frozen=True)
class StateFamily:
    family: str
    alpha: float
    beta: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")

    def vector(self) -> np.ndarray:
        return make_family_state(self)


def make_family_state(spec: StateFamily) -> np.ndarray:
    cos_slot, sin_slot = _FAMILY_SLOTS[spec.family]
    amps = np.zeros(4, dtype=complex)
    amps[cos_slot] = np.cos(spec.alpha)
    amps[sin_slot] = np.exp(1j * spec.beta) * np.sin(spec.alpha)
    return amps


def make_general_state(
    alpha: float, beta_mix: float, delta: float, eps1: float, eps2: float, eps3: float
) -> np.ndarray:
    """Arbitrary two-qubit pure state.

    ``beta_mix`` is the mixing angle between ``|10>`` and ``|01>``; it is not
    the relative phase ``beta`` of the families.
    """
    amps = np.empty(4, dtype=complex)
    amps[3] = np.cos(alpha) * np.cos(delta)
    amps[0] = np.sin(alpha) * np.cos(delta) * np.exp(1j * eps1)
    amps[2] = np.cos(beta_mix) * np.sin(delta) * np.exp(1j * eps2)
    amps[1] = np.sin(beta_mix) * np.sin(delta) * np.exp(1j * eps3)
    return amps


def random_pure_state(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def check_pure(state: np.ndarray, dim: int = 4, atol: float = 1e-12) -> np.ndarray:
    state = np.asarray(state, dtype=complex)
    if state.shape != (dim,):
        raise ValueError(f"expected {dim} amplitudes, got shape {state.shape}")
    if abs(np.vdot(state, state).real - 1.0) > atol:
        raise ValueError("state is not normalised")
    return state
