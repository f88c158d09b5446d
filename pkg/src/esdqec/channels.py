"""Independent amplitude damping on every qubit of a register."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .linalg import check_density, kron_all

MAX_QUBITS = 8


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    return gamma


@dataclass(frozen=True)
class DampingChannel:
    """Same jump probability ``gamma`` on each of ``n_qubits`` qubits."""

    gamma: float
    n_qubits: int

    def __post_init__(self):
        _check_gamma(self.gamma)
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in 1..{MAX_QUBITS}, got {self.n_qubits}")

    @property
    def dim(self) -> int:
        return 2**self.n_qubits


def single_qubit_kraus(gamma: float) -> tuple[np.ndarray, np.ndarray]:
    """No-jump and jump operators ``(E0, E1)`` for one qubit."""
    gamma = _check_gamma(gamma)
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - gamma)]], dtype=complex)
    e1 = np.array([[0.0, np.sqrt(gamma)], [0.0, 0.0]], dtype=complex)
    return e0, e1


def kraus_operators(channel: DampingChannel) -> list[np.ndarray]:
    """All ``2**n`` full-register Kraus operators, one per jump pattern.

    Exponential in memory; intended for checks on small registers.
    """
    e = single_qubit_kraus(channel.gamma)
    return [kron_all(*(e[m] for m in pattern)) for pattern in product((0, 1), repeat=channel.n_qubits)]


def _damp_qubit(rho: np.ndarray, gamma: float, qubit: int, n_qubits: int) -> np.ndarray:
    """E0 rho E0^dag + E1 rho E1^dag on one qubit, written out on the 2x2
    blocks of that qubit's row/column index."""
    d = 2**n_qubits
    left = 2**qubit
    right = d // (2 * left)
    t = rho.reshape(left, 2, right, left, 2, right).copy()
    t[:, 0, :, :, 0, :] += gamma * t[:, 1, :, :, 1, :]
    t[:, 1, :, :, 1, :] *= 1.0 - gamma
    coherence = np.sqrt(1.0 - gamma)
    t[:, 0, :, :, 1, :] *= coherence
    t[:, 1, :, :, 0, :] *= coherence
    return t.reshape(d, d)


def apply_damping(rho: np.ndarray, channel: DampingChannel, validate: bool = True) -> np.ndarray:
    """Damp every qubit of ``rho`` independently with probability ``channel.gamma``.

    The product channel factorises, so the single-qubit channel is applied
    qubit by qubit; this equals the sum over all ``2**n`` jump patterns.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (channel.dim, channel.dim):
        raise ValueError(f"rho has shape {rho.shape}, channel acts on {channel.n_qubits} qubits")
    if validate:
        check_density(rho)
    for q in range(channel.n_qubits):
        rho = _damp_qubit(rho, channel.gamma, q, channel.n_qubits)
    return rho


def damp(rho: np.ndarray, gamma: float, validate: bool = True) -> np.ndarray:
    n = int(np.log2(len(rho)))
    return apply_damping(rho, DampingChannel(gamma, n), validate)


def jump_operator(qubit: int, n_qubits: int) -> np.ndarray:
    """Lowering operator ``|0><1|`` on one qubit (0-based), identity elsewhere."""
    lower = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    eye = np.eye(2, dtype=complex)
    return kron_all(*(lower if i == qubit else eye for i in range(n_qubits)))
