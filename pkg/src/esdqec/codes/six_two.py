"""Non-local [6,2] code: two logical qubits in six physical qubits.

Syndrome measurement is done as a projective decomposition onto the seven
4-dimensional recovery subspaces (no jump, jump on qubit 1..6) and their
36-dimensional complement. This is equivalent to rotating with the basis
change ``S`` and reading the last four qubits, without having to complete
the 64-dimensional basis.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..linalg import basis_ket, check_density
from ..states import check_pure
from . import RecoveredState

N_QUBITS = 6
DIM = 2**N_QUBITS
LABELS = ("00", "01", "10", "11")
N_SYNDROMES = 7

_CODEWORD_KETS = {
    "00": ("000000", "111111"),
    "01": ("001001", "110110"),
    "10": ("000110", "111001"),
    "11": ("110000", "001111"),
}

# one-jump images, rows k = 1..6, columns ij = 00, 01, 10, 11
_JUMP_KETS = (
    ("011111", "010110", "011001", "010000"),
    ("101111", "100110", "101001", "100000"),
    ("110111", "000001", "110001", "000111"),
    ("111011", "110010", "000010", "001011"),
    ("111101", "110100", "000100", "001101"),
    ("111110", "001000", "111000", "001110"),
)


@lru_cache(maxsize=None)
def codewords() -> np.ndarray:
    """4 x 64 array; row ``2*i + j`` is ``|ij>_L``."""
    rows = [(basis_ket(a) + basis_ket(b)) / np.sqrt(2) for a, b in (_CODEWORD_KETS[l] for l in LABELS)]
    out = np.array(rows)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def recovery_vectors() -> np.ndarray:
    """7 x 4 x 64 array: ``[k, 2*i + j]`` is ``|R_{k,ij}>``."""
    out = np.empty((N_SYNDROMES, 4, DIM), dtype=complex)
    out[0] = codewords()
    for k, kets in enumerate(_JUMP_KETS, start=1):
        out[k] = [basis_ket(b) for b in kets]
    out.flags.writeable = False
    return out


def syndrome_projectors() -> list[np.ndarray]:
    """``[P_0, ..., P_6, P_fail]``; orthogonal projectors summing to identity."""
    vecs = recovery_vectors()
    ps = [v.T @ v.conj() for v in vecs]
    ps.append(np.eye(DIM) - sum(ps))
    return ps


def recovery_operator(k: int) -> np.ndarray:
    """Recovery map ``R_k = sum_ij |ij>_L <R_{k,ij}|`` for syndrome ``k`` in 0..6."""
    return codewords().T @ recovery_vectors()[k].conj()


def encode62(state: np.ndarray) -> np.ndarray:
    """Map the amplitudes of ``|ij>`` onto ``|ij>_L``."""
    return check_pure(state) @ codewords()


def measure_and_recover62(rho64: np.ndarray, validate: bool = True) -> RecoveredState:
    """Syndrome measurement, recovery and decoding to a 4x4 logical state.

    Syndromes 0..6 are mapped back onto the codewords; every other outcome
    is replaced by the maximally mixed logical state.
    """
    rho64 = np.asarray(rho64, dtype=complex)
    if rho64.shape != (DIM, DIM):
        raise ValueError(f"expected a {DIM}x{DIM} density operator, got shape {rho64.shape}")
    if validate:
        check_density(rho64)
    vecs = recovery_vectors()
    # <R_{k,a}| rho |R_{k,b}>: recovery followed by decoding |ij>_L -> |ij>
    blocks = (vecs.conj() @ rho64) @ vecs.transpose(0, 2, 1)
    logical = blocks.sum(axis=0)
    success = float(np.trace(logical).real)
    failure = float(np.trace(rho64).real) - success
    logical = logical + failure * np.eye(4) / 4
    return RecoveredState(logical, success, failure)


def syndrome_basis_change() -> np.ndarray:
    """Partial isometry ``sum_{k<=6, ij} |ij Bin(k)> <R_{k,ij}|`` (64x64).

    Only the 28 listed vectors are mapped; the paper's full unitary needs a
    basis completion that is left unspecified, so the complement maps to 0.
    """
    s = np.zeros((DIM, DIM), dtype=complex)
    for k, vk in enumerate(recovery_vectors()):
        for idx in range(4):
            s[:, :] += np.outer(basis_ket(f"{idx:02b}{k:04b}"), vk[idx].conj())
    return s


def recover_via_basis_change(rho64: np.ndarray) -> np.ndarray:
    """Alternative recovery: rotate with ``syndrome_basis_change``, read the
    last four qubits, keep outcomes 0..6 and fill the rest with I/4."""
    s = syndrome_basis_change()
    rotated = (s @ rho64 @ s.conj().T).reshape(4, 16, 4, 16)
    logical = sum(rotated[:, k, :, k] for k in range(N_SYNDROMES))
    failure = 1.0 - np.trace(logical).real
    return logical + failure * np.eye(4) / 4
