"""Local [4,1] x [4,1] code: each logical qubit in its own four-qubit block.

Codewords of the [4,1] amplitude-damping code:
``|0>_L = (|0000> + |1111>)/sqrt2``, ``|1>_L = (|0011> + |1100>)/sqrt2``.
Each block is measured and recovered on its own; a block whose syndrome is
not one of {no jump, jump on qubit 1..4} is replaced by ``I_L/2``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..channels import jump_operator
from ..linalg import basis_ket, check_density, tensor_product
from ..states import check_pure
from . import RecoveredState

BLOCK_QUBITS = 4
BLOCK_DIM = 2**BLOCK_QUBITS
N_QUBITS = 2 * BLOCK_QUBITS
DIM = 2**N_QUBITS
N_SYNDROMES = 5


@lru_cache(maxsize=None)
def block_codewords() -> np.ndarray:
    """2 x 16 array; row ``i`` is ``|i>_L``."""
    out = np.array([
        (basis_ket("0000") + basis_ket("1111")) / np.sqrt(2),
        (basis_ket("0011") + basis_ket("1100")) / np.sqrt(2),
    ])
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def block_recovery_vectors() -> np.ndarray:
    """5 x 2 x 16 array: syndrome 0 is the codewords, syndrome ``k`` the
    normalised image of the codewords under a jump on block qubit ``k``."""
    cw = block_codewords()
    out = np.empty((N_SYNDROMES, 2, BLOCK_DIM), dtype=complex)
    out[0] = cw
    for k in range(1, N_SYNDROMES):
        imgs = cw @ jump_operator(k - 1, BLOCK_QUBITS).T
        out[k] = imgs / np.linalg.norm(imgs, axis=1, keepdims=True)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def block_failure_projector() -> np.ndarray:
    vecs = block_recovery_vectors().reshape(-1, BLOCK_DIM)
    out = np.eye(BLOCK_DIM) - vecs.T @ vecs.conj()
    out.flags.writeable = False
    return out


def encode41x41(state: np.ndarray) -> np.ndarray:
    """Map ``|ij>`` onto ``|i>_L (x) |j>_L``."""
    cw = block_codewords()
    basis = np.array([tensor_product(cw[i], cw[j]) for i in (0, 1) for j in (0, 1)])
    return check_pure(state) @ basis


def _recover_first_block(t: np.ndarray) -> np.ndarray:
    """Recover the leading block of a ``(d1, r, d1, r)`` operator into ``(2, r, 2, r)``."""
    vecs = block_recovery_vectors()
    out = np.einsum("kia,abcd,kjc->ibjd", vecs.conj(), t, vecs, optimize=True)
    rest = np.einsum("ca,abcd->bd", block_failure_projector(), t, optimize=True)
    out += np.einsum("ij,bd->ibjd", np.eye(2) / 2, rest)
    return out


def measure_and_recover41(rho256: np.ndarray, validate: bool = True) -> RecoveredState:
    """Recover both blocks independently and decode to a 4x4 logical state."""
    rho256 = np.asarray(rho256, dtype=complex)
    if rho256.shape != (DIM, DIM):
        raise ValueError(f"expected a {DIM}x{DIM} density operator, got shape {rho256.shape}")
    if validate:
        check_density(rho256)
    t = rho256.reshape(BLOCK_DIM, BLOCK_DIM, BLOCK_DIM, BLOCK_DIM)
    t = _recover_first_block(t)  # (2, 16, 2, 16)
    t = _recover_first_block(t.transpose(1, 0, 3, 2))  # (2_B, 2_A, 2_B, 2_A)
    logical = t.transpose(1, 0, 3, 2).reshape(4, 4)

    good = block_recovery_vectors().reshape(-1, BLOCK_DIM)
    p_ok = good.T @ good.conj()
    success = float(np.einsum("ca,db,abcd->", p_ok, p_ok, rho256.reshape((BLOCK_DIM,) * 4), optimize=True).real)
    return RecoveredState(logical, success, float(np.trace(rho256).real) - success)
