"""Dense complex linear algebra on qubit registers.

Matrices and kets are plain ``numpy`` arrays. Basis ordering is big-endian:
qubit 1 is the leftmost tensor factor, i.e. the most significant bit of the
basis index, so ``|110000>`` is index ``0b110000``.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

ATOL = 1e-10
TRACE_ATOL = 1e-12
MAX_DIM = 256
# above this size the pure-numpy Jacobi sweep is too slow; LAPACK takes over
JACOBI_MAX_DIM = 16


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; works for kets (1-D) and operators (2-D)."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*factors: np.ndarray) -> np.ndarray:
    return reduce(tensor_product, factors)


def basis_ket(bits: str) -> np.ndarray:
    """Computational-basis ket from a bit string, e.g. ``basis_ket('011111')``."""
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def projector(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    return np.outer(v, v.conj())


def _as_square(h: np.ndarray) -> np.ndarray:
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    return h


def is_hermitian(h: np.ndarray, atol: float = ATOL) -> bool:
    h = _as_square(h)
    return bool(np.max(np.abs(h - h.conj().T), initial=0.0) <= atol)


def is_unitary(u: np.ndarray, atol: float = ATOL) -> bool:
    u = _as_square(u)
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(len(u)))) <= atol)


def is_psd(h: np.ndarray, atol: float = ATOL) -> bool:
    if not is_hermitian(h, atol):
        return False
    return hermitian_eigenvalues(h, atol)[-1] >= -atol


def _jacobi_eigh(h: np.ndarray, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalisation of a complex Hermitian matrix.

    Each rotation first removes the phase of the pivot ``a[p, q]`` with a
    diagonal unitary, then applies the usual real symmetric Jacobi rotation.
    """
    a = np.array(h, dtype=complex)
    n = len(a)
    v = np.eye(n, dtype=complex)
    scale = max(np.max(np.abs(a)), np.finfo(float).tiny)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a[~np.eye(n, dtype=bool)])
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                zeta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = np.copysign(1.0, zeta) / (abs(zeta) + np.hypot(1.0, zeta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]] on the (p, q) plane
                gpp, gpq = c, s
                gqp, gqq = -s * np.conj(phase), c * np.conj(phase)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = col_p * gpp + col_q * gqp
                a[:, q] = col_p * gpq + col_q * gqq
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = np.conj(gpp) * row_p + np.conj(gqp) * row_q
                a[q, :] = np.conj(gpq) * row_p + np.conj(gqq) * row_q
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp * gpp + vq * gqp
                v[:, q] = vp * gpq + vq * gqq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.diag(a).real.copy(), v


def hermitian_eigh(
    h: np.ndarray, atol: float = ATOL, method: str = "auto"
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching eigenvectors (columns).

    ``method`` is ``"jacobi"``, ``"lapack"`` or ``"auto"`` (Jacobi up to
    16x16, LAPACK beyond).
    """
    h = _as_square(h)
    if not is_hermitian(h, atol):
        raise ValueError("matrix is not Hermitian within tolerance")
    h = 0.5 * (h + h.conj().T)
    if method == "auto":
        method = "jacobi" if len(h) <= JACOBI_MAX_DIM else "lapack"
    if method == "jacobi":
        w, v = _jacobi_eigh(h)
    elif method == "lapack":
        w, v = np.linalg.eigh(h)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    order = np.argsort(w, kind="stable")[::-1]
    return w[order], v[:, order]


def hermitian_eigenvalues(h: np.ndarray, atol: float = ATOL, method: str = "auto") -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in descending order."""
    return hermitian_eigh(h, atol, method)[0]


def psd_sqrt(h: np.ndarray, atol: float = ATOL) -> np.ndarray:
    """Unique positive-semidefinite square root.

    Eigenvalues in ``[-atol, 0)`` are clamped to zero, as are positive ones
    below the rounding floor ``n * eps * max|w|`` (their square roots would
    otherwise inject ~1e-8 noise into rank-deficient inputs).
    """
    w, v = hermitian_eigh(h, atol)
    if w.size and w[-1] < -atol:
        raise ValueError(f"matrix has eigenvalue {w[-1]:.3e} < -{atol:g}")
    floor = len(w) * np.finfo(float).eps * max(np.max(np.abs(w), initial=0.0), 1.0)
    w = np.where(w <= floor, 0.0, w)
    return (v * np.sqrt(w)) @ v.conj().T


def check_density(rho: np.ndarray, dim: int | None = None, atol: float = ATOL) -> np.ndarray:
    """Validate a density operator and return it as a complex array.

    Raises ``ValueError`` on wrong dimension, non-Hermiticity, trace off by
    more than 1e-12, or an eigenvalue below ``-atol``.
    """
    rho = _as_square(rho)
    n = len(rho)
    if dim is not None and n != dim:
        raise ValueError(f"expected a {dim}x{dim} density operator, got {n}x{n}")
    if n > MAX_DIM or n & (n - 1):
        raise ValueError(f"dimension {n} is not a power of two <= {MAX_DIM}")
    if not is_hermitian(rho, atol):
        raise ValueError("density operator is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValueError(f"density operator has trace {tr.real:.15g}")
    w = hermitian_eigenvalues(rho, atol)
    if w[-1] < -atol:
        raise ValueError(f"density operator has eigenvalue {w[-1]:.3e}")
    return rho
