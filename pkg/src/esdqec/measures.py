"""Fidelity, Wootters concurrence, ESD threshold and small-gamma series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .linalg import check_density, hermitian_eigenvalues, psd_sqrt

ZERO_CONCURRENCE = 1e-10
SERIES_GAMMAS = (1e-3, 2e-3, 4e-3)

_SIGMA_Y = np.array([[0.0, -1j], [1j, 0.0]])
SPIN_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True)
class FidelityCurve:
    gammas: np.ndarray
    values: np.ndarray


@dataclass(frozen=True)
class ConcurrenceCurve:
    gammas: np.ndarray
    values: np.ndarray


def fidelity(reference: np.ndarray, rho: np.ndarray) -> float:
    """Overlap <ref|rho|ref> of a pure reference state with ``rho``."""
    reference = np.asarray(reference, dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (len(reference), len(reference)):
        raise ValueError(f"reference has {len(reference)} amplitudes, rho has shape {rho.shape}")
    f = np.vdot(reference, rho @ reference)
    if abs(f.imag) > 1e-12:
        raise ValueError(f"fidelity has imaginary part {f.imag:.3e}; rho is not Hermitian")
    return float(min(max(f.real, 0.0), 1.0))


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Uses the Hermitian form sqrt(rho) rho~ sqrt(rho), whose eigenvalues are
    the squares of the lambda_i in max(0, l1 - l2 - l3 - l4).
    """
    rho = check_density(rho, dim=4)
    rho_tilde = SPIN_FLIP @ rho.conj() @ SPIN_FLIP
    root = psd_sqrt(rho)
    r = root @ rho_tilde @ root
    w = hermitian_eigenvalues(0.5 * (r + r.conj().T))
    # ||r|| <= 1 for density inputs, so eigenvalues below a few eps are rounding
    # noise; their square roots would add ~1e-8 to the result
    floor = 8 * np.finfo(float).eps
    lam = np.sqrt(np.where(w <= floor, 0.0, w))
    return float(min(max(lam[0] - lam[1:].sum(), 0.0), 1.0))


def esd_threshold(
    curve_fn: Callable[[float], float],
    tol: float = 1e-6,
    step: float = 1e-3,
    zero: float = ZERO_CONCURRENCE,
) -> float:
    """Smallest damping beyond which the concurrence stays at zero.

    Scans ``[0, 1]`` with ``step``, then bisects between the last entangled
    grid point and the next one. Returns 1.0 when the curve is entangled at
    every grid point below 1.
    """
    if curve_fn(0.0) <= zero:
        raise ValueError("state is separable before any damping")
    grid = np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)
    alive = [g for g in grid[1:-1] if curve_fn(float(g)) > zero]
    last = float(alive[-1]) if alive else 0.0
    hi = float(grid[np.searchsorted(grid, last, side="right")])
    if hi >= 1.0:
        return 1.0
    lo = last
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if curve_fn(mid) > zero:
            lo = mid
        else:
            hi = mid
    return hi


def series_coefficient_gamma2(
    fidelity_fn: Callable[[float], float], gammas: tuple[float, float, float] = SERIES_GAMMAS
) -> float:
    """Estimate c2 in F = 1 - c2 gamma^2 + O(gamma^3).

    ``(1 - F(h)) / h**2 = c2 + c3 h + c4 h**2 + ...``; two Richardson steps
    over ``h, 2h, 4h`` remove the h and h**2 terms.
    """
    f0 = fidelity_fn(0.0)
    if abs(f0 - 1.0) > 1e-10:
        raise ValueError(f"fidelity at gamma=0 is {f0!r}, not 1")
    h0, h1, h2 = gammas
    if not (np.isclose(h1, 2 * h0) and np.isclose(h2, 2 * h1)):
        raise ValueError("sample points must be h, 2h, 4h")
    d = [(1.0 - fidelity_fn(h)) / h**2 for h in gammas]
    r0 = 2 * d[0] - d[1]
    r1 = 2 * d[1] - d[2]
    return (4 * r0 - r1) / 3
