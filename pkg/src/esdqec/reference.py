"""Published small-gamma fidelity expansions and uncoded closed forms.

``SERIES_C2[code][family](alpha, beta)`` is c2 in F = 1 - c2 gamma^2 + O(gamma^3).
"""

from __future__ import annotations

import numpy as np


def _c62_phi(a, b):
    return (21 - 9 * np.cos(2 * a) - np.sin(2 * a) ** 2 * np.cos(b) ** 2) / 4


def _c62_psi(a, b):
    return (12 - np.sin(2 * a) ** 2 * np.cos(b) ** 2) / 4


SERIES_C2 = {
    "nonlocal62": {"phi": _c62_phi, "zeta": _c62_phi, "psi": _c62_psi, "xi": _c62_psi},
    "local41": {
        "phi": lambda a, b: (8 - 3 * np.cos(2 * a) - 2 * np.cos(2 * a) ** 2) / 2,
        "zeta": lambda a, b: (15 - 3 * np.cos(2 * a) - 2 * np.sin(2 * a) ** 2 * np.cos(b) ** 2) / 4,
        "psi": lambda a, b: 4 - np.cos(2 * a) ** 2,
        "xi": lambda a, b: (9 - 3 * np.cos(2 * a) - 2 * np.sin(2 * a) ** 2 * np.cos(b) ** 2) / 4,
    },
}


def uncoded_fidelity_phi(alpha, gamma):
    c2 = np.cos(alpha) ** 2
    return 1 - 2 * gamma * c2 + gamma**2 * c2


def uncoded_fidelity_psi(alpha, gamma):
    return 1 - np.asarray(gamma, dtype=float) + 0 * alpha
