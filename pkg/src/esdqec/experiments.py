"""Sweeps over the damping parameter and the verification battery."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Callable

import numpy as np

from . import __version__
from .channels import damp
from .codes import RecoveredState, encode41x41, encode62, measure_and_recover41, measure_and_recover62
from .linalg import projector
from .measures import concurrence, fidelity
from .states import FAMILIES, StateFamily

CODES = ("none", "local41", "nonlocal62")
OUTPUTS = ("fidelity", "concurrence")

_ENCODERS = {"local41": encode41x41, "nonlocal62": encode62}
_RECOVERY = {"local41": measure_and_recover41, "nonlocal62": measure_and_recover62}


class ConfigError(ValueError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


def prepare(state: np.ndarray, code: str) -> np.ndarray:
    """Density matrix of the (encoded) physical register before damping."""
    if code == "none":
        return projector(state)
    if code not in _ENCODERS:
        raise ConfigError("code", f"must be one of {CODES}, got {code!r}")
    return projector(_ENCODERS[code](state))


def recover(rho_physical: np.ndarray, code: str) -> RecoveredState:
    if code == "none":
        return RecoveredState(rho_physical, 1.0, 0.0)
    return _RECOVERY[code](rho_physical, validate=False)


def logical_state(state: np.ndarray, code: str, gamma: float) -> np.ndarray:
    """Full pipeline: encode, damp every physical qubit, recover, decode."""
    rho = damp(prepare(state, code), gamma, validate=False)
    return recover(rho, code).logical_rho


def pipeline(state: np.ndarray, code: str) -> Callable[[float], np.ndarray]:
    """``gamma -> logical density matrix`` with the encoding done once."""
    rho0 = prepare(state, code)
    return lambda gamma: recover(damp(rho0, gamma, validate=False), code).logical_rho


@dataclass(frozen=True)
class SweepConfig:
    family: str
    alpha: float
    beta: float = 0.0
    code: str = "nonlocal62"
    gamma_min: float = 0.0
    gamma_max: float = 1.0
    gamma_steps: int = 201
    outputs: tuple[str, ...] = OUTPUTS

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigError("family", f"must be one of {FAMILIES}, got {self.family!r}")
        if self.code not in CODES:
            raise ConfigError("code", f"must be one of {CODES}, got {self.code!r}")
        for name in ("alpha", "beta", "gamma_min", "gamma_max"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(name, "must be a finite number")
        if not 0.0 <= self.gamma_min <= 1.0:
            raise ConfigError("gamma_min", f"must lie in [0, 1], got {self.gamma_min}")
        if not 0.0 <= self.gamma_max <= 1.0:
            raise ConfigError("gamma_max", f"must lie in [0, 1], got {self.gamma_max}")
        if int(self.gamma_steps) != self.gamma_steps or self.gamma_steps < 1:
            raise ConfigError("gamma_steps", f"must be a positive integer, got {self.gamma_steps}")
        if self.gamma_steps > 1 and not self.gamma_min < self.gamma_max:
            raise ConfigError("gamma_max", "must exceed gamma_min for a grid of more than one point")
        bad = [o for o in self.outputs if o not in OUTPUTS]
        if bad or not self.outputs:
            raise ConfigError("outputs", f"must be a non-empty subset of {OUTPUTS}, got {self.outputs}")

    @property
    def gamma_grid(self) -> np.ndarray:
        return np.linspace(self.gamma_min, self.gamma_max, int(self.gamma_steps))

    def state(self) -> np.ndarray:
        return StateFamily(self.family, self.alpha, self.beta).vector()


@dataclass
class SweepResult:
    config: SweepConfig
    gammas: np.ndarray
    fidelity: np.ndarray
    concurrence: np.ndarray
    version: str = __version__
    created: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    @property
    def columns(self) -> tuple[str, ...]:
        return ("gamma",) + tuple(o for o in OUTPUTS if o in self.config.outputs)

    def rows(self) -> list[tuple[float, ...]]:
        cols = [self.gammas] + [getattr(self, o) for o in self.columns[1:]]
        return [tuple(float(c[i]) for c in cols) for i in range(len(self.gammas))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows():
            writer.writerow([f"{x:.17g}" for x in row])
        return buf.getvalue()

    def to_json(self, timestamp: bool = False) -> str:
        """JSON with a config echo. The timestamp is opt-in so that identical
        configs give identical files."""
        doc = {
            "config": {**asdict(self.config), "outputs": list(self.config.outputs)},
            "metadata": {"tool": "esdqec", "version": self.version},
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows()],
        }
        if timestamp:
            doc["metadata"]["created"] = self.created
        return json.dumps(doc, indent=2) + "\n"


def run_sweep(config: SweepConfig) -> SweepResult:
    state = config.state()
    evolve = pipeline(state, config.code)
    gammas = config.gamma_grid
    fid = np.full(len(gammas), np.nan)
    conc = np.full(len(gammas), np.nan)
    for i, g in enumerate(gammas):
        rho = evolve(float(g))
        if "fidelity" in config.outputs:
            fid[i] = fidelity(state, rho)
        if "concurrence" in config.outputs:
            conc[i] = concurrence(rho)
    return SweepResult(config, gammas, fid, conc)


def fidelity_fn(family: str, alpha: float, beta: float, code: str) -> Callable[[float], float]:
    state = StateFamily(family, alpha, beta).vector()
    evolve = pipeline(state, code)
    return lambda g: fidelity(state, evolve(g))


def concurrence_fn(family: str, alpha: float, beta: float, code: str) -> Callable[[float], float]:
    evolve = pipeline(StateFamily(family, alpha, beta).vector(), code)
    return lambda g: concurrence(evolve(g))
