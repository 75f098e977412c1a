"""Physical parameter records and detuning conventions.

All frequencies (decay rates, Rabi frequencies, detunings, level splittings)
are dimensionless, pre-scaled in units of the decay half-rate gamma2 of the
upper driven transition.  The library never touches SI units.  Note the
convention: the stored gamma_i are half-rates; the full spontaneous decay
rate of level i is 2*gamma_i.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields, replace
from enum import Enum

import numpy as np


class SystemKind(str, Enum):
    Y_FOUR_LEVEL = "Y_FOUR_LEVEL"
    V_THREE_LEVEL = "V_THREE_LEVEL"


class ParameterError(ValueError):
    """Invalid physical parameter."""


def interference_parameter(gamma1: float, gamma2: float, theta_deg: float) -> float:
    """Cross-damping rate sqrt(gamma1*gamma2)*cos(theta).

    theta is the alignment angle between the two transition dipole moments,
    restricted to [0, 90] degrees: parallel dipoles give maximal interference,
    perpendicular dipoles none.
    """
    if gamma1 <= 0 or gamma2 <= 0:
        raise ParameterError(f"decay rates must be positive, got {gamma1}, {gamma2}")
    if not 0.0 <= theta_deg <= 90.0:
        raise ParameterError(f"dipole angle must lie in [0, 90] deg, got {theta_deg}")
    if theta_deg == 90.0:
        # cos(radians(90)) is ~6e-17, not 0; the perpendicular case must
        # switch the interference off exactly.
        return 0.0
    return math.sqrt(gamma1 * gamma2) * math.cos(math.radians(theta_deg))


def delta_from_delta1(delta1: float, Delta2: float, W12: float) -> float:
    """Probe-pump beat detuning from the probe detuning: delta = Delta1 - Delta2 + W12."""
    return delta1 - Delta2 + W12


def delta1_from_delta(delta: float, Delta2: float, W12: float) -> float:
    """Inverse of :func:`delta_from_delta1`."""
    return delta + Delta2 - W12


@dataclass(frozen=True)
class SystemParams:
    """All rates, Rabi frequencies, detunings and phases of the driven atom.

    gamma1, gamma2, gamma3 : decay half-rates of |1>, |2>, |3> (units of gamma2)
    theta_deg              : dipole alignment angle in degrees, [0, 90]
    W12                    : excited-doublet splitting
    Omega1, Omega2, Omega3 : half Rabi frequencies of probe and two pumps
    Delta2, Delta3         : pump detunings
    Phi                    : probe-pump phase difference (radians)
    system_kind            : full Y system or reduced V system (|4> omitted;
                             gamma3, Omega3, Delta3 then ignored)

    The cross-damping gamma12 is always derived from theta_deg, never set
    directly, so 0 <= gamma12 <= sqrt(gamma1*gamma2) cannot be violated.
    """

    gamma1: float
    gamma2: float
    gamma3: float
    theta_deg: float
    W12: float
    Omega1: float
    Omega2: float
    Omega3: float
    Delta2: float = 0.0
    Delta3: float = 0.0
    Phi: float = 0.0
    system_kind: SystemKind = SystemKind.Y_FOUR_LEVEL

    def __post_init__(self):
        if isinstance(self.system_kind, str):
            object.__setattr__(self, "system_kind", SystemKind(self.system_kind))
        for name in ("gamma1", "gamma2", "gamma3"):
            if getattr(self, name) <= 0:
                raise ParameterError(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("Omega1", "Omega2", "Omega3"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be non-negative, got {getattr(self, name)}")
        if not 0.0 <= self.theta_deg <= 90.0:
            raise ParameterError(f"theta_deg must lie in [0, 90], got {self.theta_deg}")
        for name in ("W12", "Delta2", "Delta3", "Phi"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite")

    @property
    def gamma12(self) -> float:
        return interference_parameter(self.gamma1, self.gamma2, self.theta_deg)

    def with_(self, **kwargs) -> "SystemParams":
        return replace(self, **kwargs)

    def to_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["system_kind"] = self.system_kind.value
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "SystemParams":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ParameterError(f"unknown parameter keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "SystemParams":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ProbeGrid:
    """Uniform probe-detuning grid, endpoints included."""

    delta1_min: float
    delta1_max: float
    n_points: int

    def __post_init__(self):
        if not self.delta1_min < self.delta1_max:
            raise ParameterError(
                f"need delta1_min < delta1_max, got [{self.delta1_min}, {self.delta1_max}]"
            )
        if self.n_points < 2:
            raise ParameterError(f"n_points must be >= 2, got {self.n_points}")

    def values(self) -> np.ndarray:
        return np.linspace(self.delta1_min, self.delta1_max, self.n_points)
