"""Dressed states of the pump-driven manifold and secular rate dynamics.

At zero pump detunings the pump block of the Hamiltonian has eigenstates
|d> (eigenvalue 0) and |+/-> (eigenvalues +/- sqrt(Omega2^2 + Omega3^2))
spanning the bare states |2>, |3>, |4>.  Under the degeneracy lock
Omega2 = Omega3 and W12 = -sqrt(Omega2^2 + Omega3^2), the excited state
|1> is degenerate with |->, and in the high-field limit the populations
plus the real |1>-|-> coherence close on themselves (secular
approximation), with transfer rates transcribed in gamma_table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .params import ParameterError, SystemParams

SECULAR_LABELS = ("rho11", "rho_pp", "rho_mm", "rho_dd", "rho_1m")

POPULATIONS = ("11", "++", "--", "dd")
SOURCES = ("11", "++", "--", "dd", "1-", "-1")
TARGETS = ("11", "++", "--", "dd", "1-")


class DressedLabel(str, Enum):
    D = "d"
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class DressedState:
    """Eigenvalue and amplitudes over the bare states (|2>, |3>, |4>)."""

    label: DressedLabel
    eigenvalue: float
    amplitudes: tuple


def dressed_states(Omega2: float, Omega3: float):
    """The zero-eigenvalue state |d> and the split pair |+/->.

    |d>   = (Omega3 |2> - Omega2 |4>) / sqrt(Omega2^2 + Omega3^2)
    |+/-> = (Omega2 |2> - lam |3> + Omega3 |4>) / sqrt(Omega2^2 + lam^2 + Omega3^2),
    lam = +/- sqrt(Omega2^2 + Omega3^2).
    """
    s = Omega2 ** 2 + Omega3 ** 2
    if s <= 0:
        raise ParameterError("at least one pump Rabi frequency must be non-zero")
    lam = math.sqrt(s)
    nd = math.sqrt(s)
    npm = math.sqrt(2.0 * s)  # Omega2^2 + lam^2 + Omega3^2 = 2 s
    d = DressedState(DressedLabel.D, 0.0, (Omega3 / nd, 0.0, -Omega2 / nd))
    plus = DressedState(DressedLabel.PLUS, lam,
                        (Omega2 / npm, -lam / npm, Omega3 / npm))
    minus = DressedState(DressedLabel.MINUS, -lam,
                         (Omega2 / npm, lam / npm, Omega3 / npm))
    return d, plus, minus


def middle_state_dressed_populations() -> tuple:
    """Dressed decomposition of the bare initial state rho33 = 1.

    <d|3> = 0 and |<+/-|3>|^2 = lam^2 / (2 (Omega2^2 + Omega3^2)) = 1/2
    for every pump strength, so the result is exact and parameter-free:
    (rho11, rho_pp, rho_mm, rho_dd, rho_1m) = (0, 1/2, 1/2, 0, 0).
    """
    return (0.0, 0.5, 0.5, 0.0, 0.0)


@dataclass(frozen=True)
class GammaTable:
    """Decay and transfer rates between dressed-basis elements.

    rates[(source, target)] is the coefficient of rho_source in the
    d rho_target / dt equation; sources run over the four populations and
    the two conjugate coherences "1-", "-1", targets over the populations
    and "1-".
    """

    rates: dict
    gamma1: float
    gamma2: float
    gamma3: float
    gamma12: float

    def rate(self, source: str, target: str) -> float:
        return self.rates[(source, target)]

    def matrix(self) -> np.ndarray:
        """5x5 real generator over (rho11, rho_pp, rho_mm, rho_dd, rho_1m).

        The coherence is real (rho_-1 = rho_1-), so the "1-" and "-1"
        source columns merge.
        """
        g = np.zeros((5, 5))
        cols = ("11", "++", "--", "dd")
        for i, target in enumerate(TARGETS):
            for j, source in enumerate(cols):
                g[i, j] = self.rates[(source, target)]
            g[i, 4] = self.rates[("1-", target)] + self.rates[("-1", target)]
        return g


def gamma_table(gamma1: float, gamma2: float, gamma3: float,
                gamma12: float) -> GammaTable:
    """Rate table of the secular dressed-basis equations.

    Only the coherence columns carry gamma12: population and coherence
    sectors decouple exactly when the decay interference is switched off.
    """
    r = {}
    r[("11", "11")] = -2.0 * gamma1
    r[("++", "11")] = r[("--", "11")] = r[("dd", "11")] = 0.0
    r[("1-", "11")] = r[("-1", "11")] = -gamma12 / 2.0

    r[("11", "++")] = gamma1
    r[("++", "++")] = -(gamma2 + 3.0 * gamma3) / 4.0
    r[("--", "++")] = (gamma2 + gamma3) / 4.0
    r[("dd", "++")] = gamma2 / 2.0
    r[("1-", "++")] = r[("-1", "++")] = gamma12 / 2.0

    r[("11", "--")] = gamma1
    r[("--", "--")] = -(gamma2 + 3.0 * gamma3) / 4.0
    r[("++", "--")] = (gamma2 + gamma3) / 4.0
    r[("dd", "--")] = gamma2 / 2.0
    r[("1-", "--")] = r[("-1", "--")] = 0.0

    r[("11", "dd")] = r[("1-", "dd")] = r[("-1", "dd")] = 0.0
    r[("dd", "dd")] = -gamma2
    r[("++", "dd")] = r[("--", "dd")] = gamma3 / 2.0

    r[("11", "1-")] = r[("--", "1-")] = -gamma12 / 2.0
    r[("++", "1-")] = r[("dd", "1-")] = r[("-1", "1-")] = 0.0
    r[("1-", "1-")] = -(4.0 * gamma1 + gamma2 + 2.0 * gamma3) / 4.0

    return GammaTable(r, gamma1, gamma2, gamma3, gamma12)


def secular_table_from_params(params: SystemParams,
                              rtol: float = 1e-9) -> GammaTable:
    """Build the rate table after enforcing the degeneracy lock.

    Requires Delta2 = Delta3 = 0, Omega2 = Omega3 and
    W12 = -sqrt(Omega2^2 + Omega3^2); the table is only valid there.
    """
    if params.Delta2 != 0.0 or params.Delta3 != 0.0:
        raise ParameterError(
            f"secular analysis needs zero pump detunings, got "
            f"Delta2={params.Delta2}, Delta3={params.Delta3}"
        )
    if not math.isclose(params.Omega2, params.Omega3, rel_tol=rtol):
        raise ParameterError(
            f"secular analysis needs Omega2 = Omega3, got "
            f"{params.Omega2} != {params.Omega3}"
        )
    w_lock = -math.sqrt(params.Omega2 ** 2 + params.Omega3 ** 2)
    if not math.isclose(params.W12, w_lock, rel_tol=rtol, abs_tol=1e-12):
        raise ParameterError(
            f"secular analysis needs W12 = -sqrt(Omega2^2+Omega3^2) = "
            f"{w_lock}, got W12={params.W12}"
        )
    return gamma_table(params.gamma1, params.gamma2, params.gamma3,
                       params.gamma12)


def evolve_secular(table: GammaTable, initial, t_max: float, dt: float):
    """Fixed-step 4th-order integration of the 5-variable secular system.

    Returns (times, states) with states of shape (n_steps + 1, 5) in the
    (rho11, rho_pp, rho_mm, rho_dd, rho_1m) ordering.
    """
    y0 = np.asarray(initial, dtype=float)
    if y0.shape != (5,):
        raise ValueError(f"initial state must have 5 components, got {y0.shape}")
    if not math.isclose(y0[:4].sum(), 1.0, abs_tol=1e-9):
        raise ValueError(f"initial populations must sum to 1, got {y0[:4].sum()}")
    g = table.matrix()
    dt_max = 0.01 / np.abs(g).max()
    if dt <= 0 or dt > dt_max:
        raise ValueError(f"step must satisfy 0 < dt <= {dt_max:.3e}, got {dt}")

    n_steps = int(round(t_max / dt))
    times = np.arange(n_steps + 1) * dt
    states = np.empty((n_steps + 1, 5))
    states[0] = y0
    # The generator is constant, so the 4th-order step collapses to one
    # precomputed matrix: a = sum_{j<=4} (dt G)^j / j!.
    dtg = dt * g
    a = np.eye(5) + dtg @ (np.eye(5) + dtg @ (np.eye(5) + dtg @ (np.eye(5) + dtg / 4.0) / 3.0) / 2.0)
    y = y0
    for k in range(n_steps):
        y = a @ y
        states[k + 1] = y
    return times, states


def secular_steady_state(table: GammaTable) -> np.ndarray:
    """Steady state of the secular system with the trace constraint imposed.

    One redundant population row of G y = 0 is replaced by
    rho11 + rho_pp + rho_mm + rho_dd = 1.
    """
    g = table.matrix().astype(complex)
    a = g.copy()
    a[3] = [1.0, 1.0, 1.0, 1.0, 0.0]
    b = np.zeros(5, dtype=complex)
    b[3] = 1.0
    return linalg.solve(a, b).real


def coherence_from_populations(rho_mm: float, rho_pp: float) -> float:
    """Re(rho23) = Re(rho34) ~ (rho_mm - rho_pp) / (2 sqrt(2))."""
    return (rho_mm - rho_pp) / (2.0 * math.sqrt(2.0))


def pump_coherence_analytic(gamma1: float, gamma3: float) -> float:
    """Closed-form steady Re(rho23) at zero detunings, maximal interference.

    Valid in the high-field limit with gamma12 ~ sqrt(gamma1 gamma2); all
    rates in units of gamma2.
    """
    denom = (2.0 * gamma1 * (gamma3 + 2.0) * (4.0 * gamma3 + 1.0)
             + (2.0 * gamma3 + 1.0) * (2.0 * gamma3 * (gamma3 + 2.0) + 1.0))
    return math.sqrt(2.0) * gamma1 / denom
