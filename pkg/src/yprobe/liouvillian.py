"""Construction of the master-equation generator in harmonic-decomposed form.

The element-wise density-matrix equations are written compactly as

    d/dt R + Sigma = M R,
    M = M0 + Omega1 * M1 * exp(-i(delta t - Phi))
           + Omega1 * Mm1 * exp(+i(delta t - Phi)),

where R stacks the density-matrix elements with the ground population
eliminated via the trace condition.  The Y system uses the 15-component
ordering (rho11, rho22, rho33, rho12, rho13, rho23, rho14, rho24, rho34,
rho21, rho31, rho32, rho41, rho42, rho43) with rho44 = 1 - rho11 - rho22
- rho33; the reduced V system (ground state |4> omitted) uses 8 components
(rho11, rho22, rho12, rho13, rho23, rho21, rho31, rho32) with
rho33 = 1 - rho11 - rho22.

Only the nine independent equations are written by hand; the conjugate rows
are generated from them (coefficients conjugated, columns mapped to their
conjugate elements, probe harmonics exchanged), so Hermiticity holds by
construction.  Trace elimination can leave constants attached to the probe
harmonics in the V system, hence Sigma carries one component per harmonic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .params import ParameterError, SystemKind, SystemParams

Y_LABELS = (
    "11", "22", "33", "12", "13", "23", "14", "24", "34",
    "21", "31", "32", "41", "42", "43",
)
V_LABELS = ("11", "22", "12", "13", "23", "21", "31", "32")


def _conj_label(label: str) -> str:
    return label[::-1]


@dataclass(frozen=True)
class LiouvillianSet:
    """Harmonic pieces of the generator plus the inhomogeneous vectors.

    m0 has no dependence on Omega1, delta, or Phi; m1 / m_minus1 hold the
    coefficients multiplying Omega1*exp(-+i(delta t - Phi)).  sigma is the
    static inhomogeneous vector; sigma1 / sigma_minus1 (per unit Omega1)
    are non-zero only in V mode, where trace elimination hits a probe term.
    """

    m0: np.ndarray
    m1: np.ndarray
    m_minus1: np.ndarray
    sigma: np.ndarray
    sigma1: np.ndarray
    sigma_minus1: np.ndarray
    labels: tuple = Y_LABELS

    @property
    def dim(self) -> int:
        return self.m0.shape[0]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def m_at(self, omega1: float, delta: float, phi: float, t: float) -> np.ndarray:
        """The full generator matrix at time t."""
        e_minus = np.exp(-1j * (delta * t - phi))
        return self.m0 + omega1 * (self.m1 * e_minus + self.m_minus1 / e_minus)

    def sigma_at(self, omega1: float, delta: float, phi: float, t: float) -> np.ndarray:
        e_minus = np.exp(-1j * (delta * t - phi))
        return self.sigma + omega1 * (self.sigma1 * e_minus + self.sigma_minus1 / e_minus)

    def to_jsonable(self) -> dict:
        def mat(a):
            return [[[float(z.real), float(z.imag)] for z in row] for row in a]

        def vec(v):
            return [[float(z.real), float(z.imag)] for z in v]

        return {
            "labels": list(self.labels),
            "m0": mat(self.m0),
            "m1": mat(self.m1),
            "m_minus1": mat(self.m_minus1),
            "sigma": vec(self.sigma),
            "sigma1": vec(self.sigma1),
            "sigma_minus1": vec(self.sigma_minus1),
        }


@dataclass
class _Row:
    """One equation d rho_label/dt = sum(coeffs * elements) + constants."""

    m0: dict = field(default_factory=dict)
    m1: dict = field(default_factory=dict)
    mm1: dict = field(default_factory=dict)
    const0: complex = 0.0
    const1: complex = 0.0
    constm1: complex = 0.0

    def conjugate(self) -> "_Row":
        # Conjugating the equation maps rho_kl -> rho_lk and exchanges the
        # probe phase factors, so m1 and mm1 swap.
        def cmap(d):
            return {_conj_label(k): np.conj(v) for k, v in d.items()}

        return _Row(
            m0=cmap(self.m0),
            m1=cmap(self.mm1),
            mm1=cmap(self.m1),
            const0=np.conj(self.const0),
            const1=np.conj(self.constm1),
            constm1=np.conj(self.const1),
        )


def _y_primary_rows(p: SystemParams) -> dict:
    g1, g2, g3, g12 = p.gamma1, p.gamma2, p.gamma3, p.gamma12
    O2, O3 = p.Omega2, p.Omega3
    D2, D3, W = p.Delta2, p.Delta3, p.W12

    rows = {}
    rows["11"] = _Row(
        m0={"11": -2 * g1, "12": -g12, "21": -g12},
        m1={"31": 1j}, mm1={"13": -1j},
    )
    rows["22"] = _Row(
        m0={"22": -2 * g2, "12": -g12, "21": -g12, "32": 1j * O2, "23": -1j * O2},
    )
    rows["33"] = _Row(
        m0={"11": 2 * g1, "22": 2 * g2, "33": -2 * g3, "12": 2 * g12, "21": 2 * g12,
            "23": 1j * O2, "32": -1j * O2, "43": 1j * O3, "34": -1j * O3},
        m1={"31": -1j}, mm1={"13": 1j},
    )
    rows["12"] = _Row(
        m0={"12": -(g1 + g2 + 1j * W), "11": -g12, "22": -g12, "13": -1j * O2},
        m1={"32": 1j},
    )
    rows["13"] = _Row(
        m0={"13": -(g1 + g3 + 1j * (W - D2)), "23": -g12, "12": -1j * O2, "14": -1j * O3},
        m1={"33": 1j, "11": -1j},
    )
    rows["23"] = _Row(
        m0={"23": -(g2 + g3 - 1j * D2), "13": -g12, "33": 1j * O2, "22": -1j * O2,
            "24": -1j * O3},
        m1={"21": -1j},
    )
    rows["14"] = _Row(
        m0={"14": -(g1 + 1j * (W - D2 - D3)), "24": -g12, "13": -1j * O3},
        m1={"34": 1j},
    )
    rows["24"] = _Row(
        m0={"24": -(g2 - 1j * (D2 + D3)), "14": -g12, "34": 1j * O2, "23": -1j * O3},
    )
    # rho44 eliminated: i*O3*(rho44 - rho33) = i*O3*(1 - rho11 - rho22 - 2*rho33)
    rows["34"] = _Row(
        m0={"34": -(g3 - 1j * D3), "24": 1j * O2,
            "11": -1j * O3, "22": -1j * O3, "33": -2j * O3},
        mm1={"14": 1j},
        const0=1j * O3,
    )
    return rows


def _v_primary_rows(p: SystemParams) -> dict:
    g1, g2, g12 = p.gamma1, p.gamma2, p.gamma12
    O2 = p.Omega2
    D2, W = p.Delta2, p.W12

    rows = {}
    rows["11"] = _Row(
        m0={"11": -2 * g1, "12": -g12, "21": -g12},
        m1={"31": 1j}, mm1={"13": -1j},
    )
    rows["22"] = _Row(
        m0={"22": -2 * g2, "12": -g12, "21": -g12, "32": 1j * O2, "23": -1j * O2},
    )
    rows["12"] = _Row(
        m0={"12": -(g1 + g2 + 1j * W), "11": -g12, "22": -g12, "13": -1j * O2},
        m1={"32": 1j},
    )
    # rho33 eliminated: i*(rho33 - rho11) -> i*(1 - 2*rho11 - rho22) on the
    # probe harmonic, leaving a probe-locked constant.
    rows["13"] = _Row(
        m0={"13": -(g1 + 1j * (W - D2)), "23": -g12, "12": -1j * O2},
        m1={"11": -2j, "22": -1j},
        const1=1j,
    )
    # i*O2*(rho33 - rho22) -> i*O2*(1 - rho11 - 2*rho22)
    rows["23"] = _Row(
        m0={"23": -(g2 - 1j * D2), "13": -g12, "11": -1j * O2, "22": -2j * O2},
        m1={"21": -1j},
        const0=1j * O2,
    )
    return rows


def _assemble(rows: dict, labels: tuple) -> LiouvillianSet:
    # Generate conjugate rows for every off-diagonal primary equation.
    for label in list(rows):
        if label != _conj_label(label):
            rows[_conj_label(label)] = rows[label].conjugate()

    n = len(labels)
    idx = {label: k for k, label in enumerate(labels)}
    m0 = np.zeros((n, n), dtype=complex)
    m1 = np.zeros((n, n), dtype=complex)
    mm1 = np.zeros((n, n), dtype=complex)
    sigma = np.zeros(n, dtype=complex)
    sigma1 = np.zeros(n, dtype=complex)
    sigmam1 = np.zeros(n, dtype=complex)

    for label, row in rows.items():
        i = idx[label]
        for col, c in row.m0.items():
            m0[i, idx[col]] += c
        for col, c in row.m1.items():
            m1[i, idx[col]] += c
        for col, c in row.mm1.items():
            mm1[i, idx[col]] += c
        # d/dt R + Sigma = M R puts constants on the left with flipped sign.
        sigma[i] = -row.const0
        sigma1[i] = -row.const1
        sigmam1[i] = -row.constm1

    return LiouvillianSet(m0, m1, mm1, sigma, sigma1, sigmam1, labels)


def build_liouvillian(params: SystemParams) -> LiouvillianSet:
    """15-dimensional generator of the full four-level Y system."""
    if params.system_kind is not SystemKind.Y_FOUR_LEVEL:
        raise ParameterError(f"expected Y_FOUR_LEVEL params, got {params.system_kind}")
    return _assemble(_y_primary_rows(params), Y_LABELS)


def build_v_liouvillian(params: SystemParams) -> LiouvillianSet:
    """8-dimensional generator of the reduced three-level V system."""
    if params.system_kind is not SystemKind.V_THREE_LEVEL:
        raise ParameterError(f"expected V_THREE_LEVEL params, got {params.system_kind}")
    return _assemble(_v_primary_rows(params), V_LABELS)


def build_for(params: SystemParams) -> LiouvillianSet:
    if params.system_kind is SystemKind.Y_FOUR_LEVEL:
        return build_liouvillian(params)
    return build_v_liouvillian(params)


def hermitian_reconstruct(v: np.ndarray) -> np.ndarray:
    """Rebuild the full density matrix from a stacked element vector.

    The eliminated population is restored from the trace condition: a
    15-vector yields the 4x4 Y-system matrix (rho44 restored), an 8-vector
    the 3x3 V-system matrix (rho33 restored).
    """
    v = np.asarray(v, dtype=complex)
    if v.shape == (15,):
        labels, size = Y_LABELS, 4
    elif v.shape == (8,):
        labels, size = V_LABELS, 3
    else:
        raise ValueError(f"expected a 15- or 8-component vector, got shape {v.shape}")

    rho = np.zeros((size, size), dtype=complex)
    for label, value in zip(labels, v):
        i, j = int(label[0]) - 1, int(label[1]) - 1
        rho[i, j] = value
    rho[size - 1, size - 1] = 1.0 - np.trace(rho)
    return rho
