import numpy as np
import pytest

from yprobe.liouvillian import (
    V_LABELS,
    Y_LABELS,
    build_for,
    build_liouvillian,
    build_v_liouvillian,
    hermitian_reconstruct,
)
from yprobe.params import ParameterError, SystemKind, SystemParams


def y_params(**kw):
    base = dict(gamma1=0.01, gamma2=1.0, gamma3=0.01, theta_deg=15.0,
                W12=-4.0, Omega1=1e-3, Omega2=2.8284271247461903,
                Omega3=2.8284271247461903)
    base.update(kw)
    return SystemParams(**base)


def v_params(**kw):
    base = dict(gamma1=0.01, gamma2=1.0, gamma3=0.01, theta_deg=15.0,
                W12=-4.0, Omega1=1e-3, Omega2=4.0, Omega3=0.0,
                system_kind=SystemKind.V_THREE_LEVEL)
    base.update(kw)
    return SystemParams(**base)


def random_hermitian_vector(rng, labels):
    """Element vector of a random Hermitian matrix with unit trace."""
    size = 4 if len(labels) == 15 else 3
    a = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    rho = a @ a.conj().T
    rho /= np.trace(rho).real
    return np.array([rho[int(l[0]) - 1, int(l[1]) - 1] for l in labels])


class TestYBuilder:
    def test_excited_population_row(self):
        p = y_params()
        lv = build_liouvillian(p)
        i = lv.index("11")
        assert lv.m0[i, lv.index("11")] == -2 * p.gamma1
        assert lv.m0[i, lv.index("12")] == -p.gamma12
        assert lv.m0[i, lv.index("21")] == -p.gamma12

    def test_sigma_has_two_entries(self):
        p = y_params()
        lv = build_liouvillian(p)
        expected = np.zeros(15, dtype=complex)
        expected[8] = -1j * p.Omega3   # rho34 row (index 9, 1-based)
        expected[14] = 1j * p.Omega3   # rho43 row (index 15)
        assert np.array_equal(lv.sigma, expected)
        assert not lv.sigma1.any() and not lv.sigma_minus1.any()

    def test_perpendicular_dipoles_remove_cross_damping(self):
        lv0 = build_liouvillian(y_params(theta_deg=90.0))
        assert lv0.m0[lv0.index("11"), lv0.index("12")] == 0.0
        # every entry that changes with theta carries gamma12 and must be
        # exactly zero for perpendicular dipoles
        lv1 = build_liouvillian(y_params(theta_deg=15.0))
        support = lv1.m0 != lv0.m0
        assert support.any()
        assert not lv0.m0[support].any()

    def test_probe_matrices_independent_of_omega1(self):
        a = build_liouvillian(y_params(Omega1=1e-3))
        b = build_liouvillian(y_params(Omega1=0.7))
        assert np.array_equal(a.m1, b.m1)
        assert np.array_equal(a.m_minus1, b.m_minus1)
        assert np.array_equal(a.m0, b.m0)

    def test_wrong_kind_rejected(self):
        with pytest.raises(ParameterError):
            build_liouvillian(v_params())
        with pytest.raises(ParameterError):
            build_v_liouvillian(y_params())

    def test_trace_evolution_matches_ground_state_feeding(self):
        # After eliminating rho44, d(rho11+rho22+rho33)/dt must equal
        # -d(rho44)/dt = -(2 gamma3 rho33 - i Omega3 (rho43 - rho34)).
        rng = np.random.default_rng(2)
        p = y_params()
        lv = build_liouvillian(p)
        for t in (0.0, 1.3, 7.7):
            v = random_hermitian_vector(rng, Y_LABELS)
            deriv = lv.m_at(p.Omega1, 1.0, p.Phi, t) @ v - lv.sigma_at(p.Omega1, 1.0, p.Phi, t)
            lhs = deriv[:3].sum()
            rho34 = v[lv.index("34")]
            rho43 = v[lv.index("43")]
            rho33 = v[lv.index("33")]
            rhs = -(2 * p.gamma3 * rho33 - 1j * p.Omega3 * (rho43 - rho34))
            assert abs(lhs - rhs) < 1e-12

    def test_hermiticity_propagation(self):
        rng = np.random.default_rng(4)
        for labels, params in ((Y_LABELS, y_params()), (V_LABELS, v_params())):
            lv = build_for(params)
            v = random_hermitian_vector(rng, labels)
            deriv = (lv.m_at(params.Omega1, 0.8, params.Phi, 1.3) @ v
                     - lv.sigma_at(params.Omega1, 0.8, params.Phi, 1.3))
            for k, label in enumerate(labels):
                conj_k = labels.index(label[::-1])
                assert deriv[k] == pytest.approx(np.conj(deriv[conj_k]), abs=1e-13)

    def test_uncoupled_excited_state_stays_empty(self):
        # theta = 90 and no probe: |1> is disconnected, zero steady population
        from yprobe.floquet import steady_state
        lv = build_liouvillian(y_params(theta_deg=90.0, Omega1=0.0))
        r0 = steady_state(lv)
        assert abs(r0[0]) < 1e-12


class TestVBuilder:
    def test_pump_coherence_row(self):
        p = v_params(Delta2=0.3)
        lv = build_v_liouvillian(p)
        i = lv.index("23")
        assert lv.m0[i, i] == -(p.gamma2 - 1j * p.Delta2)
        assert lv.sigma[i] == -1j * p.Omega2

    def test_probe_constant_lands_in_harmonic_sigma(self):
        p = v_params()
        lv = build_v_liouvillian(p)
        assert lv.sigma1[lv.index("13")] == -1j
        assert lv.sigma_minus1[lv.index("31")] == 1j
        assert np.count_nonzero(lv.sigma1) == 1
        assert np.count_nonzero(lv.sigma_minus1) == 1

    def test_full_decoupling_without_interference_or_pump(self):
        lv = build_v_liouvillian(v_params(theta_deg=90.0, Omega2=0.0))
        i = lv.index("11")
        others = [k for k in range(8) if k != i]
        assert not lv.m0[i, others].any()
        assert not lv.m0[others, i].any()


class TestHermitianReconstruct:
    def test_zero_vector_gives_pure_ground_state(self):
        rho = hermitian_reconstruct(np.zeros(15))
        assert rho[3, 3] == 1.0
        assert np.count_nonzero(rho) == 1

    def test_conjugate_pair_is_hermitian(self):
        v = np.zeros(15, dtype=complex)
        v[3] = 1j    # rho12
        v[9] = -1j   # rho21
        rho = hermitian_reconstruct(v)
        assert rho[0, 1] == np.conj(rho[1, 0])

    def test_physical_steady_state_is_hermitian_unit_trace(self):
        from yprobe.floquet import steady_state
        lv = build_liouvillian(y_params(Omega1=0.0))
        rho = hermitian_reconstruct(steady_state(lv))
        assert np.abs(rho - rho.conj().T).max() < 1e-12
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)

    def test_v_vector_reconstructs_3x3(self):
        from yprobe.floquet import steady_state
        lv = build_v_liouvillian(v_params(Omega1=0.0))
        rho = hermitian_reconstruct(steady_state(lv))
        assert rho.shape == (3, 3)
        assert np.abs(rho - rho.conj().T).max() < 1e-12

    def test_bad_length_rejected(self):
        with pytest.raises(ValueError):
            hermitian_reconstruct(np.zeros(10))
