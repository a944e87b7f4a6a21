"""Quench protocol: preparation, propagation, and observables."""

import numpy as np
import pytest

from hybrid_kitaev import (
    ChainSpec,
    Layout,
    NoZeroModes,
    TimeGrid,
    apply_rotation,
    build_bdg,
    dynamical_rotation_series,
    eigensystem,
    evolve,
    fidelity_series,
    ipr,
    ipr_series,
    prepare_quench,
    site_probability,
    spatiotemporal_profile,
)

L, L1 = 60, 30


@pytest.fixture(scope="module")
def coupled_setup():
    return prepare_quench(L, L1, J_h=0.5, alpha=0.7)


@pytest.fixture(scope="module")
def decoupled_setup():
    return prepare_quench(L, L1, J_h=0.0, alpha=0.7)


class TestTimeGrid:
    def test_sample_count(self):
        assert TimeGrid(50.0, 0.1).samples == 501
        assert TimeGrid(0.0, 0.1).samples == 1

    def test_rejects_bad_grid(self):
        with pytest.raises(ValueError):
            TimeGrid(-1.0, 0.1)
        with pytest.raises(ValueError):
            TimeGrid(1.0, 0.0)


class TestPrepareQuench:
    def test_initial_state_in_left_segment(self, coupled_setup):
        p = site_probability(coupled_setup.psi_i).per_site
        assert p[:L1].sum() >= 0.99

    def test_target_state_in_right_segment(self, coupled_setup):
        p = site_probability(coupled_setup.psi_s).per_site
        assert p[L1:].sum() >= 0.99

    def test_specs_wired_correctly(self, coupled_setup):
        assert coupled_setup.initial_spec.interface_coupling == 0.0
        assert coupled_setup.evolution_spec.interface_coupling == 0.5
        assert coupled_setup.target_spec.layout is Layout.HYBRID_LR_NN
        assert coupled_setup.target_spec.interface_coupling == 0.0

    def test_trivial_phase_has_no_zero_modes(self):
        with pytest.raises(NoZeroModes):
            prepare_quench(L, L1, J_h=0.5, alpha=0.7, mu=2.0)

    def test_unknown_superposition_rejected(self):
        with pytest.raises(ValueError):
            prepare_quench(L, L1, J_h=0.5, alpha=0.7, superposition="sideways")


class TestEvolve:
    def test_zero_time_is_identity(self, coupled_setup):
        psi = evolve(coupled_setup.eig_evolution, coupled_setup.psi_i, 0.0)
        np.testing.assert_allclose(psi, coupled_setup.psi_i, atol=1e-12)

    def test_eigenvector_is_stationary(self, coupled_setup):
        eig = coupled_setup.eig_evolution
        v = eig.vectors[:, 3].astype(complex)
        psi = evolve(eig, v, 2.5)
        np.testing.assert_allclose(np.abs(psi), np.abs(v), atol=1e-12)
        np.testing.assert_allclose(psi, np.exp(-1j * eig.energies[3] * 2.5) * v,
                                   atol=1e-10)

    def test_norm_preserved(self, coupled_setup):
        psi = evolve(coupled_setup.eig_evolution, coupled_setup.psi_i, 7.3)
        assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-10)

    def test_rejects_nonfinite_time(self, coupled_setup):
        with pytest.raises(ValueError):
            evolve(coupled_setup.eig_evolution, coupled_setup.psi_i,
                   float("inf"))


class TestFidelity:
    def test_decoupled_fidelity_stays_zero(self, decoupled_setup):
        _, F = fidelity_series(decoupled_setup, TimeGrid(50.0, 0.5))
        assert np.all(F < 1e-6)

    def test_bounds_and_shape(self, coupled_setup):
        t, F = fidelity_series(coupled_setup, TimeGrid(10.0, 0.1))
        assert t.shape == F.shape == (101,)
        assert np.all(F >= 0.0) and np.all(F <= 1.0)

    def test_transfer_happens_when_coupled(self, coupled_setup):
        _, F = fidelity_series(coupled_setup, TimeGrid(50.0, 0.1))
        assert F.max() > 0.05

    def test_sample_points_exact_under_refinement(self, coupled_setup):
        # Spectral propagation is exact at each sample time, so a finer
        # grid reproduces the coarse-grid values at shared times.
        _, F1 = fidelity_series(coupled_setup, TimeGrid(10.0, 0.2))
        _, F2 = fidelity_series(coupled_setup, TimeGrid(10.0, 0.1))
        np.testing.assert_allclose(F1, F2[::2], atol=1e-12)


class TestDynamicalRotation:
    def test_zero_angle_reduces_to_fidelity(self, coupled_setup):
        grid = TimeGrid(10.0, 0.1)
        _, F = fidelity_series(coupled_setup, grid)
        _, R = dynamical_rotation_series(coupled_setup, theta=0.0, grid=grid)
        np.testing.assert_allclose(np.abs(R) ** 2, F, atol=1e-12)

    def test_magnitude_bounded(self, coupled_setup):
        _, R = dynamical_rotation_series(coupled_setup, theta=1.0,
                                         grid=TimeGrid(20.0, 0.2))
        assert np.all(np.abs(R) <= 1.0 + 1e-9)

    def test_rotation_of_antisymmetric_eigenstate(self):
        # On a C-eigenstate with eigenvalue -1 the rotation acts as a
        # phase: exp(-i theta C) phi = (cos theta + i sin theta) phi.
        phi = np.zeros(8, dtype=complex)
        phi[0], phi[4] = 1.0, -1.0     # u = -v: C phi = -phi
        phi /= np.linalg.norm(phi)
        theta = 0.8
        rotated = apply_rotation(phi, theta)
        np.testing.assert_allclose(rotated,
                                   (np.cos(theta) + 1j * np.sin(theta)) * phi,
                                   atol=1e-12)

    def test_composition_identity(self):
        # C is antilinear with C^2 = 1, so two rotations compose as
        # R(a) R(b) = cos(a - b) - i sin(a + b) C rather than additively.
        rng = np.random.default_rng(5)
        phi = rng.normal(size=8) + 1j * rng.normal(size=8)
        phi /= np.linalg.norm(phi)
        a, b = 0.9, 0.3
        lhs = apply_rotation(apply_rotation(phi, b), a)
        c_phi = np.conj(np.concatenate([phi[4:], phi[:4]]))
        rhs = np.cos(a - b) * phi - 1j * np.sin(a + b) * c_phi
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)


class TestIpr:
    def test_single_component(self):
        state = np.zeros(10, dtype=complex)
        state[4] = 1.0
        assert ipr(state) == pytest.approx(1.0)

    def test_uniform_state(self):
        state = np.full(10, 1 / np.sqrt(10), dtype=complex)
        assert ipr(state) == pytest.approx(0.1)

    def test_equal_split(self):
        state = np.zeros(10, dtype=complex)
        state[0] = state[7] = 1 / np.sqrt(2)
        assert ipr(state) == pytest.approx(0.5)

    def test_series_starts_at_initial_value(self, coupled_setup):
        _, values = ipr_series(coupled_setup, TimeGrid(5.0, 0.1))
        assert values[0] == pytest.approx(ipr(coupled_setup.psi_i), abs=1e-12)
        assert np.all(values >= 1.0 / (2 * L) - 1e-12)
        assert np.all(values <= 1.0 + 1e-12)


class TestSpatioTemporalProfile:
    def test_rows_normalized(self, coupled_setup):
        field = spatiotemporal_profile(coupled_setup, TimeGrid(10.0, 0.5))
        np.testing.assert_allclose(field.values.sum(axis=1), 1.0, atol=1e-9)

    def test_initial_row_on_left_segment_edges(self, coupled_setup):
        field = spatiotemporal_profile(coupled_setup, TimeGrid(1.0, 0.5))
        row0 = field.values[0]
        assert row0[0] + row0[L1 - 1] >= 0.99

    def test_decoupled_state_never_crosses_interface(self, decoupled_setup):
        field = spatiotemporal_profile(decoupled_setup, TimeGrid(50.0, 1.0))
        assert np.max(field.values[:, L1:].sum(axis=1)) < 1e-10

    def test_axes(self, coupled_setup):
        field = spatiotemporal_profile(coupled_setup, TimeGrid(2.0, 0.5))
        assert field.values.shape == (5, L)
        np.testing.assert_array_equal(field.sites, np.arange(1, L + 1))
