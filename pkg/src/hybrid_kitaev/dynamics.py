"""Quench protocol: zero-mode transfer across the segment interface.

The chain starts decoupled (J_h = 0) with the NN segment on the left; the
initial state is a superposition of that segment's zero-energy doublet.
Evolution runs under the coupled Hamiltonian (J_h > 0), and observables are
measured against the target state built from the switched, decoupled chain
whose NN segment (and hence its Majorana doublet) sits on the right.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NoZeroModes, NotNormalized
from .model import ChainSpec, Layout, build_bdg
from .spectral import (
    DEFAULT_TOL_ZERO,
    EigenSystem,
    eigensystem,
    majorana_combinations,
    ph_swap,
    site_probability,
    zero_mode_pairs,
)

#: Superposition conventions for combining a zero-energy doublet (z1, z2).
SUPERPOSITIONS = ("plus", "minus", "iplus")


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid [0, t_max] sampled every dt."""

    t_max: float = 50.0
    dt: float = 0.1

    def __post_init__(self) -> None:
        if self.t_max < 0 or self.dt <= 0:
            raise ValueError("require t_max >= 0 and dt > 0")

    @property
    def samples(self) -> int:
        return int(np.floor(self.t_max / self.dt)) + 1

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.samples) * self.dt


@dataclass(frozen=True)
class QuenchSetup:
    """Pre-quench, evolution, and target chains with their edge-mode states."""

    initial_spec: ChainSpec
    evolution_spec: ChainSpec
    target_spec: ChainSpec
    psi_i: np.ndarray
    psi_s: np.ndarray
    eig_evolution: EigenSystem = field(repr=False)


@dataclass(frozen=True)
class SpatioTemporalField:
    """Per-site probability of the evolved state over a time grid."""

    times: np.ndarray    # (samples,)
    sites: np.ndarray    # (L,), 1-based
    values: np.ndarray   # (samples, L), rows sum to 1


def _combine(z1: np.ndarray, z2: np.ndarray, superposition: str) -> np.ndarray:
    if superposition == "plus":
        psi = (z1 + z2) / np.sqrt(2.0)
    elif superposition == "minus":
        psi = (z1 - z2) / np.sqrt(2.0)
    elif superposition == "iplus":
        psi = (z1 + 1j * z2) / np.sqrt(2.0)
    else:
        raise ValueError(f"unknown superposition {superposition!r}, "
                         f"expected one of {SUPERPOSITIONS}")
    return psi / np.linalg.norm(psi)


def _segment_zero_state(
    spec: ChainSpec,
    segment_sites: slice,
    superposition: str,
    tol_zero: float,
) -> np.ndarray:
    """Superpose the zero doublet localized inside the given site range."""
    eig = eigensystem(build_bdg(spec))
    pairs = zero_mode_pairs(eig, tol_zero)
    if not pairs:
        raise NoZeroModes(
            f"no zero-energy pair at tol_zero={tol_zero:.1e} for {spec}"
        )
    L = spec.length
    for pair in pairs:
        phi_a, phi_b = majorana_combinations(eig, pair, tol_zero)
        weights = []
        for phi in (phi_a, phi_b):
            p = site_probability(phi).per_site
            weights.append(float(p[segment_sites].sum()))
        if min(weights) >= 0.99:
            z1, z2 = eig.vectors[:, pair[0]], eig.vectors[:, pair[1]]
            return _combine(z1, z2, superposition)
    raise NoZeroModes(
        f"no zero doublet localized in sites {segment_sites} for {spec}"
    )


def prepare_quench(
    L: int,
    L1: int,
    J_h: float,
    alpha: float,
    mu: float = 0.0,
    J: float = 1.0,
    delta: float = 1.0,
    superposition: str = "iplus",
    tol_zero: float = DEFAULT_TOL_ZERO,
) -> QuenchSetup:
    """Build the initial/evolution/target chains and their edge-mode states."""
    common = dict(length=L, split=L1, hopping=J, pairing=delta,
                  chemical_potential=mu, lr_exponent=alpha)
    initial = ChainSpec(layout=Layout.HYBRID_NN_LR, interface_coupling=0.0, **common)
    evolution = ChainSpec(layout=Layout.HYBRID_NN_LR, interface_coupling=J_h, **common)
    target = ChainSpec(layout=Layout.HYBRID_LR_NN, interface_coupling=0.0, **common)

    psi_i = _segment_zero_state(initial, slice(0, L1), superposition, tol_zero)
    psi_s = _segment_zero_state(target, slice(L1, L), superposition, tol_zero)
    eig_evolution = eigensystem(build_bdg(evolution))
    return QuenchSetup(initial_spec=initial, evolution_spec=evolution,
                       target_spec=target, psi_i=psi_i, psi_s=psi_s,
                       eig_evolution=eig_evolution)


def evolve(eig: EigenSystem, psi0: np.ndarray, t: float) -> np.ndarray:
    """Spectral propagation psi(t) = V exp(-i E t) V^T psi0."""
    if not np.isfinite(t):
        raise ValueError("time must be finite")
    coeffs = eig.vectors.T @ psi0
    psi_t = eig.vectors @ (np.exp(-1j * eig.energies * t) * coeffs)
    _check_norm(psi_t)
    return psi_t


def _check_norm(state: np.ndarray) -> None:
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > 1e-10:
        raise NotNormalized(f"state norm {norm!r} drifted from 1")


def _propagate_grid(eig: EigenSystem, psi0: np.ndarray,
                    times: np.ndarray) -> np.ndarray:
    """All psi(t) columns over the grid, shape (2L, samples)."""
    coeffs = eig.vectors.T @ psi0
    phases = np.exp(-1j * np.outer(eig.energies, times))
    states = eig.vectors @ (phases * coeffs[:, None])
    norms = np.linalg.norm(states, axis=0)
    if np.max(np.abs(norms - 1.0)) > 1e-10:
        raise NotNormalized("norm drift beyond 1e-10 during propagation")
    return states


def fidelity_series(setup: QuenchSetup, grid: TimeGrid) -> tuple[np.ndarray, np.ndarray]:
    """F(t) = |<psi_s|psi_i(t)>|^2 on the grid."""
    times = grid.times
    states = _propagate_grid(setup.eig_evolution, setup.psi_i, times)
    overlaps = np.conj(setup.psi_s) @ states
    F = np.abs(overlaps) ** 2
    if np.any(F < -1e-12) or np.any(F > 1.0 + 1e-10):
        raise AssertionError("fidelity left [0, 1]")
    return times, np.clip(F, 0.0, 1.0)


def dynamical_rotation_series(
    setup: QuenchSetup,
    theta: float = 1.0,
    grid: TimeGrid = TimeGrid(),
) -> tuple[np.ndarray, np.ndarray]:
    """R(t) = <psi_s| (cos(theta) - i sin(theta) C) |psi_i(t)> on the grid."""
    if not np.isfinite(theta):
        raise ValueError("theta must be finite")
    times = grid.times
    states = _propagate_grid(setup.eig_evolution, setup.psi_i, times)
    direct = np.conj(setup.psi_s) @ states
    # <psi_s|C psi(t)> with C(u, v) = (conj v, conj u)
    conj_part = np.conj(ph_swap(setup.psi_s) @ states)
    R = np.cos(theta) * direct - 1j * np.sin(theta) * conj_part
    if np.any(np.abs(R) > 1.0 + 1e-9):
        raise AssertionError("|R(t)| exceeded 1")
    return times, R


def apply_rotation(state: np.ndarray, theta: float) -> np.ndarray:
    """U_PH(theta) = exp(-i theta C) acting on a state: cos(theta) - i sin(theta) C."""
    return np.cos(theta) * state - 1j * np.sin(theta) * np.conj(ph_swap(state))


def ipr(state: np.ndarray) -> float:
    """Inverse participation ratio over the 2L Nambu site components."""
    _check_norm(state)
    return float(np.sum(np.abs(state) ** 4))


def ipr_series(setup: QuenchSetup, grid: TimeGrid) -> tuple[np.ndarray, np.ndarray]:
    """IPR of the evolved state on the grid."""
    times = grid.times
    states = _propagate_grid(setup.eig_evolution, setup.psi_i, times)
    values = np.sum(np.abs(states) ** 4, axis=0)
    d = states.shape[0]
    if np.any(values < 1.0 / d - 1e-12) or np.any(values > 1.0 + 1e-12):
        raise AssertionError("IPR left [1/(2L), 1]")
    return times, values


def spatiotemporal_profile(setup: QuenchSetup, grid: TimeGrid) -> SpatioTemporalField:
    """Per-site probability of the evolved state over the grid."""
    times = grid.times
    states = _propagate_grid(setup.eig_evolution, setup.psi_i, times)
    L = setup.initial_spec.length
    values = (np.abs(states[:L]) ** 2 + np.abs(states[L:]) ** 2).T
    row_sums = values.sum(axis=1)
    if np.max(np.abs(row_sums - 1.0)) > 1e-9:
        raise AssertionError("heatmap rows do not sum to 1")
    return SpatioTemporalField(times=times,
                               sites=np.arange(1, L + 1),
                               values=values)
