"""Hybrid Kitaev chain: BdG spectra, Majorana edge modes, and quench dynamics."""

from .errors import (
    ConvergenceFailure,
    HybridKitaevError,
    InvalidSpec,
    MismatchBeyondTol,
    NoZeroModes,
    NotAZeroPair,
    NotNormalized,
    TooLarge,
)
from .model import BdGMatrix, ChainSpec, Layout, build_bdg, validate_spec
from .spectral import (
    EigenSystem,
    ModeSet,
    SiteDistribution,
    classify_modes,
    eigensystem,
    majorana_combinations,
    majorana_polarization,
    particle_hole_map,
    site_probability,
    spectrum_sweep,
    zero_mode_pairs,
)
from .dynamics import (
    QuenchSetup,
    SpatioTemporalField,
    TimeGrid,
    apply_rotation,
    dynamical_rotation_series,
    evolve,
    fidelity_series,
    ipr,
    ipr_series,
    prepare_quench,
    spatiotemporal_profile,
)
from .oracle import OracleReport, fock_hamiltonian, verify_bdg_against_fock

__version__ = "0.1.0"

__all__ = [
    "BdGMatrix", "ChainSpec", "Layout", "build_bdg", "validate_spec",
    "EigenSystem", "ModeSet", "SiteDistribution", "classify_modes",
    "eigensystem", "majorana_combinations", "majorana_polarization",
    "particle_hole_map", "site_probability", "spectrum_sweep",
    "zero_mode_pairs",
    "QuenchSetup", "SpatioTemporalField", "TimeGrid", "apply_rotation",
    "dynamical_rotation_series", "evolve", "fidelity_series", "ipr",
    "ipr_series", "prepare_quench", "spatiotemporal_profile",
    "OracleReport", "fock_hamiltonian", "verify_bdg_against_fock",
    "ConvergenceFailure", "HybridKitaevError", "InvalidSpec",
    "MismatchBeyondTol", "NoZeroModes", "NotAZeroPair", "NotNormalized",
    "TooLarge",
    "__version__",
]
