"""Exception types shared across the package."""


class HybridKitaevError(Exception):
    """Base class for all library errors."""


class InvalidSpec(HybridKitaevError):
    """A ChainSpec field violates its invariants."""


class ConvergenceFailure(HybridKitaevError):
    """Eigensolver residuals exceeded tolerance."""


class NotAZeroPair(HybridKitaevError):
    """Requested eigenstate pair is not a particle-hole related zero pair."""


class NotNormalized(HybridKitaevError):
    """State vector norm differs from 1 beyond tolerance."""


class NoZeroModes(HybridKitaevError):
    """A chain expected to host zero modes has none at the given tolerance."""


class TooLarge(HybridKitaevError):
    """Fock-space construction requested beyond the supported system size."""


class MismatchBeyondTol(HybridKitaevError):
    """BdG and Fock excitation spectra disagree beyond tolerance."""
