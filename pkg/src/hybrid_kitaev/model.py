"""Chain parameterizations and BdG matrix construction.

A chain is described by a ChainSpec: L sites with open boundaries, a
nearest-neighbor (NN) coupled region and/or a region with long-range (LR)
superconducting pairing decaying as 1/d^alpha, optionally joined by an
interface coupling J_h acting on the bond between the two segments.

The quadratic Hamiltonian H = sum A_jk c_j^dag c_k + sum_{j<k} D_jk
(c_j c_k + h.c.) (constant terms dropped) is stored as the 2L x 2L real
symmetric matrix

    H_BdG = [[ A,  B],
             [-B, -A]],   B = D - D^T,

in the Nambu ordering (c_1 .. c_L, c_1^dag .. c_L^dag), with the convention
H = 1/2 Psi^dag H_BdG Psi.  The eigenvalues of H_BdG are the quasiparticle
excitation energies +-E_k directly.

Normalization: the quoted couplings J, Delta, J_h enter the matrix at half
weight relative to the chemical potential (matrix elements -J/2, Delta/2,
J_h/2 against a diagonal of -mu).  In these units the nearest-neighbor
chain at Delta = J has its topological phase transitions at mu = +-J and a
sweet-spot (mu = 0) quasiparticle band at E = J.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec


class Layout(enum.Enum):
    """Segment arrangement of the chain."""

    PURE_NN = "nn"
    PURE_LR = "lr"
    HYBRID_NN_LR = "hybrid-nn-lr"  # NN segment left, LR segment right
    HYBRID_LR_NN = "hybrid-lr-nn"  # switched: LR segment left, NN segment right

    @property
    def is_hybrid(self) -> bool:
        return self in (Layout.HYBRID_NN_LR, Layout.HYBRID_LR_NN)


@dataclass(frozen=True)
class ChainSpec:
    """Full parameterization of one chain instance.

    ``split`` is the length of the left segment for hybrid layouts (NN for
    HYBRID_NN_LR, LR for HYBRID_LR_NN); it is ignored for pure layouts.
    ``interface_coupling`` (J_h) only enters hybrid layouts, on the bond
    between sites split and split+1 (1-based).
    """

    length: int
    layout: Layout
    split: int = 0
    hopping: float = 1.0
    pairing: float = 1.0
    chemical_potential: float = 0.0
    lr_exponent: float = 1.0
    interface_coupling: float = 0.0


def validate_spec(spec: ChainSpec) -> ChainSpec:
    """Check all ChainSpec invariants; return the spec unchanged if valid."""
    if not isinstance(spec.length, int) or spec.length < 1:
        raise InvalidSpec(f"length must be a positive integer, got {spec.length!r}")
    if spec.layout.is_hybrid:
        if not isinstance(spec.split, int) or not (1 <= spec.split <= spec.length - 1):
            raise InvalidSpec(
                f"split must satisfy 1 <= split <= length-1 for hybrid layouts, "
                f"got split={spec.split!r} with length={spec.length}"
            )
    for name in ("hopping", "pairing", "chemical_potential", "lr_exponent",
                 "interface_coupling"):
        value = getattr(spec, name)
        if not math.isfinite(value):
            raise InvalidSpec(f"{name} must be finite, got {value!r}")
    if spec.lr_exponent <= 0:
        raise InvalidSpec(f"lr_exponent must be > 0, got {spec.lr_exponent!r}")
    return spec


@dataclass(frozen=True)
class BdGMatrix:
    """2L x 2L real symmetric BdG matrix with its site count."""

    matrix: np.ndarray
    n_sites: int

    @property
    def a_block(self) -> np.ndarray:
        L = self.n_sites
        return self.matrix[:L, :L]

    @property
    def b_block(self) -> np.ndarray:
        L = self.n_sites
        return self.matrix[:L, L:]


def _nn_bonds(A: np.ndarray, D: np.ndarray, start: int, stop: int,
              J: float, delta: float) -> None:
    """NN hopping and pairing on bonds (j, j+1) for sites start..stop-1 (0-based)."""
    for j in range(start, stop - 1):
        A[j, j + 1] = A[j + 1, j] = -J
        D[j, j + 1] += delta


def _lr_segment(A: np.ndarray, D: np.ndarray, start: int, stop: int,
                J: float, delta: float, alpha: float) -> None:
    """NN hopping plus algebraically decaying pairing on sites start..stop-1."""
    for j in range(start, stop - 1):
        A[j, j + 1] = A[j + 1, j] = -J
        for k in range(j + 1, stop):
            D[j, k] += delta / float(k - j) ** alpha


def coupling_blocks(spec: ChainSpec) -> tuple[np.ndarray, np.ndarray]:
    """Return (A, D): normal block and pairing coefficients D_jk (j < k)."""
    validate_spec(spec)
    L = spec.length
    J, delta = spec.hopping, spec.pairing
    mu, alpha = spec.chemical_potential, spec.lr_exponent

    # Half-weight convention for the couplings (see module docstring):
    # critical points of the NN chain land at mu = +-J.
    J, delta = 0.5 * J, 0.5 * delta

    A = np.zeros((L, L))
    D = np.zeros((L, L))
    A[np.diag_indices(L)] = -mu

    if spec.layout is Layout.PURE_NN:
        _nn_bonds(A, D, 0, L, J, delta)
    elif spec.layout is Layout.PURE_LR:
        _lr_segment(A, D, 0, L, J, delta, alpha)
    else:
        # Both hybrid layouts carry the same functional form per segment;
        # only which side is long-range differs.
        L1 = spec.split
        if spec.layout is Layout.HYBRID_NN_LR:
            _nn_bonds(A, D, 0, L1, J, delta)
            _lr_segment(A, D, L1, L, J, delta, alpha)
        else:  # HYBRID_LR_NN: switched configuration
            _lr_segment(A, D, 0, L1, J, delta, alpha)
            _nn_bonds(A, D, L1, L, J, delta)
        # Interface bond: hopping +J_h, and the pairing term enters with the
        # creation operators ordered as c^dag_{L1} c^dag_{L1+1}, which is
        # -J_h in the c_j c_k + h.c. coefficient convention used for D.
        Jh = 0.5 * spec.interface_coupling
        A[L1 - 1, L1] = A[L1, L1 - 1] = +Jh
        D[L1 - 1, L1] += -Jh
    return A, D


def build_bdg(spec: ChainSpec) -> BdGMatrix:
    """Construct the 2L x 2L BdG matrix for the given chain."""
    A, D = coupling_blocks(spec)
    B = D - D.T
    H = np.block([[A, B], [-B, -A]])
    return BdGMatrix(matrix=H, n_sites=spec.length)

