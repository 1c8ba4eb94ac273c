"""Two-qubit entanglement of formation.

Pure states get the closed form based on the Bloch-vector norm of either
single-qubit reduction; mixed states get the exact Wootters concurrence
formula, which serves as the independent reference for every
decomposition-based value computed elsewhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from egf.qlinalg import (
    DensityMatrix,
    Ensemble,
    PureState,
    binary_entropy,
)

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

_YY = np.kron(PAULI_Y, PAULI_Y)

WEIGHT_CUTOFF = 1e-12  # ensemble components below this are zero matrices


@dataclass(frozen=True)
class PolarizationVector:
    """Bloch vector (xi_x, xi_y, xi_z) of a single-qubit state."""

    components: tuple[float, float, float]
    norm: float


@dataclass(frozen=True)
class BipartitePureAnalysis:
    """Shared Bloch norm xi, E_F, and concurrence of a 2-qubit pure state."""

    xi: float
    ef: float
    concurrence: float


def polarization(rho: DensityMatrix) -> PolarizationVector:
    """Bloch vector of a 2x2 density matrix: xi_i = Tr(rho sigma_i)."""
    if rho.dim != 2:
        raise ValueError(f"polarization needs a single-qubit state, got dimension {rho.dim}")
    comps = tuple(float(np.trace(rho.mat @ s).real) for s in (PAULI_X, PAULI_Y, PAULI_Z))
    norm = math.sqrt(sum(c * c for c in comps))
    if norm > 1.0 + 1e-10:
        raise ValueError(f"Bloch vector norm {norm!r} exceeds 1")
    return PolarizationVector(comps, min(norm, 1.0))


def ef_pure_2qubit(psi: PureState) -> BipartitePureAnalysis:
    """Closed-form E_F of a 2-qubit pure state.

    For amplitudes (a, b, c, d) the concurrence is 2|ad - bc|, both
    single-qubit reductions share the Bloch norm xi = sqrt(1 - C^2), and
    E_F = H((1 - xi)/2).
    """
    if psi.n != 2:
        raise ValueError(f"expected a 2-qubit state, got n={psi.n}")
    a, b, c, d = psi.amps
    concurrence = min(2.0 * abs(a * d - b * c), 1.0)
    xi = math.sqrt(max(1.0 - concurrence * concurrence, 0.0))
    return BipartitePureAnalysis(xi, binary_entropy((1.0 - xi) / 2.0), concurrence)


def ef_ensemble(ens: Ensemble) -> float:
    """Weighted average E_F over a fixed 2-qubit pure-state decomposition.

    This upper-bounds the E_F of the averaged mixed state, which minimizes
    over all decompositions.
    """
    if ens.n != 2:
        raise ValueError(f"expected 2-qubit components, got n={ens.n}")
    return sum(w * ef_pure_2qubit(s).ef for w, s in ens.components if w >= WEIGHT_CUTOFF)


def wootters_ef_mixed(rho: DensityMatrix | np.ndarray) -> float:
    """Exact E_F of an arbitrary 2-qubit density matrix.

    Uses the concurrence C = max(0, mu1 - mu2 - mu3 - mu4), where mu_i are
    the descending square roots of the eigenvalues of
    rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
    """
    mat = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if mat.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {mat.shape}")
    product = mat @ _YY @ mat.conj() @ _YY
    values = np.clip(np.linalg.eigvals(product).real, 0.0, None)
    # The product's noise-floor eigenvalues (~1e-16) would contribute ~1e-8
    # after the square root; genuine eigenvalues sit far above this cutoff.
    values[values < np.max(values) * 1e-13] = 0.0
    mus = np.sort(np.sqrt(values))[::-1]
    concurrence = min(max(mus[0] - mus[1] - mus[2] - mus[3], 0.0), 1.0)
    return binary_entropy((1.0 + math.sqrt(1.0 - concurrence * concurrence)) / 2.0)
