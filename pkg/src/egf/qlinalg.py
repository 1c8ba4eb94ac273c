"""Dense complex linear algebra over labeled qubits.

States are amplitude vectors indexed by basis integers with the first
qubit as the most significant bit, so for three qubits ``amps[0b011]``
is the coefficient of ``|011>``. All entropies are base 2.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

NORM_FIX_TOL = 1e-6        # construction renormalizes up to this drift
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-9
EIG_CLAMP_TOL = 1e-10      # eigenvalue excursions past [0, 1] tolerated
SPECTRUM_SUM_TOL = 1e-9
UNITARY_TOL = 1e-10
JACOBI_OFF_TOL = 1e-13     # off-diagonal Frobenius norm target
JACOBI_MAX_SWEEPS = 100
MAX_QUBITS = 10


class NormalizationError(ValueError):
    """State or ensemble weights too far from normalized to repair."""


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach its off-diagonal threshold."""


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized pure state of ``n`` qubits (``2**n`` complex amplitudes)."""

    n: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {self.n}")
        amps = np.asarray(self.amps, dtype=complex).reshape(-1)
        if amps.size != 2**self.n:
            raise ValueError(f"expected {2**self.n} amplitudes, got {amps.size}")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_FIX_TOL:
            raise NormalizationError(f"squared norm {norm_sq!r} is not within {NORM_FIX_TOL} of 1")
        amps = amps / math.sqrt(norm_sq)
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_amplitudes(cls, amps: Sequence[complex]) -> "PureState":
        arr = np.asarray(amps, dtype=complex).reshape(-1)
        n = int(round(math.log2(arr.size))) if arr.size else 0
        if arr.size == 0 or 2**n != arr.size:
            raise ValueError(f"amplitude count {arr.size} is not a power of two")
        return cls(n, arr)

    def projector(self, labels: Sequence[str] | None = None) -> "DensityMatrix":
        return projector(self, labels)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace matrix over an ordered tuple of qubit labels."""

    qubits: tuple[str, ...]
    mat: np.ndarray

    def __post_init__(self) -> None:
        qubits = tuple(self.qubits)
        if not qubits or len(set(qubits)) != len(qubits):
            raise ValueError(f"qubit labels must be nonempty and unique, got {qubits!r}")
        dim = 2 ** len(qubits)
        mat = np.asarray(self.mat, dtype=complex)
        if mat.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix for labels {qubits!r}, got {mat.shape}")
        herm_defect = float(np.max(np.abs(mat - mat.conj().T)))
        if herm_defect > HERMITIAN_TOL:
            raise ValueError(f"matrix is not Hermitian (defect {herm_defect:.3e})")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {trace!r} is not within {TRACE_TOL} of 1")
        mat = mat.copy()
        mat.flags.writeable = False
        object.__setattr__(self, "qubits", qubits)
        object.__setattr__(self, "mat", mat)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Descending, clamped eigenvalues of a unit-trace Hermitian matrix."""

    eigenvalues: tuple[float, ...]

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "Spectrum":
        clamped = []
        for v in values:
            v = float(v)
            if v < -EIG_CLAMP_TOL or v > 1.0 + EIG_CLAMP_TOL:
                raise ValueError(f"eigenvalue {v!r} outside [0, 1] beyond tolerance {EIG_CLAMP_TOL}")
            clamped.append(min(max(v, 0.0), 1.0))
        total = sum(clamped)
        if abs(total - 1.0) > SPECTRUM_SUM_TOL:
            raise ValueError(f"eigenvalue sum {total!r} is not within {SPECTRUM_SUM_TOL} of 1")
        if total > 0.0 and total != 1.0:
            clamped = [min(v / total, 1.0) for v in clamped]
        clamped.sort(reverse=True)
        return cls(tuple(clamped))

    def entropy(self) -> float:
        """Shannon entropy (base 2) of the eigenvalue distribution.

        Values at the eigensolver's noise floor are treated as exact zeros,
        so pure states report exactly 0.
        """
        return -sum(v * math.log2(v) for v in self.eigenvalues if v > 1e-14)


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Pure-state decomposition: positive weights summing to 1."""

    components: tuple[tuple[float, PureState], ...]

    def __post_init__(self) -> None:
        comps = tuple((float(w), s) for w, s in self.components)
        if not comps:
            raise ValueError("ensemble needs at least one component")
        if any(w <= 0.0 for w, _ in comps):
            raise ValueError("ensemble weights must be positive")
        total = sum(w for w, _ in comps)
        if abs(total - 1.0) > SPECTRUM_SUM_TOL:
            raise NormalizationError(f"ensemble weights sum to {total!r}, not 1")
        n = comps[0][1].n
        if any(s.n != n for _, s in comps):
            raise ValueError("ensemble components must share one qubit count")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return self.components[0][1].n


def binary_entropy(x: float) -> float:
    """H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0."""
    x = float(x)
    if x < -1e-12 or x > 1.0 + 1e-12:
        raise ValueError(f"binary entropy argument {x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def projector(psi: PureState, labels: Sequence[str] | None = None) -> DensityMatrix:
    """Rank-1 density matrix |psi><psi| over the given labels."""
    if labels is None:
        labels = tuple(f"q{i}" for i in range(psi.n))
    return DensityMatrix(tuple(labels), np.outer(psi.amps, psi.amps.conj()))


def partial_trace(rho: DensityMatrix, drop: Iterable[str]) -> DensityMatrix:
    """Trace out the ``drop`` labels, keeping the rest in their original order."""
    drop_set = set(drop)
    unknown = drop_set - set(rho.qubits)
    if unknown:
        raise ValueError(f"cannot trace unknown qubits {sorted(unknown)!r}")
    if not drop_set:
        raise ValueError("need at least one qubit to trace out")
    if drop_set == set(rho.qubits):
        raise ValueError("cannot trace out every qubit")
    k = len(rho.qubits)
    tensor = rho.mat.reshape((2,) * (2 * k))
    row = list(string.ascii_letters[:k])
    col = list(string.ascii_letters[k : 2 * k])
    keep_idx = [i for i, q in enumerate(rho.qubits) if q not in drop_set]
    for i, q in enumerate(rho.qubits):
        if q in drop_set:
            col[i] = row[i]
    out = "".join(row[i] for i in keep_idx) + "".join(col[i] for i in keep_idx)
    reduced = np.einsum("".join(row) + "".join(col) + "->" + out, tensor)
    m = len(keep_idx)
    keep_labels = tuple(rho.qubits[i] for i in keep_idx)
    return DensityMatrix(keep_labels, reduced.reshape(2**m, 2**m))


def _jacobi_eigh(mat: np.ndarray, want_vectors: bool = False) -> tuple[np.ndarray, np.ndarray | None]:
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Returns unsorted eigenvalues and, optionally, the matching unitary whose
    columns are eigenvectors. Intended for the small dimensions used here.
    """
    a = np.array(mat, dtype=complex)
    d = a.shape[0]
    v = np.eye(d, dtype=complex) if want_vectors else None
    if d == 1:
        return a.real.reshape(1).copy(), v

    def off_norm() -> float:
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    for _ in range(JACOBI_MAX_SWEEPS):
        if off_norm() <= JACOBI_OFF_TOL:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                z = a[p, q]
                az = abs(z)
                if az < 1e-300:  # denormal leftovers; far below the off-norm target
                    continue
                w = z / az
                tau = (a[q, q].real - a[p, p].real) / (2.0 * az)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = 1.0 / (tau - math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                # A <- G^H A G with G the identity apart from
                # G[p,p]=G[q,q]=c, G[p,q]=s*w, G[q,p]=-s*conj(w).
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * w * rowq
                a[q, :] = s * np.conj(w) * rowp + c * rowq
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * np.conj(w) * colq
                a[:, q] = s * w * colp + c * colq
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * np.conj(w) * vq
                    v[:, q] = s * w * vp + c * vq
    if off_norm() > JACOBI_OFF_TOL:
        raise ConvergenceError(f"Jacobi sweeps exceeded {JACOBI_MAX_SWEEPS} without converging")
    return np.diag(a).real.copy(), v


def _as_hermitian_array(rho: DensityMatrix | np.ndarray) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        return rho.mat
    mat = np.asarray(rho, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    defect = float(np.max(np.abs(mat - mat.conj().T)))
    if defect > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    return mat


def hermitian_eigenvalues(rho: DensityMatrix | np.ndarray) -> Spectrum:
    """Full spectrum of a unit-trace Hermitian matrix, clamped to [0, 1]."""
    values, _ = _jacobi_eigh(_as_hermitian_array(rho))
    return Spectrum.from_values(values)


def hermitian_eigensystem(rho: DensityMatrix | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching eigenvector columns."""
    values, vectors = _jacobi_eigh(_as_hermitian_array(rho), want_vectors=True)
    order = np.argsort(values)[::-1]
    return values[order], vectors[:, order]


def von_neumann_entropy(rho: DensityMatrix | np.ndarray) -> float:
    """S(rho) = -sum_i lambda_i log2 lambda_i over the clamped spectrum."""
    return hermitian_eigenvalues(rho).entropy()


def apply_local_unitary(psi: PureState, target: int, u: np.ndarray) -> PureState:
    """Apply a 2x2 unitary to one qubit (0-based position) of a pure state."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    defect = float(np.max(np.abs(u.conj().T @ u - np.eye(2))))
    if defect > UNITARY_TOL:
        raise ValueError(f"matrix is not unitary (defect {defect:.3e})")
    if not 0 <= target < psi.n:
        raise ValueError(f"qubit position {target} outside [0, {psi.n})")
    tensor = psi.amps.reshape((2,) * psi.n)
    moved = np.moveaxis(tensor, target, 0)
    rotated = (u @ moved.reshape(2, -1)).reshape(moved.shape)
    out = np.moveaxis(rotated, 0, target).reshape(-1)
    return PureState(psi.n, out)


def permute_qubits(psi: PureState, order: Sequence[int]) -> PureState:
    """Reorder qubits so position ``i`` of the result is old position ``order[i]``."""
    order = tuple(order)
    if sorted(order) != list(range(psi.n)):
        raise ValueError(f"{order!r} is not a permutation of range({psi.n})")
    tensor = psi.amps.reshape((2,) * psi.n)
    return PureState(psi.n, tensor.transpose(order).reshape(-1))


def tensor(*states: PureState) -> PureState:
    """Tensor product, qubits ordered left to right."""
    if not states:
        raise ValueError("need at least one state")
    amps = states[0].amps
    for s in states[1:]:
        amps = np.kron(amps, s.amps)
    return PureState(sum(s.n for s in states), amps)


def random_pure_state(n: int, seed: int) -> PureState:
    """Haar-style random state: normalized standard complex Gaussians."""
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return PureState(n, z / np.linalg.norm(z))


def random_unitary(dim: int, seed: int) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
