"""Recursive n-party measure and convex-roof minimization for mixed states.

The pure-state value averages, over every proper nonempty trace-out, the
entropy of the reduction plus the reduction's own internal value. Internal
values recurse through the reduction's conditional decomposition: the pure
states obtained by fixing the traced qubits to each computational-basis
outcome, weighted by outcome probability. For three qubits this reproduces
the closed form exactly; free minimization over decompositions would
undercut it on most states (see ``egf_mixed``, which does minimize).

Mixed states are handled by parameterizing all pure-state decompositions of
a density matrix through its eigendecomposition mixed by a column-orthonormal
matrix, then running multi-start derivative-free descent on the mixing
parameters. Results are upper bounds on the true minimum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from egf.bipartite import WEIGHT_CUTOFF
from egf.qlinalg import (
    DensityMatrix,
    Ensemble,
    PureState,
    binary_entropy,
    hermitian_eigensystem,
    hermitian_eigenvalues,
)
from egf.tripartite import egf_pure_value

RANK_CUTOFF = 1e-12
MAX_MIXED_QUBITS = 6  # optimization cost explodes past this

_DESCENT_STEP0 = 0.25
_DESCENT_STEP_MIN = 1e-4


@dataclass
class OptimizerConfig:
    """Budget and determinism knobs for the mixed-state minimizer."""

    restarts: int = 32
    max_evals: int = 2000
    seed: int = 0
    cardinality_cap: int | None = None  # defaults to rank**2
    tolerance: float = 1e-8             # objective stall per descent pass


@dataclass(frozen=True, eq=False)
class OptimizerResult:
    best_value: float
    best_ensemble: Ensemble
    restarts_used: int
    iterations: int       # total objective evaluations
    converged: bool       # best restart ended by stall, not budget
    value_history: tuple[float, ...]


def enumerate_reductions(n: int) -> list[tuple[int, ...]]:
    """All proper nonempty subsets of ``range(n)``, smallest first."""
    if n < 2:
        raise ValueError(f"need at least 2 parties, got {n}")
    out: list[tuple[int, ...]] = []
    for m in range(1, n):
        out.extend(itertools.combinations(range(n), m))
    return out


def _bipartition_entropy(psi_tensor: np.ndarray, keep_rel: tuple[int, ...], drop_rel: tuple[int, ...]) -> float:
    """Entropy of the reduction onto ``keep_rel`` of a normalized pure tensor.

    Diagonalizes the Gram matrix on the smaller side of the bipartition; the
    nonzero spectra of the two sides agree.
    """
    mat = psi_tensor.transpose(keep_rel + drop_rel).reshape(2 ** len(keep_rel), 2 ** len(drop_rel))
    if mat.shape[0] <= mat.shape[1]:
        gram = mat @ mat.conj().T
    else:
        gram = mat.conj().T @ mat
    return hermitian_eigenvalues(gram).entropy()


def egf_pure(psi: PureState, use_cache: bool = True) -> float:
    """Pure-state value for any n >= 2 via the recursive definition.

    Every reduction contributes its entropy plus, when more than one qubit
    survives, the weighted average of this measure over the reduction's
    conditional decomposition. Conditional states are memoized by the
    (traced positions, outcome bits) pair that defines them.
    """
    n = psi.n
    if n < 2:
        raise ValueError(f"need at least 2 qubits, got n={n}")
    tensor = psi.amps.reshape((2,) * n)
    cache: dict | None = {} if use_cache else None

    def weight_of(traced: tuple[int, ...], outcome: tuple[int, ...]) -> float:
        idx: list = [slice(None)] * n
        for pos, bit in zip(traced, outcome):
            idx[pos] = bit
        return float(np.sum(np.abs(tensor[tuple(idx)]) ** 2))

    def conditional_value(traced: tuple[int, ...], outcome: tuple[int, ...]) -> float:
        key = (traced, outcome)
        if cache is not None and key in cache:
            return cache[key]
        idx: list = [slice(None)] * n
        for pos, bit in zip(traced, outcome):
            idx[pos] = bit
        sub = tensor[tuple(idx)]
        w = float(np.sum(np.abs(sub) ** 2))
        psi_c = sub / math.sqrt(w)
        kept = tuple(p for p in range(n) if p not in traced)
        k = len(kept)
        total = 0.0
        for m in range(1, k):
            for drop_rel in itertools.combinations(range(k), m):
                keep_rel = tuple(i for i in range(k) if i not in drop_rel)
                total += _bipartition_entropy(psi_c, keep_rel, drop_rel)
                if len(keep_rel) < 2:
                    continue  # single-party reductions carry no entanglement
                drop_abs = tuple(kept[i] for i in drop_rel)
                for bits in itertools.product((0, 1), repeat=m):
                    merged = sorted(zip(traced + drop_abs, outcome + bits))
                    new_traced = tuple(p for p, _ in merged)
                    new_outcome = tuple(b for _, b in merged)
                    w2 = weight_of(new_traced, new_outcome) / w
                    if w2 < WEIGHT_CUTOFF:
                        continue
                    total += w2 * conditional_value(new_traced, new_outcome)
        value = total / (2**k - 2)
        if cache is not None:
            cache[key] = value
        return value

    return conditional_value((), ())


def _pure_value(amps: np.ndarray, n: int) -> float:
    """Pure-state value by the cheapest equivalent route for this n."""
    if n == 2:
        a, b, c, d = amps
        concurrence = min(2.0 * abs(a * d - b * c), 1.0)
        xi = math.sqrt(max(1.0 - concurrence * concurrence, 0.0))
        return binary_entropy((1.0 - xi) / 2.0)
    if n == 3:
        return egf_pure_value(amps)
    return egf_pure(PureState(n, amps))


def average_egf(ens: Ensemble) -> float:
    """Ensemble-averaged pure-state value at a fixed decomposition."""
    return sum(w * _pure_value(s.amps, s.n) for w, s in ens.components if w >= WEIGHT_CUTOFF)


def decomposition_average(ens: Ensemble, labels: Sequence[str] | None = None) -> DensityMatrix:
    """Density matrix sum_i w_i |psi_i><psi_i| of a decomposition."""
    dim = 2**ens.n
    mat = np.zeros((dim, dim), dtype=complex)
    for w, s in ens.components:
        mat += w * np.outer(s.amps, s.amps.conj())
    if labels is None:
        labels = tuple(f"q{i}" for i in range(ens.n))
    return DensityMatrix(tuple(labels), mat)


def _orthonormal_columns(z: np.ndarray) -> np.ndarray:
    """QR-orthonormalize columns, with phases fixed so an already
    column-orthonormal input is returned unchanged."""
    q, r = np.linalg.qr(z, mode="reduced")
    diag = np.diag(r).copy()
    zero = np.abs(diag) == 0.0
    diag[zero] = 1.0
    return q * (diag / np.abs(diag))[None, :]


def _mixing_from_ensemble(ens: Ensemble, basis_scaled: np.ndarray, eigvals: np.ndarray) -> np.ndarray:
    """Recover the column-orthonormal mixing matrix that realizes ``ens``
    from the eigendecomposition with scaled eigenvector columns ``V``."""
    k = len(ens.components)
    r = eigvals.size
    u = np.zeros((k, r), dtype=complex)
    vectors = basis_scaled / np.sqrt(eigvals)[None, :]
    for j, (w, s) in enumerate(ens.components):
        phi = math.sqrt(w) * s.amps
        u[j, :] = (vectors.conj().T @ phi) / np.sqrt(eigvals)
    return u


def _params_from_matrix(z: np.ndarray) -> np.ndarray:
    return np.concatenate([z.real.ravel(), z.imag.ravel()])


def _matrix_from_params(params: np.ndarray, k: int, r: int) -> np.ndarray:
    half = k * r
    return params[:half].reshape(k, r) + 1j * params[half:].reshape(k, r)


def _descend(objective, x0: np.ndarray, max_evals: int, tolerance: float):
    """Coordinate descent with shrinking step; deterministic."""
    x = x0.copy()
    fx = objective(x)
    evals = 1
    step = _DESCENT_STEP0
    converged = False
    while evals < max_evals:
        pass_start = fx
        improved = False
        for i in range(x.size):
            if evals >= max_evals:
                break
            for delta in (step, -step):
                if evals >= max_evals:
                    break
                trial = x.copy()
                trial[i] += delta
                ft = objective(trial)
                evals += 1
                if ft < fx:
                    x, fx = trial, ft
                    improved = True
                    break
        if not improved or pass_start - fx < tolerance:
            step *= 0.5
            if step < _DESCENT_STEP_MIN:
                converged = True
                break
    return x, fx, evals, converged


def egf_mixed(
    target: DensityMatrix | Ensemble,
    config: OptimizerConfig | None = None,
    seed_ensembles: Sequence[Ensemble] = (),
) -> OptimizerResult:
    """Upper bound on the convex-roof value of a mixed state.

    Candidate decompositions come from the purification construction: the
    eigendecomposition of the state mixed by a column-orthonormal matrix of
    configurable height (every decomposition arises this way). Multi-start
    coordinate descent on the real mixing parameters; an Ensemble input is
    averaged first and kept as one of the restart seeds.
    """
    config = config or OptimizerConfig()
    if config.restarts < 1:
        raise ValueError("need at least one restart")
    seeds = list(seed_ensembles)
    if isinstance(target, Ensemble):
        seeds.insert(0, target)
        rho = decomposition_average(target)
    else:
        rho = target
    n = len(rho.qubits)
    if n < 2:
        raise ValueError(f"need at least 2 qubits, got n={n}")
    if n > MAX_MIXED_QUBITS:
        raise ValueError(f"mixed-state optimization supports at most {MAX_MIXED_QUBITS} qubits, got n={n}")

    eigvals, eigvecs = hermitian_eigensystem(rho)
    keep = eigvals > RANK_CUTOFF
    lam = eigvals[keep]
    rank = int(lam.size)
    basis_scaled = eigvecs[:, keep] * np.sqrt(lam)[None, :]  # columns sqrt(lam_i) v_i

    if rank == 1:
        state = PureState(n, eigvecs[:, 0])
        value = _pure_value(state.amps, n)
        ensemble = Ensemble(((1.0, state),))
        return OptimizerResult(value, ensemble, 0, 1, True, (value,))

    cap = config.cardinality_cap if config.cardinality_cap is not None else rank * rank
    if cap < rank:
        raise ValueError(f"cardinality cap {cap} below rank {rank}")

    def ensemble_from_mixing(u: np.ndarray) -> Ensemble:
        phi = basis_scaled @ u.T
        comps = []
        for j in range(phi.shape[1]):
            w = float(np.sum(np.abs(phi[:, j]) ** 2))
            if w < WEIGHT_CUTOFF:
                continue
            comps.append((w, PureState(n, phi[:, j] / math.sqrt(w))))
        return Ensemble(tuple(comps))

    def make_objective(k: int):
        def objective(params: np.ndarray) -> float:
            u = _orthonormal_columns(_matrix_from_params(params, k, rank))
            phi = basis_scaled @ u.T
            value = 0.0
            for j in range(k):
                w = float(np.sum(np.abs(phi[:, j]) ** 2))
                if w < WEIGHT_CUTOFF:
                    continue
                value += w * _pure_value(phi[:, j] / math.sqrt(w), n)
            return value
        return objective

    starts: list[tuple[int, np.ndarray]] = [(rank, _params_from_matrix(np.eye(rank, dtype=complex)))]
    for ens in seeds:
        u = _mixing_from_ensemble(ens, basis_scaled, lam)
        starts.append((u.shape[0], _params_from_matrix(u)))
    rng = np.random.default_rng(config.seed)
    while len(starts) < config.restarts:
        k = int(rng.integers(rank, cap + 1))
        z = rng.standard_normal((k, rank)) + 1j * rng.standard_normal((k, rank))
        starts.append((k, _params_from_matrix(z)))

    best_value = math.inf
    best_params: tuple[int, np.ndarray] | None = None
    best_converged = False
    history: list[float] = []
    total_evals = 0
    for k, x0 in starts:
        objective = make_objective(k)
        x, fx, evals, converged = _descend(objective, x0, config.max_evals, config.tolerance)
        total_evals += evals
        history.append(fx)
        if fx < best_value:
            best_value = fx
            best_params = (k, x)
            best_converged = converged

    assert best_params is not None
    k, x = best_params
    best_ensemble = ensemble_from_mixing(_orthonormal_columns(_matrix_from_params(x, k, rank)))
    return OptimizerResult(
        best_value=best_value,
        best_ensemble=best_ensemble,
        restarts_used=len(starts),
        iterations=total_evals,
        converged=best_converged,
        value_history=tuple(history),
    )
