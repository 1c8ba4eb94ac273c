"""Shared state builders for the test suite."""

import numpy as np

from egf.qlinalg import PureState


def basis_state(n: int, index: int) -> PureState:
    amps = np.zeros(2**n, dtype=complex)
    amps[index] = 1.0
    return PureState(n, amps)


def ghz(n: int = 3, sign: float = 1.0) -> PureState:
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 2**-0.5
    amps[-1] = sign * 2**-0.5
    return PureState(n, amps)


def random_density(dim: int, seed: int, rank: int | None = None) -> np.ndarray:
    """Random PSD unit-trace matrix (full rank unless ``rank`` given)."""
    rng = np.random.default_rng(seed)
    cols = rank or dim
    g = rng.standard_normal((dim, cols)) + 1j * rng.standard_normal((dim, cols))
    mat = g @ g.conj().T
    return mat / np.trace(mat).real
