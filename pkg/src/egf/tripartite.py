"""Three-qubit generalized entanglement of formation.

Two routes to the same number: a closed form in the eight basis amplitudes,
and a direct evaluation from reduced density matrices (partial traces,
eigensolver entropies, and a pair E_F backend). The closed form rests on the
fact that tracing one qubit from a pure state leaves a rank-<=2 matrix whose
natural two-component decomposition is indexed by the traced qubit's basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from egf.bipartite import WEIGHT_CUTOFF, ef_ensemble, wootters_ef_mixed
from egf.qlinalg import (
    DensityMatrix,
    Ensemble,
    PureState,
    binary_entropy,
    partial_trace,
    projector,
    von_neumann_entropy,
)

LABELS = ("A", "B", "C")
PAIRS = ("AB", "AC", "BC")

# Qubit traced out to form each pair, by position (A=0, B=1, C=2).
DROPPED = {"AB": 2, "AC": 1, "BC": 0}

RADICAND_HARD_TOL = 1e-8  # excursions past [0, 1] beyond this are bugs

PAIR_EF_MODES = ("conditional", "wootters")


class InternalConsistencyError(RuntimeError):
    """A closed-form radicand left [0, 1] by more than numerical noise."""


@dataclass(frozen=True)
class TripartiteAmplitudes:
    """Basis amplitudes a..h of |000>, |001>, ..., |111| in that order."""

    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex
    g: complex
    h: complex

    def __post_init__(self) -> None:
        total = sum(abs(z) ** 2 for z in self.as_tuple())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"squared amplitudes sum to {total!r}, not 1")

    @classmethod
    def from_state(cls, psi: PureState) -> "TripartiteAmplitudes":
        if psi.n != 3:
            raise ValueError(f"expected a 3-qubit state, got n={psi.n}")
        return cls(*(complex(z) for z in psi.amps))

    @classmethod
    def from_array(cls, amps) -> "TripartiteAmplitudes":
        arr = np.asarray(amps, dtype=complex).reshape(-1)
        if arr.size != 8:
            raise ValueError(f"expected 8 amplitudes, got {arr.size}")
        return cls(*(complex(z) for z in arr))

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.g, self.h)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=complex)


@dataclass(frozen=True, eq=False)
class TripartiteReport:
    """Every intermediate quantity of the closed-form pipeline."""

    weights: Mapping[str, tuple[float, float]]       # per pair: (p1, p2)
    xi_pair: Mapping[str, tuple[float, float]]       # per pair: (xi1, xi2)
    eigmin_pair: Mapping[str, float]                 # smaller eigenvalue of the traced pair
    xi_single: Mapping[str, float]                   # Bloch norm per qubit
    ef_pair: Mapping[str, float]                     # sum_i p_i H((1 - xi_i)/2)
    s_pair: Mapping[str, float]                      # H(smaller eigenvalue)
    s_single: Mapping[str, float]                    # H((1 - xi)/2)
    egf: float

    def as_dict(self) -> dict[str, float]:
        out: dict[str, float] = {}
        for pair in PAIRS:
            out[f"p1_{pair}"], out[f"p2_{pair}"] = self.weights[pair]
        for pair in PAIRS:
            out[f"xi1_{pair}"], out[f"xi2_{pair}"] = self.xi_pair[pair]
        for pair in PAIRS:
            out[f"lambda_{pair}"] = self.eigmin_pair[pair]
        for label in LABELS:
            out[f"xi_{label}"] = self.xi_single[label]
        for pair in PAIRS:
            out[f"ef_{pair}"] = self.ef_pair[pair]
        for pair in PAIRS:
            out[f"s_{pair}"] = self.s_pair[pair]
        for label in LABELS:
            out[f"s_{label}"] = self.s_single[label]
        out["egf"] = self.egf
        return out


def _amps8(state) -> tuple[complex, ...]:
    if isinstance(state, PureState):
        if state.n != 3:
            raise ValueError(f"expected a 3-qubit state, got n={state.n}")
        return tuple(state.amps)
    if isinstance(state, TripartiteAmplitudes):
        return state.as_tuple()
    arr = np.asarray(state, dtype=complex).reshape(-1)
    if arr.size != 8:
        raise ValueError(f"expected 8 amplitudes, got {arr.size}")
    total = float(np.sum(np.abs(arr) ** 2))
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"squared amplitudes sum to {total!r}, not 1")
    return tuple(arr)


def _checked_radicand(x: float, context: str) -> float:
    if x < -RADICAND_HARD_TOL or x > 1.0 + RADICAND_HARD_TOL:
        raise InternalConsistencyError(f"{context}: radicand {x!r} outside [0, 1]")
    return min(max(x, 0.0), 1.0)


def _pair_components(amps: tuple[complex, ...]):
    """Per pair: the two unnormalized 4-vectors selected by the traced qubit.

    Each entry is (pair, (v1, v2), (det1, det2)) with det the 2x2 determinant
    v[0]v[3] - v[1]v[2] of the unnormalized component.
    """
    a, b, c, d, e, f, g, h = amps
    return (
        ("AB", ((a, c, e, g), (b, d, f, h)), (a * g - c * e, b * h - d * f)),
        ("AC", ((a, b, e, f), (c, d, g, h)), (a * f - b * e, c * h - d * g)),
        ("BC", ((a, b, c, d), (e, f, g, h)), (a * d - b * c, e * h - f * g)),
    )


def _single_dets(amps: tuple[complex, ...]) -> dict[str, float]:
    """Determinant of each single-qubit reduction."""
    a, b, c, d, e, f, g, h = amps
    dets = {}
    for label, group0, group1, off in (
        ("A", (a, b, c, d), (e, f, g, h), a * e.conjugate() + b * f.conjugate() + c * g.conjugate() + d * h.conjugate()),
        ("B", (a, b, e, f), (c, d, g, h), a * c.conjugate() + b * d.conjugate() + e * g.conjugate() + f * h.conjugate()),
        ("C", (a, c, e, g), (b, d, f, h), a * b.conjugate() + c * d.conjugate() + e * f.conjugate() + g * h.conjugate()),
    ):
        p0 = sum(abs(z) ** 2 for z in group0)
        p1 = sum(abs(z) ** 2 for z in group1)
        dets[label] = p0 * p1 - abs(off) ** 2
    return dets


def pair_weights(state) -> dict[str, tuple[float, float]]:
    """Probability of the traced qubit being 0 or 1, per pair."""
    amps = _amps8(state)
    out = {}
    for pair, comps, _ in _pair_components(amps):
        p1 = min(max(sum(abs(z) ** 2 for z in comps[0]), 0.0), 1.0)
        out[pair] = (p1, 1.0 - p1)
    return out


def traced_pair_decomposition(state, pair: str) -> Ensemble:
    """Two-component decomposition of a traced pair, indexed by the dropped
    qubit's basis value. Components below the weight cutoff are omitted."""
    if pair not in PAIRS:
        raise ValueError(f"unknown pair {pair!r}, expected one of {PAIRS}")
    amps = _amps8(state)
    entry = next(item for item in _pair_components(amps) if item[0] == pair)
    components = []
    for vec in entry[1]:
        arr = np.array(vec, dtype=complex)
        weight = float(np.sum(np.abs(arr) ** 2))
        if weight < WEIGHT_CUTOFF:
            continue
        components.append((weight, PureState(2, arr / math.sqrt(weight))))
    if not components:
        raise ValueError("both components have vanishing weight; state is degenerate")
    return Ensemble(tuple(components))


def pair_xi(state) -> dict[str, tuple[float, float]]:
    """Bloch norm of each decomposition component, per pair.

    Zero-weight components get xi = 0 by convention (they are zero matrices).
    """
    amps = _amps8(state)
    out = {}
    for pair, comps, dets in _pair_components(amps):
        xis = []
        for vec, det in zip(comps, dets):
            w = sum(abs(z) ** 2 for z in vec)
            if w < WEIGHT_CUTOFF:
                xis.append(0.0)
                continue
            radicand = _checked_radicand(1.0 - 4.0 * abs(det) ** 2 / (w * w), f"xi {pair}")
            xis.append(math.sqrt(radicand))
        out[pair] = (xis[0], xis[1])
    return out


def pair_min_eigenvalues(state) -> dict[str, float]:
    """Smaller eigenvalue of each traced pair.

    A traced pair of a pure 3-qubit state has at most two nonzero
    eigenvalues, shared with the complementary single qubit, so this is
    (1 - sqrt(1 - 4 det rho_X))/2 with X the qubit opposite the pair.
    """
    amps = _amps8(state)
    dets = _single_dets(amps)
    complement = {"AB": "C", "AC": "B", "BC": "A"}
    out = {}
    for pair in PAIRS:
        radicand = _checked_radicand(1.0 - 4.0 * dets[complement[pair]], f"lambda {pair}")
        out[pair] = 0.5 * (1.0 - math.sqrt(radicand))
    return out


def single_xi(state) -> dict[str, float]:
    """Bloch norm of each single-qubit reduction: sqrt(1 - 4 det rho_X)."""
    amps = _amps8(state)
    dets = _single_dets(amps)
    return {
        label: math.sqrt(_checked_radicand(1.0 - 4.0 * dets[label], f"xi {label}"))
        for label in LABELS
    }


def egf_pure_value(state) -> float:
    """Closed-form E_GF of a 3-qubit pure state (value only, no report)."""
    amps = _amps8(state)
    total = 0.0
    for _, comps, dets in _pair_components(amps):
        for vec, det in zip(comps, dets):
            w = sum(abs(z) ** 2 for z in vec)
            if w < WEIGHT_CUTOFF:
                continue
            xi = math.sqrt(_checked_radicand(1.0 - 4.0 * abs(det) ** 2 / (w * w), "pair xi"))
            total += w * binary_entropy((1.0 - xi) / 2.0)
    for det in _single_dets(amps).values():
        radicand = _checked_radicand(1.0 - 4.0 * det, "single xi")
        xi = math.sqrt(radicand)
        # The traced pair opposite this qubit shares its spectrum, so each
        # det contributes both an S(pair) and an S(single) term.
        total += binary_entropy(0.5 * (1.0 - math.sqrt(radicand)))
        total += binary_entropy((1.0 - xi) / 2.0)
    return total / 6.0


def egf_closed_form(state) -> TripartiteReport:
    """Closed-form E_GF with all intermediate quantities.

    The value is (1/6) [ sum over pairs of the decomposition-averaged pair
    E_F, plus the three traced-pair entropies, plus the three single-qubit
    entropies ].
    """
    amps = _amps8(state)
    weights = pair_weights(amps)
    xis = pair_xi(amps)
    eigmins = pair_min_eigenvalues(amps)
    xi_singles = single_xi(amps)

    ef_pair = {}
    for pair in PAIRS:
        value = 0.0
        for w, xi in zip(weights[pair], xis[pair]):
            if w < WEIGHT_CUTOFF:
                continue
            value += w * binary_entropy((1.0 - xi) / 2.0)
        ef_pair[pair] = value
    s_pair = {pair: binary_entropy(eigmins[pair]) for pair in PAIRS}
    s_single = {label: binary_entropy((1.0 - xi_singles[label]) / 2.0) for label in LABELS}

    egf = (sum(ef_pair.values()) + sum(s_pair.values()) + sum(s_single.values())) / 6.0
    return TripartiteReport(
        weights=weights,
        xi_pair=xis,
        eigmin_pair=eigmins,
        xi_single=xi_singles,
        ef_pair=ef_pair,
        s_pair=s_pair,
        s_single=s_single,
        egf=egf,
    )


def _as_pure_state(state) -> PureState:
    if isinstance(state, PureState):
        if state.n != 3:
            raise ValueError(f"expected a 3-qubit state, got n={state.n}")
        return state
    if isinstance(state, TripartiteAmplitudes):
        return PureState(3, state.as_array())
    return PureState(3, np.asarray(state, dtype=complex).reshape(-1))


def egf_from_reductions(state, pair_ef: str = "conditional") -> float:
    """E_GF evaluated directly from reduced density matrices.

    Partial traces and eigensolver entropies supply every S term. The pair
    E_F backend is either the two-component conditional decomposition
    ("conditional", matching the closed form) or the exact Wootters formula
    ("wootters", quantifying how much that decomposition overshoots).
    """
    if pair_ef not in PAIR_EF_MODES:
        raise ValueError(f"unknown pair E_F mode {pair_ef!r}, expected one of {PAIR_EF_MODES}")
    psi = _as_pure_state(state)
    rho = projector(psi, LABELS)
    total = 0.0
    for pair in PAIRS:
        dropped = LABELS[DROPPED[pair]]
        rho_pair = partial_trace(rho, {dropped})
        total += von_neumann_entropy(rho_pair)
        if pair_ef == "conditional":
            total += ef_ensemble(traced_pair_decomposition(psi, pair))
        else:
            total += wootters_ef_mixed(rho_pair)
    for label in LABELS:
        rho_single = partial_trace(rho, set(LABELS) - {label})
        total += von_neumann_entropy(rho_single)
    return total / 6.0


def correlation_index(state) -> float:
    """Three-party correlation index of a pure state.

    One third of (single-qubit entropies + pair entropies + pair E_F via the
    Wootters formula); the full-state entropy term vanishes for pure input.
    For pure states this equals twice the E_GF evaluated with the Wootters
    pair backend.
    """
    psi = _as_pure_state(state)
    rho = projector(psi, LABELS)
    total = 0.0
    for pair in PAIRS:
        dropped = LABELS[DROPPED[pair]]
        rho_pair = partial_trace(rho, {dropped})
        total += von_neumann_entropy(rho_pair) + wootters_ef_mixed(rho_pair)
    for label in LABELS:
        total += von_neumann_entropy(partial_trace(rho, set(LABELS) - {label}))
    return total / 3.0
