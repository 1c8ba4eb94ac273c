"""Named three-qubit benchmark states with their expected values.

Three families: the eight maximally entangled cat states, the twelve
Bell-pair-times-spectator states (the spectator qubit carries an arbitrary
single-qubit factor, |0> by default), and the eight computational product
states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from egf.qlinalg import PureState, permute_qubits, tensor

GHZ_EXPECTED = 1.0
BELL_EXPECTED = 5.0 / 6.0
PRODUCT_EXPECTED = 0.0

_BELL_KINDS = {
    "phi+": (0, 3, 1.0),   # (|00> + |11>)/sqrt(2)
    "phi-": (0, 3, -1.0),
    "psi+": (1, 2, 1.0),   # (|01> + |10>)/sqrt(2)
    "psi-": (1, 2, -1.0),
}


@dataclass(frozen=True)
class KnownState:
    name: str
    family: str            # "ghz-cat" | "extended-bell" | "product"
    expected: float
    uses_chi: bool
    _builder: Callable[[PureState], PureState]

    def build(self, chi: PureState | None = None) -> PureState:
        if chi is None:
            chi = default_chi()
        if chi.n != 1:
            raise ValueError(f"spectator factor must be a single qubit, got n={chi.n}")
        return self._builder(chi)


def default_chi() -> PureState:
    return PureState(1, np.array([1.0, 0.0], dtype=complex))


def _bell_pair(kind: str) -> PureState:
    i, j, sign = _BELL_KINDS[kind]
    amps = np.zeros(4, dtype=complex)
    amps[i] = 1.0 / math.sqrt(2.0)
    amps[j] = sign / math.sqrt(2.0)
    return PureState(2, amps)


def _ghz_builder(low: int, sign: float) -> Callable[[PureState], PureState]:
    def build(_chi: PureState) -> PureState:
        amps = np.zeros(8, dtype=complex)
        amps[low] = 1.0 / math.sqrt(2.0)
        amps[7 - low] = sign / math.sqrt(2.0)
        return PureState(3, amps)
    return build


def _bell_builder(position: str, kind: str) -> Callable[[PureState], PureState]:
    def build(chi: PureState) -> PureState:
        pair = _bell_pair(kind)
        if position == "AB":
            return tensor(pair, chi)
        if position == "BC":
            return tensor(chi, pair)
        # Bell pair on the outer qubits, spectator in the middle.
        return permute_qubits(tensor(pair, chi), (0, 2, 1))
    return build


def _product_builder(index: int) -> Callable[[PureState], PureState]:
    def build(_chi: PureState) -> PureState:
        amps = np.zeros(8, dtype=complex)
        amps[index] = 1.0
        return PureState(3, amps)
    return build


def _make_entries() -> tuple[KnownState, ...]:
    entries: list[KnownState] = []
    for low in range(4):
        for sign, symbol in ((1.0, "+"), (-1.0, "-")):
            name = f"ghz-{low:03b}{symbol}{7 - low:03b}"
            entries.append(KnownState(name, "ghz-cat", GHZ_EXPECTED, False, _ghz_builder(low, sign)))
    for position in ("AB", "AC", "BC"):
        for kind in ("phi+", "phi-", "psi+", "psi-"):
            name = f"bell-{position}-{kind}"
            entries.append(KnownState(name, "extended-bell", BELL_EXPECTED, True, _bell_builder(position, kind)))
    for index in range(8):
        name = f"product-{index:03b}"
        entries.append(KnownState(name, "product", PRODUCT_EXPECTED, False, _product_builder(index)))
    return tuple(entries)


_ENTRIES = _make_entries()
_BY_NAME = {entry.name: entry for entry in _ENTRIES}


def entries() -> tuple[KnownState, ...]:
    return _ENTRIES


def names() -> list[str]:
    return [entry.name for entry in _ENTRIES]


def lookup(name: str) -> KnownState:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown state name {name!r}") from None


def build(name: str, chi: PureState | None = None) -> PureState:
    return lookup(name).build(chi)
