"""Plain-text state and ensemble files.

State file: a header line ``n <count>`` followed by exactly ``2**n`` lines
``re im``, basis index ascending with the first qubit as the most
significant bit. Ensemble file: ``n <count> k <components>`` followed by
``k`` blocks of a ``w <weight>`` line plus ``2**n`` amplitude lines.
Lines starting with ``#`` are comments; values carry 17 significant digits
so round trips are bit-exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from egf.qlinalg import Ensemble, NormalizationError, PureState


class StateFileError(ValueError):
    """Structurally malformed state or ensemble file."""


def _build_state(n: int, amps: np.ndarray, path: str) -> PureState:
    # normalization failures stay distinct (their own exit code); any other
    # construction problem is a malformed file
    try:
        return PureState(n, amps)
    except NormalizationError:
        raise
    except ValueError as exc:
        raise StateFileError(f"{path}: {exc}") from None


def _significant_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    return lines


def _parse_amplitudes(lines: list[str], start: int, count: int, path: str) -> np.ndarray:
    if start + count > len(lines):
        raise StateFileError(f"{path}: expected {count} amplitude lines, file ends early")
    amps = np.empty(count, dtype=complex)
    for i in range(count):
        tokens = lines[start + i].split()
        if len(tokens) != 2:
            raise StateFileError(f"{path}: amplitude line {i} must be 're im', got {lines[start + i]!r}")
        try:
            amps[i] = complex(float(tokens[0]), float(tokens[1]))
        except ValueError as exc:
            raise StateFileError(f"{path}: bad amplitude on line {i}: {exc}") from None
    return amps


def read_state(path) -> PureState:
    lines = _significant_lines(Path(path).read_text())
    if not lines:
        raise StateFileError(f"{path}: empty file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n":
        raise StateFileError(f"{path}: header must be 'n <count>', got {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise StateFileError(f"{path}: bad qubit count {header[1]!r}") from None
    if n < 1:
        raise StateFileError(f"{path}: qubit count must be positive, got {n}")
    amps = _parse_amplitudes(lines, 1, 2**n, str(path))
    if len(lines) != 1 + 2**n:
        raise StateFileError(f"{path}: {len(lines) - 1 - 2**n} unexpected extra lines")
    return _build_state(n, amps, str(path))


def write_state(path, psi: PureState, comment: str | None = None) -> None:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"n {psi.n}")
    for z in psi.amps:
        lines.append(f"{z.real:.17g} {z.imag:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_ensemble(path) -> Ensemble:
    lines = _significant_lines(Path(path).read_text())
    if not lines:
        raise StateFileError(f"{path}: empty file")
    header = lines[0].split()
    if len(header) != 4 or header[0] != "n" or header[2] != "k":
        raise StateFileError(f"{path}: header must be 'n <count> k <components>', got {lines[0]!r}")
    try:
        n = int(header[1])
        k = int(header[3])
    except ValueError:
        raise StateFileError(f"{path}: bad header numbers in {lines[0]!r}") from None
    if n < 1 or k < 1:
        raise StateFileError(f"{path}: counts must be positive, got n={n} k={k}")
    dim = 2**n
    components = []
    cursor = 1
    for block in range(k):
        if cursor >= len(lines):
            raise StateFileError(f"{path}: expected {k} component blocks, file ends early")
        tokens = lines[cursor].split()
        if len(tokens) != 2 or tokens[0] != "w":
            raise StateFileError(f"{path}: block {block} must start with 'w <weight>', got {lines[cursor]!r}")
        try:
            weight = float(tokens[1])
        except ValueError:
            raise StateFileError(f"{path}: bad weight {tokens[1]!r}") from None
        amps = _parse_amplitudes(lines, cursor + 1, dim, str(path))
        components.append((weight, _build_state(n, amps, str(path))))
        cursor += 1 + dim
    if cursor != len(lines):
        raise StateFileError(f"{path}: {len(lines) - cursor} unexpected extra lines")
    return Ensemble(tuple(components))


def write_ensemble(path, ens: Ensemble, comment: str | None = None) -> None:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"n {ens.n} k {len(ens.components)}")
    for weight, state in ens.components:
        lines.append(f"w {weight:.17g}")
        for z in state.amps:
            lines.append(f"{z.real:.17g} {z.imag:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")
