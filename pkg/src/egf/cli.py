"""Command-line interface.

Four subcommands: ``pure`` evaluates a state file, ``mixed`` minimizes over
decompositions of an ensemble file, ``sweep`` writes a parameter sweep as
CSV (plus a rendered figure unless disabled), and ``known`` checks the named
benchmark catalog. stdout carries machine-parseable results only; stderr
carries diagnostics.

Exit codes: 0 success, 1 malformed file or unknown name or unwritable
output, 2 normalization failure, 3 method/qubit-count mismatch, 4 budget
exhausted under --strict.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from egf import catalog, stateio, sweeps
from egf.multiparty import MAX_MIXED_QUBITS, OptimizerConfig, egf_mixed, egf_pure
from egf.qlinalg import NormalizationError, PureState
from egf.tripartite import egf_closed_form, egf_from_reductions

EXIT_OK = 0
EXIT_FILE = 1
EXIT_NORMALIZATION = 2
EXIT_METHOD = 3
EXIT_BUDGET = 4


def _fmt(value: float) -> str:
    """17 significant digits, fixed point."""
    return np.format_float_positional(value, precision=17, unique=False, fractional=False)


def _diag(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _cmd_pure(args) -> int:
    try:
        psi = stateio.read_state(args.state_path)
    except NormalizationError as exc:
        _diag(args, f"normalization failure: {exc}")
        return EXIT_NORMALIZATION
    except (stateio.StateFileError, OSError) as exc:
        _diag(args, f"cannot read state file: {exc}")
        return EXIT_FILE

    if args.method in ("theorem1", "definition1") and psi.n != 3:
        _diag(args, f"method {args.method} needs a 3-qubit state, got n={psi.n}")
        return EXIT_METHOD
    if args.method == "nparty" and psi.n < 2:
        _diag(args, f"method nparty needs at least 2 qubits, got n={psi.n}")
        return EXIT_METHOD
    if args.report and psi.n != 3:
        _diag(args, f"--report needs a 3-qubit state, got n={psi.n}")
        return EXIT_METHOD

    if args.method == "theorem1":
        value = egf_closed_form(psi).egf
    elif args.method == "definition1":
        value = egf_from_reductions(psi)
    else:
        value = egf_pure(psi)

    if args.report:
        report = egf_closed_form(psi).as_dict()
        report["egf"] = value
        for key, field in report.items():
            print(f"{key}={_fmt(field)}")
    else:
        print(f"egf={_fmt(value)}")
    return EXIT_OK


def _cmd_mixed(args) -> int:
    try:
        ensemble = stateio.read_ensemble(args.ensemble_path)
    except (stateio.StateFileError, NormalizationError, ValueError, OSError) as exc:
        _diag(args, f"cannot read ensemble file: {exc}")
        return EXIT_FILE
    if not 2 <= ensemble.n <= MAX_MIXED_QUBITS:
        _diag(args, f"mixed-state optimization needs 2 to {MAX_MIXED_QUBITS} qubits, got n={ensemble.n}")
        return EXIT_METHOD

    config = OptimizerConfig(
        restarts=args.restarts,
        max_evals=args.max_evals,
        seed=args.seed,
        cardinality_cap=args.cardinality_cap,
        tolerance=args.stall_tolerance,
    )
    result = egf_mixed(ensemble, config)
    flag = "true" if result.converged else "false"
    print(f"egf_upper_bound={_fmt(result.best_value)} converged={flag} restarts={result.restarts_used}")
    if not result.converged:
        _diag(args, "optimizer stopped on its evaluation budget; value is the best found")
        if args.strict:
            return EXIT_BUDGET
    return EXIT_OK


def _cmd_sweep(args) -> int:
    try:
        rows = sweeps.write_sweep_csv(args.out, args.family, args.points)
    except ValueError as exc:
        _diag(args, f"bad sweep request: {exc}")
        return EXIT_FILE
    except OSError as exc:
        _diag(args, f"cannot write {args.out}: {exc}")
        return EXIT_FILE
    _diag(args, f"wrote {len(rows)} rows to {args.out}")

    if not args.no_plot:
        figure_path = Path(args.plot) if args.plot else Path(args.out).with_suffix(".png")
        try:
            from egf import plotting

            plotting.render_sweep(rows, args.family, figure_path)
        except OSError as exc:
            _diag(args, f"cannot write figure {figure_path}: {exc}")
            return EXIT_FILE
        _diag(args, f"wrote figure to {figure_path}")
    return EXIT_OK


def _parse_chi(text: str) -> PureState:
    tokens = text.split()
    if len(tokens) != 4:
        raise ValueError(f"--chi needs 're im re im', got {text!r}")
    values = [float(t) for t in tokens]
    return PureState(1, np.array([complex(values[0], values[1]), complex(values[2], values[3])]))


def _cmd_known(args) -> int:
    if args.list:
        for entry in catalog.entries():
            print(f"{entry.name} family={entry.family} expected={_fmt(entry.expected)}")
        return EXIT_OK

    try:
        entry = catalog.lookup(args.name)
    except KeyError as exc:
        _diag(args, str(exc))
        return EXIT_FILE
    try:
        chi = _parse_chi(args.chi) if args.chi else None
    except NormalizationError as exc:
        _diag(args, f"normalization failure: {exc}")
        return EXIT_NORMALIZATION
    except ValueError as exc:
        _diag(args, f"bad --chi: {exc}")
        return EXIT_FILE

    psi = entry.build(chi)
    computed = egf_closed_form(psi).egf
    status = "pass" if abs(computed - entry.expected) <= args.tolerance else "fail"
    print(f"name={entry.name}")
    for i, z in enumerate(psi.amps):
        print(f"amp{i}={z.real:.17g} {z.imag:.17g}")
    print(f"expected={_fmt(entry.expected)}")
    print(f"computed={_fmt(computed)}")
    print(f"status={status}")
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egf",
        description="Generalized entanglement of formation for multi-qubit states.",
    )
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="pass/fail tolerance for catalog checks (default 1e-9)")
    parser.add_argument("--quiet", action="store_true", help="suppress stderr diagnostics")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # top-level defaults when they are absent there
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    pure = sub.add_parser("pure", help="evaluate a pure state from a state file", parents=[common])
    pure.add_argument("state_path")
    pure.add_argument("--method", choices=("theorem1", "definition1", "nparty"),
                      default="theorem1",
                      help="closed form, reduced-density-matrix path, or n-party recursion")
    pure.add_argument("--report", action="store_true",
                      help="print every intermediate quantity (3-qubit states only)")
    pure.set_defaults(handler=_cmd_pure)

    mixed = sub.add_parser("mixed", help="minimize over decompositions of an ensemble file", parents=[common])
    mixed.add_argument("ensemble_path")
    mixed.add_argument("--restarts", type=_positive_int, default=32)
    mixed.add_argument("--max-evals", type=_positive_int, default=2000,
                       help="objective evaluations per restart")
    mixed.add_argument("--seed", type=int, default=0)
    mixed.add_argument("--cardinality-cap", type=int, default=None,
                       help="max ensemble size searched (default: rank squared)")
    mixed.add_argument("--stall-tolerance", type=float, default=1e-8,
                       help="objective stall tolerance per descent pass")
    mixed.add_argument("--strict", action="store_true",
                       help="exit 4 when the optimizer stops on its budget")
    mixed.set_defaults(handler=_cmd_mixed)

    sweep = sub.add_parser("sweep", help="write a one-parameter family sweep as CSV", parents=[common])
    sweep.add_argument("--family", choices=sweeps.FAMILIES, required=True)
    sweep.add_argument("--points", type=int, default=100)
    sweep.add_argument("--out", required=True, help="CSV output path")
    sweep.add_argument("--plot", help="figure output path (default: CSV path with .png)")
    sweep.add_argument("--no-plot", action="store_true", help="skip figure rendering")
    sweep.set_defaults(handler=_cmd_sweep)

    known = sub.add_parser("known", help="named benchmark states", parents=[common])
    group = known.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true", help="list all names")
    group.add_argument("--name", help="check one named state")
    known.add_argument("--chi", help="spectator qubit as 're im re im' (default |0>)")
    known.set_defaults(handler=_cmd_known)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
