"""Command-line front end.

Exit codes are uniform across subcommands: 0 for success / a true decision,
1 for a false decision or a verification mismatch, 2 for usage or input
errors.  Reports go to standard output, errors to standard error.
"""

from __future__ import annotations

import argparse
import sys

from . import documents, fixtures
from .engine import (
    BaseAccept,
    DecisionTrace,
    IdentityPad,
    NecessaryReport,
    PhaseReduction,
    Reject,
    check_necessary,
    run_decision,
    synthesize,
)
from .oracle import ANGLE_MODES, OracleConfig, random_sequence
from .su2 import evaluate_sequence

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


class InputError(Exception):
    """User-facing input problem; message printed to stderr, exit 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mqsp",
        description=(
            "Decide whether a pair of multivariable Laurent polynomials is "
            "realizable as an n-step signal-processing product, and "
            "synthesize the angle and index parameters when it is."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, steps=True):
        if steps:
            p.add_argument("--steps", type=int, required=True, metavar="N",
                           help="number of signal operators")
        p.add_argument("--tolerance", type=float, default=1e-9, metavar="TOL",
                       help="relative tolerance for coefficient comparisons (default 1e-9)")

    p = sub.add_parser("decide", help="decide constructibility of a pair in N steps")
    p.add_argument("input", help="pair document (JSON)")
    add_common(p)
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("synthesize", help="decide and extract angle/index parameters")
    p.add_argument("input", help="pair document (JSON)")
    add_common(p)
    p.add_argument("-o", "--output", metavar="PATH",
                   help="write the sequence document here (default: stdout)")
    p.set_defaults(handler=cmd_synthesize)

    p = sub.add_parser("verify", help="evaluate a sequence and compare against a pair")
    p.add_argument("pair", help="pair document (JSON)")
    p.add_argument("sequence", help="sequence document (JSON)")
    add_common(p, steps=False)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("gen", help="generate a matched random pair/sequence from a seed")
    p.add_argument("--variables", "-m", type=int, required=True)
    p.add_argument("--steps", type=int, required=True, metavar="N")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--angle-mode", choices=ANGLE_MODES, default="continuous")
    p.add_argument("--pair-out", required=True, metavar="PATH")
    p.add_argument("--sequence-out", required=True, metavar="PATH")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("check", help="run the necessary-condition filters on a pair")
    p.add_argument("input", help="pair document (JSON)")
    add_common(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("fixture", help="write a built-in pair document")
    p.add_argument("name", help=f"one of: {', '.join(fixtures.fixture_names())}")
    p.add_argument("-o", "--output", metavar="PATH",
                   help="write the pair document here (default: stdout)")
    p.set_defaults(handler=cmd_fixture)

    return parser


# -- report rendering ---------------------------------------------------------


def _format_trace(trace: DecisionTrace) -> str:
    lines = ["trace:"]
    for step in trace.steps:
        if isinstance(step, IdentityPad):
            lines.append(
                f"  [n={step.steps_left}] degree sum leaves room for an "
                "identity padding; two steps absorbed"
            )
        elif isinstance(step, PhaseReduction):
            lines.append(
                f"  [n={step.steps_left}] peeled variable a{step.index} "
                f"at phase {step.phase:.12g}"
            )
        elif isinstance(step, BaseAccept):
            lines.append(
                f"  [n=0] pure phase rotation reached, phi0 = {step.phase0:.12g}"
            )
        elif isinstance(step, Reject):
            lines.append(f"  [n={step.steps_left}] reject: {step.reason}")
    return "\n".join(lines)


def _format_necessary(report: NecessaryReport) -> str:
    def mark(flag: bool) -> str:
        return "ok" if flag else "FAIL"

    degs = " ".join(f"a{j + 1}={d}" for j, d in enumerate(report.degrees))
    return "\n".join(
        [
            f"necessary conditions (steps={report.steps}):",
            f"  inversion symmetry of P        {mark(report.symmetry_p)}",
            f"  inversion antisymmetry of Q    {mark(report.symmetry_q)}",
            f"  per-variable degree equality   {mark(report.degree_equality)}",
            f"  P nonzero                      {mark(report.p_nonzero)}",
            f"  degree-sum parity              {mark(report.parity_ok)}",
            f"  unit-norm identity             {mark(report.normalization_ok)}",
            f"  degrees: {degs} (sum={report.degree_sum})",
        ]
    )


# -- input helpers ------------------------------------------------------------


def _load_pair(path: str):
    try:
        return documents.load_pair(path)
    except (documents.DocumentError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_sequence(path: str):
    try:
        return documents.load_sequence(path)
    except (documents.DocumentError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _check_steps(steps: int) -> None:
    if steps < 0:
        raise InputError(f"--steps must be non-negative, got {steps}")


# -- subcommands ---------------------------------------------------------------


def cmd_decide(args) -> int:
    _check_steps(args.steps)
    pair = _load_pair(args.input)
    trace = run_decision(pair, args.steps, args.tolerance)
    verdict = "constructible" if trace.accepted else "not constructible"
    print(f"result: {verdict} in {args.steps} steps (tolerance {args.tolerance:g})")
    print(_format_trace(trace))
    print(_format_necessary(check_necessary(pair, args.steps, args.tolerance)))
    return EXIT_TRUE if trace.accepted else EXIT_FALSE


def cmd_synthesize(args) -> int:
    _check_steps(args.steps)
    pair = _load_pair(args.input)
    result = synthesize(pair, args.steps, args.tolerance)
    if not result.constructible:
        print(f"result: not constructible in {args.steps} steps")
        print(_format_trace(result.trace))
        return EXIT_FALSE
    doc = documents.sequence_to_document(result.sequence)
    if args.output:
        try:
            documents.save_sequence(result.sequence, args.output)
        except OSError as exc:
            raise InputError(str(exc)) from exc
        print(f"result: constructible in {args.steps} steps")
        print(f"wrote sequence document to {args.output}")
    else:
        sys.stdout.write(documents.dumps(doc))
    return EXIT_TRUE


def cmd_verify(args) -> int:
    pair = _load_pair(args.pair)
    seq = _load_sequence(args.sequence)
    if seq.variables != pair.variables:
        raise InputError(
            f"variable-count mismatch: pair has {pair.variables}, "
            f"sequence has {seq.variables}"
        )
    built = evaluate_sequence(seq)
    deviation = built.max_deviation(pair)
    matches = built.approx_eq(pair, args.tolerance)
    print(f"max coefficient deviation: {deviation:.6g}")
    print(f"result: {'match' if matches else 'mismatch'} at tolerance {args.tolerance:g}")
    return EXIT_TRUE if matches else EXIT_FALSE


def cmd_gen(args) -> int:
    try:
        cfg = OracleConfig(args.variables, args.steps, args.seed, args.angle_mode)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    seq = random_sequence(cfg)
    pair = evaluate_sequence(seq)
    metadata = {
        "name": f"oracle-m{cfg.variables}-n{cfg.steps}-seed{cfg.seed}",
        "source": f"{cfg.angle_mode} angles, seed {cfg.seed} (mt19937)",
    }
    try:
        documents.save_pair(pair, args.pair_out, metadata)
        documents.save_sequence(seq, args.sequence_out)
    except OSError as exc:
        raise InputError(str(exc)) from exc
    print(f"wrote pair document to {args.pair_out}")
    print(f"wrote sequence document to {args.sequence_out}")
    return EXIT_TRUE


def cmd_check(args) -> int:
    _check_steps(args.steps)
    pair = _load_pair(args.input)
    report = check_necessary(pair, args.steps, args.tolerance)
    print(_format_necessary(report))
    print(f"result: {'all filters pass' if report.all_ok else 'rejected by a filter'}")
    return EXIT_TRUE if report.all_ok else EXIT_FALSE


def cmd_fixture(args) -> int:
    try:
        pair = fixtures.fixture_pair(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    doc = documents.pair_to_document(pair, fixtures.fixture_metadata(args.name))
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(documents.dumps(doc))
        except OSError as exc:
            raise InputError(str(exc)) from exc
        print(f"wrote {args.name} pair document to {args.output}")
    else:
        sys.stdout.write(documents.dumps(doc))
    return EXIT_TRUE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
