"""Command-line pipeline: ``validate``, ``classical``, ``anneal``,
``compare``, and ``all``.

Exit codes are a stable contract for CI: 0 when every verdict passes, 2 on
a verdict failure (constraint violations, equilibrium/set mismatch, missing
optima in the readout), and 1 on execution errors such as unreadable
configuration files or incompatible runs.
"""

from __future__ import annotations

import argparse
import os
import sys

from .dynamics import DEFAULT_C6
from .errors import ConstraintViolation, RydnashError
from .fileio import (
    load_game,
    load_schedule,
    read_report,
    write_histogram_csv,
    write_report,
    write_schedule_series,
)
from .game import DEFAULT_EXHAUSTIVE_LIMIT, GameParams
from .pipeline import (
    DEFAULT_SEED,
    ClassicalResult,
    RunConfig,
    compare,
    run_classical,
    run_quantum,
    validate_run,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERDICT = 2

OUTDIR_ENV = "RYDNASH_OUT"

CLASSICAL_REPORT = "classical_report.yaml"
ANNEAL_REPORT = "anneal_report.yaml"
COMPARE_REPORT = "compare_report.yaml"
VALIDATION_REPORT = "validation_report.yaml"
HISTOGRAM_CSV = "histogram.csv"
SCHEDULE_SERIES_CSV = "schedule_series.csv"


def _default_outdir() -> str:
    return os.environ.get(OUTDIR_ENV, "rydnash_out")


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=_default_outdir(), help=f"output directory (default ${OUTDIR_ENV} or rydnash_out)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="graph file (YAML: nodes, radius, labels)")
    _add_out(p)
    p.add_argument("--limit", type=int, default=DEFAULT_EXHAUSTIVE_LIMIT, help="exhaustive enumeration node limit")


def _add_game(p: argparse.ArgumentParser) -> None:
    p.add_argument("--game", help="game parameter file (YAML: e_star, cost, benefit)")


def _add_quantum(p: argparse.ArgumentParser) -> None:
    p.add_argument("--schedule", help="schedule file (YAML: omega, delta, duration); default: reference ramp")
    p.add_argument("--coupling-c", type=float, default=DEFAULT_C6, help="van der Waals coefficient, rad/us*um^6")
    p.add_argument("--shots", type=int, default=1000, help="measurement shots")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")
    p.add_argument("--plot-data", action="store_true", help="also emit a ready-to-plot schedule series CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rydnash",
        description="Equilibria of a networked public-goods game, classically enumerated "
        "and cross-checked against a simulated Rydberg-array anneal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a layout (and schedule) against hardware limits")
    _add_common(p)
    p.add_argument("--schedule", help="schedule file; default: reference ramp")
    p.add_argument("--margin", type=float, default=0.15, help="disk-boundary ambiguity margin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classical", help="enumerate Nash equilibria and independent sets")
    _add_common(p)
    _add_game(p)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("anneal", help="simulate the annealing run and classify the readout")
    _add_common(p)
    _add_quantum(p)
    p.set_defaults(func=cmd_anneal)

    p = sub.add_parser("compare", help="cross-check persisted classical and annealing reports")
    _add_out(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("all", help="classical + anneal + compare in one run")
    _add_common(p)
    _add_game(p)
    _add_quantum(p)
    p.set_defaults(func=cmd_all)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    game = load_game(args.game) if getattr(args, "game", None) else GameParams()
    schedule = load_schedule(args.schedule) if getattr(args, "schedule", None) else None
    return RunConfig(
        graph_path=args.graph,
        game=game,
        schedule=schedule,
        c6=getattr(args, "coupling_c", DEFAULT_C6),
        shots=getattr(args, "shots", 1000),
        seed=getattr(args, "seed", DEFAULT_SEED),
        outdir=args.out,
        limit=args.limit,
        margin=getattr(args, "margin", 0.15),
        plot_data=getattr(args, "plot_data", False),
    )


def _validation_report_dict(report) -> dict:
    return {
        "ok": report.ok,
        "violations": [
            {"kind": v.kind, "subject": list(v.subject), "value": v.value, "limit": v.limit}
            for v in report.violations
        ],
        "warnings": [
            {"kind": w.kind, "pair": list(w.pair), "distance": w.distance, "threshold": w.threshold}
            for w in report.warnings
        ],
    }


def _write(outdir: str, name: str, data: dict) -> str:
    path = os.path.join(outdir, name)
    write_report(path, data)
    return path


def cmd_validate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    _, _, report = validate_run(config)
    path = _write(config.outdir, VALIDATION_REPORT, _validation_report_dict(report))
    print(f"validation {'ok' if report.ok else 'FAILED'}: {path}")
    return EXIT_OK if report.ok else EXIT_VERDICT


def cmd_classical(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    result = run_classical(config)
    path = _write(config.outdir, CLASSICAL_REPORT, result.to_report())
    print(
        f"classical: {len(result.nash)} equilibria, {len(result.maximal_sets)} maximal sets, "
        f"{len(result.maximum_sets)} maximum sets; match={result.nash_equals_mis}: {path}"
    )
    return EXIT_OK if result.nash_equals_mis else EXIT_VERDICT


def _run_anneal(config: RunConfig):
    """Shared by anneal/all: returns (result, exit_code); writes reports."""
    try:
        result = run_quantum(config)
    except ConstraintViolation as exc:
        if exc.report is None:
            raise
        path = _write(config.outdir, VALIDATION_REPORT, _validation_report_dict(exc.report))
        print(f"anneal refused, hardware validation failed: {path}", file=sys.stderr)
        return None, EXIT_VERDICT
    _write(config.outdir, ANNEAL_REPORT, result.to_report())
    write_histogram_csv(os.path.join(config.outdir, HISTOGRAM_CSV), result.rows)
    if config.plot_data:
        schedule = config.schedule
        if schedule is None:
            from .schedule import default_schedule

            schedule = default_schedule(hw=config.hw)
        write_schedule_series(os.path.join(config.outdir, SCHEDULE_SERIES_CSV), schedule)
    print(
        f"anneal: {result.shots} shots, top readout {result.top_k[0] if result.top_k else '-'}, "
        f"optima in top-{len(result.maximum_sets)}: {result.mis_in_topk}"
    )
    return result, EXIT_OK if result.mis_in_topk else EXIT_VERDICT


def cmd_anneal(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    _, code = _run_anneal(config)
    return code


def cmd_compare(args: argparse.Namespace) -> int:
    classical = ClassicalResult.from_report(read_report(os.path.join(args.out, CLASSICAL_REPORT)))
    quantum = read_report(os.path.join(args.out, ANNEAL_REPORT))
    report = compare(classical, quantum)
    path = _write(args.out, COMPARE_REPORT, report.to_report())
    print(f"compare: overall {'PASS' if report.overall_pass else 'FAIL'}: {path}")
    return EXIT_OK if report.overall_pass else EXIT_VERDICT


def cmd_all(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    classical = run_classical(config)
    _write(config.outdir, CLASSICAL_REPORT, classical.to_report())
    quantum, code = _run_anneal(config)
    if quantum is None:
        return code
    report = compare(classical, quantum)
    path = _write(config.outdir, COMPARE_REPORT, report.to_report())
    print(f"all: overall {'PASS' if report.overall_pass else 'FAIL'}: {path}")
    return EXIT_OK if report.overall_pass else EXIT_VERDICT


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RydnashError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def console_main() -> None:
    sys.exit(main())
