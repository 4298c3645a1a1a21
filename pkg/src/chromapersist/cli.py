"""Command-line interface.

Verbs:
  chi         chromatic polynomial of an edge-list file (JSON to stdout)
  run         full persistence run on a weighted edge-list file (JSON)
  baseline    1-skeleton persistent homology trace (CSV) and summary (JSON)
  verify      re-check every event against the brute-force oracle
  experiment  ring-size recognition benchmark (table + JSON report)

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 graph
invariant violation (including duplicate weights), 4 engine precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .baseline import run_ph_baseline, summarize
from .engines import chi_with_engine
from .errors import (
    EdgeListParseError,
    EngineUnsupportedError,
    GraphInvariantError,
)
from .experiment import (
    DEFAULT_PAD_BETTI,
    DEFAULT_PAD_EVENTS,
    DEFAULT_SEED,
    report_table,
    run_experiment,
)
from .formats import (
    eval_report_to_json_dict,
    oracle_report_to_json_dict,
    parse_simple_edge_list,
    parse_weighted_edge_list,
    result_to_json,
    summary_to_json_dict,
    trace_to_csv,
)
from .pipeline import run_persistence, verify_against_oracle

ENGINE_TOKENS = {
    "auto": "auto",
    "closed": "closed_form",
    "sp": "series_parallel",
    "twdp": "treewidth_dp",
    "delcon": "deletion_contraction",
    "brute": "brute_force",
}


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _cmd_chi(args: argparse.Namespace) -> int:
    g = parse_simple_edge_list(_read(args.input))
    start = time.perf_counter()
    chi, engine = chi_with_engine(g, ENGINE_TOKENS[args.engine])
    seconds = time.perf_counter() - start
    payload = {
        "coefficients": [str(c) for c in chi.coeffs],
        "engine": engine.value,
        "seconds": seconds,
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    g = parse_weighted_edge_list(_read(args.input))
    result = run_persistence(g, zeta_truncation=args.truncate_zeta)
    _emit(result_to_json(result), args.out)
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    g = parse_weighted_edge_list(_read(args.input))
    trace = run_ph_baseline(g)
    _emit(trace_to_csv(trace), args.out)
    if args.out is not None:
        summary = summary_to_json_dict(summarize(trace))
        sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = parse_weighted_edge_list(_read(args.input))
    report = verify_against_oracle(g)
    _emit(json.dumps(oracle_report_to_json_dict(report), indent=2), args.out)
    return 0 if report.ok else 1


def _cmd_experiment(args: argparse.Namespace) -> int:
    report = run_experiment(
        seed=args.seed, pad_events=args.pad_events, pad_betti=args.pad_betti
    )
    sys.stdout.write(report_table(report) + "\n")
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as f:
            json.dump(eval_report_to_json_dict(report), f, indent=2)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromapersist",
        description="Chromatic persistence of weighted graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_chi = sub.add_parser("chi", help="chromatic polynomial of a graph file")
    p_chi.add_argument("input", help="edge-list file (`u v` or `u v w` lines)")
    p_chi.add_argument(
        "--engine", choices=sorted(ENGINE_TOKENS), default="auto",
        help="force a specific engine (default: auto dispatch)",
    )
    p_chi.add_argument("--out", help="write JSON here instead of stdout")
    p_chi.set_defaults(func=_cmd_chi)

    p_run = sub.add_parser("run", help="event-driven persistence run")
    p_run.add_argument("input", help="weighted edge-list file")
    p_run.add_argument(
        "--truncate-zeta", type=int, default=None, metavar="N",
        help="truncate the barcode zeta at T^N (default: event count; "
        "0 skips zeta entirely, which keeps huge runs cheap)",
    )
    p_run.add_argument("--out", help="write JSON here instead of stdout")
    p_run.set_defaults(func=_cmd_run)

    p_base = sub.add_parser("baseline", help="persistent homology baseline")
    p_base.add_argument("input", help="weighted edge-list file")
    p_base.add_argument(
        "--out",
        help="write the trace CSV here; the summary JSON then goes to stdout",
    )
    p_base.set_defaults(func=_cmd_baseline)

    p_verify = sub.add_parser("verify", help="check a run against the oracle")
    p_verify.add_argument("input", help="weighted edge-list file (at most 10 vertices)")
    p_verify.add_argument("--out", help="write the JSON report here")
    p_verify.set_defaults(func=_cmd_verify)

    p_exp = sub.add_parser("experiment", help="ring-size recognition benchmark")
    p_exp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_exp.add_argument("--pad-events", type=int, default=DEFAULT_PAD_EVENTS)
    p_exp.add_argument("--pad-betti", type=int, default=DEFAULT_PAD_BETTI)
    p_exp.add_argument("--out", help="write the JSON report here")
    p_exp.set_defaults(func=_cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgeListParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except GraphInvariantError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except EngineUnsupportedError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
