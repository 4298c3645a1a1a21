"""File formats: edge lists in, JSON and CSV reports out.

Edge-list files are plain text. The first significant line holds the vertex
count, optionally followed by the edge count; each following line is one
edge as `u v` or `u v w`. `#` starts a comment, blank lines are skipped.

All polynomial coefficients are serialized as decimal strings, lowest degree
first, so arbitrarily large exact values survive the round trip. Pipeline
results serialize without weights or timings: the output is a function of
the event order alone, and identical schedules produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .baseline import PHSummary, PHTrace
from .errors import EdgeListParseError
from .experiment import EvalReport
from .graphs import SimpleGraph, WeightedGraph
from .pipeline import OracleReport, PersistenceResult


def _significant_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def _parse_header(lineno: int, line: str) -> tuple[int, int | None]:
    parts = line.split()
    if len(parts) not in (1, 2):
        raise EdgeListParseError("header must be `n` or `n m`", lineno)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise EdgeListParseError(f"non-integer header {line!r}", lineno) from None
    if values[0] < 0:
        raise EdgeListParseError("vertex count cannot be negative", lineno)
    m = values[1] if len(values) == 2 else None
    if m is not None and m < 0:
        raise EdgeListParseError("edge count cannot be negative", lineno)
    return values[0], m


def _parse_lines(text: str, weighted: bool):
    lines = _significant_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise EdgeListParseError("empty edge list: no header line") from None
    n, m = _parse_header(lineno, header)
    edges = []
    last_lineno = lineno
    for lineno, line in lines:
        last_lineno = lineno
        parts = line.split()
        if weighted:
            if len(parts) != 3:
                raise EdgeListParseError(
                    f"expected `u v w`, got {len(parts)} fields", lineno
                )
        elif len(parts) not in (2, 3):
            raise EdgeListParseError(
                f"expected `u v` or `u v w`, got {len(parts)} fields", lineno
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if weighted:
            try:
                w = float(parts[2])
            except ValueError:
                raise EdgeListParseError(f"non-numeric weight {parts[2]!r}", lineno) from None
            edges.append((u, v, w))
        else:
            edges.append((u, v))
    if m is not None and len(edges) != m:
        raise EdgeListParseError(
            f"header announces {m} edges but {len(edges)} were listed", last_lineno
        )
    return n, edges


def parse_weighted_edge_list(text: str) -> WeightedGraph:
    """Parse `u v w` lines into a weighted graph.

    Structural violations (bad ids, loops, duplicate pairs, duplicate
    weights) surface as the graph types' own errors, not as parse errors.
    """
    n, edges = _parse_lines(text, weighted=True)
    return WeightedGraph(n, tuple(edges))


def parse_simple_edge_list(text: str) -> SimpleGraph:
    """Parse `u v` (or `u v w`, weights ignored) lines into a simple graph."""
    n, edges = _parse_lines(text, weighted=False)
    return SimpleGraph.from_edges(n, edges)


def write_weighted_edge_list(g: WeightedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v} {w!r}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def write_simple_edge_list(g: SimpleGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _int_coeff_strings(coeffs) -> list[str]:
    return [str(c) for c in coeffs]


def _fraction_strings(coeffs: tuple[Fraction, ...]) -> list[str]:
    return [str(c) for c in coeffs]


def result_to_json_dict(r: PersistenceResult) -> dict:
    """Schema: {"n", "events": [{"j", "edge", "delta", "E", "engine"}], "zeta"}.

    E_0 = s^n is implied and not serialized. zeta is a list over T-powers of
    coefficient-string lists (polynomials in s with exact rational entries).
    """
    events = []
    for idx, (u, v) in enumerate(r.event_edges):
        events.append(
            {
                "j": idx + 1,
                "edge": [u, v],
                "delta": _int_coeff_strings(r.jumps[idx].poly.coeffs),
                "E": _int_coeff_strings(r.e_polynomials[idx + 1].poly.coeffs),
                "engine": r.engine_log[idx].engine.value,
            }
        )
    zeta = [_fraction_strings(c.coeffs) for c in r.zeta.coeffs]
    return {"n": r.n, "events": events, "zeta": zeta}


def result_to_json(r: PersistenceResult) -> str:
    return json.dumps(result_to_json_dict(r), indent=2)


def trace_to_csv(trace: PHTrace) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["j", "tau", "b0", "b1"])
    for rec in trace.records:
        writer.writerow([rec.j, repr(rec.tau), rec.b0, rec.b1])
    return buf.getvalue()


def summary_to_json_dict(s: PHSummary) -> dict:
    return {
        "auc_b0": s.auc_b0,
        "auc_b1": s.auc_b1,
        "final_b1": s.final_b1,
        "b1_jumps": s.b1_jumps,
        "b1_birth_norm": s.b1_birth_norm,
    }


def oracle_report_to_json_dict(r: OracleReport) -> dict:
    return {
        "ok": r.ok,
        "events_checked": r.events_checked,
        "first_divergence": r.first_divergence,
    }


def eval_report_to_json_dict(r: EvalReport) -> dict:
    return {
        "seed": r.seed,
        "pad_events": r.pad_events,
        "pad_betti": r.pad_betti,
        "accuracy_pipeline": r.accuracy_pipeline,
        "accuracy_baseline": r.accuracy_baseline,
        "mcnemar_b": r.mcnemar_b,
        "mcnemar_c": r.mcnemar_c,
        "mcnemar_chi2": r.mcnemar_chi2,
        "mean_ms_pipeline": r.mean_ms_pipeline,
        "mean_ms_baseline": r.mean_ms_baseline,
        "predictions": [
            {
                "index": row.index,
                "label": row.label,
                "pred_pipeline": row.pred_pipeline,
                "pred_baseline": row.pred_baseline,
            }
            for row in r.predictions
        ],
    }
