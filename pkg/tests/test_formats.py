"""Parsing and serialization.

Core claims:
- edge lists round-trip through write/parse for both graph flavors
- malformed input fails with the offending line number in the message
- structural problems (loops, duplicate weights) surface as graph errors,
  not parse errors
- the result JSON is byte-identical under order-preserving weight maps
"""

from __future__ import annotations

import json
import random

import pytest

from chromapersist.baseline import run_ph_baseline, summarize
from chromapersist.errors import (
    DuplicateWeightError,
    EdgeListParseError,
    GraphInvariantError,
)
from chromapersist.experiment import run_experiment
from chromapersist.formats import (
    eval_report_to_json_dict,
    oracle_report_to_json_dict,
    parse_simple_edge_list,
    parse_weighted_edge_list,
    result_to_json,
    result_to_json_dict,
    summary_to_json_dict,
    trace_to_csv,
    write_simple_edge_list,
    write_weighted_edge_list,
)
from chromapersist.graphs import SimpleGraph, WeightedGraph
from chromapersist.pipeline import run_persistence, verify_against_oracle
from helpers import random_weighted_graph


def test_weighted_round_trip():
    rng = random.Random(41)
    for _ in range(20):
        g = random_weighted_graph(rng, rng.randint(1, 8), rng.randint(0, 5))
        assert parse_weighted_edge_list(write_weighted_edge_list(g)) == g


def test_simple_round_trip():
    g = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (0, 4)])
    assert parse_simple_edge_list(write_simple_edge_list(g)) == g


def test_comments_blanks_and_optional_edge_count():
    text = """
    # a weighted path
    3 2
    0 1 0.25   # first edge
    1 2 0.5
    """
    g = parse_weighted_edge_list(text)
    assert g == WeightedGraph(3, ((0, 1, 0.25), (1, 2, 0.5)))
    no_count = "3\n0 1 0.25\n1 2 0.5\n"
    assert parse_weighted_edge_list(no_count) == g
    unweighted = "4\n0 1\n2 3 0.7\n"
    assert parse_simple_edge_list(unweighted) == SimpleGraph.from_edges(4, [(0, 1), (2, 3)])


def test_parse_errors_carry_line_numbers():
    with pytest.raises(EdgeListParseError, match="no header"):
        parse_weighted_edge_list("# nothing here\n")
    with pytest.raises(EdgeListParseError, match="line 1"):
        parse_weighted_edge_list("x y\n")
    with pytest.raises(EdgeListParseError, match="line 2"):
        parse_weighted_edge_list("2\n0 1\n")
    with pytest.raises(EdgeListParseError, match="line 3"):
        parse_weighted_edge_list("2 1\n# pad\n0 one 0.5\n")
    with pytest.raises(EdgeListParseError, match="weight"):
        parse_weighted_edge_list("2 1\n0 1 heavy\n")
    with pytest.raises(EdgeListParseError, match="announces 2"):
        parse_weighted_edge_list("3 2\n0 1 0.5\n")
    err = None
    try:
        parse_simple_edge_list("2\n0 1 2 3\n")
    except EdgeListParseError as e:
        err = e
    assert err is not None and err.line_number == 2


def test_structural_errors_are_not_parse_errors():
    with pytest.raises(GraphInvariantError):
        parse_weighted_edge_list("2 1\n1 1 0.5\n")
    with pytest.raises(DuplicateWeightError):
        parse_weighted_edge_list("3 2\n0 1 0.5\n1 2 0.5\n")
    with pytest.raises(GraphInvariantError):
        parse_simple_edge_list("3\n0 1\n1 0\n")


def test_result_json_k2_frozen():
    r = run_persistence(WeightedGraph(2, ((0, 1, 0.5),)))
    assert result_to_json_dict(r) == {
        "n": 2,
        "events": [
            {
                "j": 1,
                "edge": [0, 1],
                "delta": ["0", "1"],
                "E": ["0", "-1", "1"],
                "engine": "closed_form",
            }
        ],
        "zeta": [["1"], ["0", "1"]],
    }


def test_result_json_rational_zeta_strings():
    r = run_persistence(WeightedGraph(3, ((0, 1, 0.1), (1, 2, 0.2))))
    d = result_to_json_dict(r)
    assert d["zeta"][2] == ["0", "-1", "3/2", "0", "1/2"]
    assert [e["engine"] for e in d["events"]] == ["closed_form", "closed_form"]


def test_result_json_weight_map_byte_identity():
    rng = random.Random(43)
    for _ in range(10):
        g = random_weighted_graph(rng, rng.randint(2, 7), rng.randint(0, 4))
        remapped = WeightedGraph(g.n, tuple((u, v, 2 * w + 7) for u, v, w in g.edges))
        a = result_to_json(run_persistence(g))
        b = result_to_json(run_persistence(remapped))
        assert a.encode() == b.encode()
        json.loads(a)


def test_trace_csv():
    g = WeightedGraph(3, ((0, 1, 0.5), (1, 2, 1.0)))
    out = trace_to_csv(run_ph_baseline(g))
    assert out.splitlines() == ["j,tau,b0,b1", "1,0.5,2,0", "2,1.0,1,0"]


def test_report_dicts():
    g = WeightedGraph(3, ((0, 1, 0.5), (1, 2, 1.0)))
    s = summary_to_json_dict(summarize(run_ph_baseline(g)))
    assert set(s) == {"auc_b0", "auc_b1", "final_b1", "b1_jumps", "b1_birth_norm"}
    o = oracle_report_to_json_dict(verify_against_oracle(g))
    assert o == {"ok": True, "events_checked": 2, "first_divergence": None}
    json.dumps(s)
    json.dumps(o)


def test_eval_report_dict_round_trips_json():
    d = eval_report_to_json_dict(run_experiment(seed=2, repeats=1))
    blob = json.loads(json.dumps(d))
    assert blob["mcnemar_b"] == 0
    assert len(blob["predictions"]) == 60
    assert set(blob["predictions"][0]) == {"index", "label", "pred_pipeline", "pred_baseline"}
