"""Ring-size recognition benchmark: C5 versus C6 cycles.

Two balanced classes of weighted cycles, classified with leave-one-out 1-NN
under two feature maps: concatenated per-event Betti vectors from the
persistence pipeline, and the five scalar summaries of the 1-skeleton
baseline. A paired McNemar statistic compares the two classifiers.

The cycle schedule is rigged so the closing edge always arrives last (its
weight 0.95 dominates the tree weights in [0.1, 0.3]). The baseline then sees
one cycle birth at the final event for every instance regardless of ring
size, while the pipeline's jump classes still resolve the size.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .baseline import PHSummary, run_ph_baseline, summarize
from .conversions import betti_vector, chromatic_to_poincare
from .graphs import WeightedGraph
from .pipeline import PersistenceResult, run_persistence

DEFAULT_SEED = 3
DEFAULT_PAD_EVENTS = 6
DEFAULT_PAD_BETTI = 7
CLOSER_WEIGHT = 0.95
TREE_WEIGHT_LOW = 0.1
TREE_WEIGHT_HIGH = 0.3
INSTANCES_PER_CLASS = 30


@dataclass(frozen=True)
class Instance:
    graph: WeightedGraph
    label: str
    seed: int


@dataclass(frozen=True)
class FeatureVector:
    """Flat real vector plus its (blocks, slots) layout."""

    values: tuple[float, ...]
    layout: tuple[int, int]

    def __post_init__(self):
        blocks, slots = self.layout
        if blocks * slots != len(self.values):
            raise ValueError("layout does not match vector length")


@dataclass(frozen=True, slots=True)
class PredictionRow:
    index: int
    label: str
    pred_pipeline: str
    pred_baseline: str


@dataclass(frozen=True)
class EvalReport:
    seed: int
    pad_events: int
    pad_betti: int
    accuracy_pipeline: float
    accuracy_baseline: float
    mcnemar_b: int
    mcnemar_c: int
    mcnemar_chi2: float
    predictions: tuple[PredictionRow, ...]
    mean_ms_pipeline: float
    mean_ms_baseline: float


def _cycle_instance(n: int, label: str, inst_seed: int) -> Instance:
    rng = np.random.default_rng(inst_seed)
    closer = int(rng.integers(0, n))
    while True:
        tree_weights = rng.uniform(TREE_WEIGHT_LOW, TREE_WEIGHT_HIGH, size=n - 1)
        if len({float(w) for w in tree_weights}) == n - 1:
            break
    edges = []
    k = 0
    for i in range(n):
        u, v = i, (i + 1) % n
        if i == closer:
            w = CLOSER_WEIGHT
        else:
            w = float(tree_weights[k])
            k += 1
        edges.append((u, v, w))
    return Instance(WeightedGraph(n, tuple(edges)), label, inst_seed)


def generate_dataset(seed: int) -> tuple[Instance, ...]:
    """30 C5 and 30 C6 cycles with one dominant closing edge each.

    Per-instance seeds are drawn once from a master generator, so datasets
    are reproducible and each instance records how to regenerate itself.
    """
    master = np.random.default_rng(seed)
    inst_seeds = master.integers(0, 2**63, size=2 * INSTANCES_PER_CLASS)
    out = []
    for i, s in enumerate(inst_seeds):
        n = 5 if i < INSTANCES_PER_CLASS else 6
        out.append(_cycle_instance(n, f"C{n}", int(s)))
    return tuple(out)


def vectorize_persistence(
    r: PersistenceResult, pad_events: int, pad_betti: int
) -> FeatureVector:
    """Concatenate the per-event Betti vectors, zero-padded to a fixed shape."""
    m = len(r.jumps)
    if pad_events < m:
        raise ValueError(f"pad_events = {pad_events} < event count {m}")
    if pad_betti < r.n + 1:
        raise ValueError(f"pad_betti = {pad_betti} < {r.n + 1} Betti slots")
    values: list[float] = []
    for j in range(1, pad_events + 1):
        if j <= m:
            poincare = chromatic_to_poincare(r.e_polynomials[j].poly, r.n)
            block = betti_vector(poincare, r.n).values
            block = block + (0,) * (pad_betti - len(block))
        else:
            block = (0,) * pad_betti
        values.extend(float(b) for b in block)
    return FeatureVector(tuple(values), (pad_events, pad_betti))


def vectorize_baseline(s: PHSummary) -> FeatureVector:
    values = (
        s.auc_b0,
        s.auc_b1,
        float(s.final_b1),
        float(s.b1_jumps),
        s.b1_birth_norm,
    )
    return FeatureVector(values, (1, 5))


def loo_1nn(
    features: list[FeatureVector] | tuple[FeatureVector, ...],
    labels: list[str] | tuple[str, ...],
) -> tuple[float, tuple[str, ...]]:
    """Leave-one-out nearest neighbor under Euclidean distance.

    Each instance is assigned the label of its nearest other instance;
    distance ties go to the lowest index, so results are deterministic.
    """
    if len(features) != len(labels):
        raise ValueError("features and labels differ in length")
    if len(features) < 2:
        raise ValueError("need at least two instances")
    if len(set(labels)) < 2:
        raise ValueError("need at least two classes")
    x = np.asarray([f.values for f in features], dtype=float)
    preds = []
    for i in range(len(x)):
        d2 = ((x - x[i]) ** 2).sum(axis=1)
        d2[i] = np.inf
        preds.append(labels[int(np.argmin(d2))])
    correct = sum(1 for p, y in zip(preds, labels) if p == y)
    return correct / len(labels), tuple(preds)


def mcnemar(
    pred_baseline, pred_pipeline, labels
) -> tuple[int, int, float]:
    """Continuity-corrected McNemar statistic on the discordant pairs.

    b counts instances the baseline got right and the pipeline got wrong,
    c the converse; chi2 = (|b - c| - 1)^2 / (b + c), taken as 0 when the
    classifiers never disagree in outcome.
    """
    if not (len(pred_baseline) == len(pred_pipeline) == len(labels)):
        raise ValueError("prediction vectors and labels differ in length")
    b = c = 0
    for pa, pb, y in zip(pred_baseline, pred_pipeline, labels):
        if pa == y and pb != y:
            b += 1
        elif pa != y and pb == y:
            c += 1
    if b + c == 0:
        return 0, 0, 0.0
    return b, c, (abs(b - c) - 1) ** 2 / (b + c)


def _median_seconds(fn, repeats: int) -> tuple[float, object]:
    times = []
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def run_experiment(
    seed: int = DEFAULT_SEED,
    repeats: int = 5,
    pad_events: int = DEFAULT_PAD_EVENTS,
    pad_betti: int = DEFAULT_PAD_BETTI,
) -> EvalReport:
    """End-to-end benchmark run, deterministic given the seed.

    Per-graph runtimes are the median of `repeats` wall-clock measurements;
    everything else in the report is a pure function of the seed and pads.
    """
    dataset = generate_dataset(seed)
    labels = tuple(inst.label for inst in dataset)
    pipeline_features = []
    base_features = []
    pipeline_times = []
    base_times = []
    for inst in dataset:
        secs, result = _median_seconds(lambda: run_persistence(inst.graph), repeats)
        pipeline_times.append(secs)
        pipeline_features.append(vectorize_persistence(result, pad_events, pad_betti))
        secs, trace = _median_seconds(lambda: run_ph_baseline(inst.graph), repeats)
        base_times.append(secs)
        base_features.append(vectorize_baseline(summarize(trace)))
    acc_pipeline, pred_pipeline = loo_1nn(pipeline_features, labels)
    acc_base, pred_base = loo_1nn(base_features, labels)
    b, c, chi2 = mcnemar(pred_base, pred_pipeline, labels)
    rows = tuple(
        PredictionRow(i, labels[i], pred_pipeline[i], pred_base[i])
        for i in range(len(dataset))
    )
    return EvalReport(
        seed=seed,
        pad_events=pad_events,
        pad_betti=pad_betti,
        accuracy_pipeline=acc_pipeline,
        accuracy_baseline=acc_base,
        mcnemar_b=b,
        mcnemar_c=c,
        mcnemar_chi2=chi2,
        predictions=rows,
        mean_ms_pipeline=1000.0 * statistics.mean(pipeline_times),
        mean_ms_baseline=1000.0 * statistics.mean(base_times),
    )


def report_table(report: EvalReport) -> str:
    """Two-row comparison table plus the McNemar line."""
    lines = [
        f"{'Method':<24}{'Accuracy (LOO)':>16}{'Avg. time / graph (ms)':>26}",
        f"{'Persistence pipeline':<24}{report.accuracy_pipeline:>16.2f}"
        f"{report.mean_ms_pipeline:>26.3f}",
        f"{'PH baseline (1-skel)':<24}{report.accuracy_baseline:>16.2f}"
        f"{report.mean_ms_baseline:>26.3f}",
        f"McNemar: b={report.mcnemar_b}, c={report.mcnemar_c}, "
        f"chi2={report.mcnemar_chi2:.2f}",
    ]
    return "\n".join(lines)
