"""Runtime parity measurement: decompiled vs original, unjitted."""

from __future__ import annotations

import statistics
import time

from .cases import CorpusCase, EquivalenceReport

RUNS = 10  # fixed by the measurement protocol
WARMUP = 1
PARITY_FACTOR = 2.0


_MIN_SAMPLE_SECONDS = 0.005
_MAX_REPS = 1000


def _calibrate_reps(fn, inputs) -> int:
    start = time.perf_counter()
    fn(*inputs)
    elapsed = max(time.perf_counter() - start, 1e-9)
    return max(1, min(_MAX_REPS, int(_MIN_SAMPLE_SECONDS / elapsed)))


def _timed(fn, inputs, reps: int) -> float:
    # each sample averages an inner loop so one scheduler hiccup cannot
    # dominate a microsecond-scale measurement
    start = time.perf_counter()
    for _ in range(reps):
        fn(*inputs)
    return (time.perf_counter() - start) / reps


def benchmark_pair(case: CorpusCase, emitted_source: str,
                   report: EquivalenceReport | None = None) -> EquivalenceReport:
    from .check import load_emitted, load_inputs

    if report is None:
        report = EquivalenceReport(case.name, 0.0, True)

    inputs = load_inputs(case)
    original_fn = case.builder()
    decompiled_fn = load_emitted(emitted_source)
    for _ in range(WARMUP):
        original_fn(*inputs)
        decompiled_fn(*inputs)
    reps = _calibrate_reps(original_fn, inputs)

    # interleave the two sides so drifting machine load hits them equally
    original, decompiled = [], []
    for _ in range(RUNS):
        original.append(_timed(original_fn, inputs, reps))
        decompiled.append(_timed(decompiled_fn, inputs, reps))

    report.original_mean = statistics.mean(original)
    report.original_std = statistics.stdev(original)
    report.decompiled_mean = statistics.mean(decompiled)
    report.decompiled_std = statistics.stdev(decompiled)
    report.parity = report.decompiled_mean <= PARITY_FACTOR * report.original_mean
    return report
