"""Equivalence checking of decompiled output against the reference functions."""

from __future__ import annotations

import json
import subprocess
import sys
import traceback

import numpy as np

from .cases import CorpusCase, EquivalenceReport

_EPS = 1e-12


def decompile_case(case: CorpusCase, extra_args: tuple[str, ...] = ()) -> str:
    """Run the decompiler CLI on the case's committed dump."""
    result = subprocess.run(
        [sys.executable, "-m", "jaxdec", "--in", str(case.dump_path), *extra_args],
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        raise RuntimeError(
            f"decompiler exited with {result.returncode} for {case.name}: "
            f"{result.stderr.strip()}"
        )
    return result.stdout


def load_inputs(case: CorpusCase) -> tuple:
    with np.load(case.inputs_path) as archive:
        return tuple(archive[f"arg{i}"] for i in range(len(archive.files)))


def load_emitted(source: str, fn_name: str = "f"):
    namespace: dict = {}
    exec(compile(source, "<decompiled>", "exec"), namespace)
    return namespace[fn_name]


def _as_tuple(value) -> tuple:
    if isinstance(value, tuple):
        return value
    if isinstance(value, list):
        return tuple(value)
    return (value,)


def _kinds(array: np.ndarray) -> set[str]:
    kinds = set()
    if np.isnan(array).any():
        kinds.add("nan")
    if np.isposinf(array).any():
        kinds.add("posinf")
    if np.isneginf(array).any():
        kinds.add("neginf")
    return kinds


def compare_outputs(original, decompiled) -> tuple[float, str]:
    """Max relative error over finite positions; kind mismatch as detail text."""
    original = _as_tuple(original)
    decompiled = _as_tuple(decompiled)
    if len(original) != len(decompiled):
        return float("inf"), (
            f"output arity mismatch: {len(original)} vs {len(decompiled)}"
        )
    worst = 0.0
    for index, (ref, got) in enumerate(zip(original, decompiled)):
        ref = np.asarray(ref)
        got = np.asarray(got)
        if ref.shape != got.shape:
            return float("inf"), f"output {index} shape {got.shape} != {ref.shape}"
        if _kinds(ref) != _kinds(got):
            return float("inf"), (
                f"output {index} non-finite kinds differ: "
                f"{sorted(_kinds(got))} vs {sorted(_kinds(ref))}"
            )
        finite = np.isfinite(ref) & np.isfinite(got)
        if (np.isnan(ref) != np.isnan(got)).any():
            return float("inf"), f"output {index} nan positions differ"
        if finite.any():
            ref64 = ref[finite].astype(np.float64)
            got64 = got[finite].astype(np.float64)
            # relative to the output's magnitude scale, so 32-bit rounding
            # noise on near-zero entries does not dominate
            scale = max(float(np.abs(ref64).max()), _EPS)
            worst = max(worst, float(np.abs(got64 - ref64).max()) / scale)
    return worst, ""


def check_equivalence(case: CorpusCase, emitted_source: str) -> EquivalenceReport:
    inputs = load_inputs(case)
    expected = json.loads(case.expected_path.read_text())
    try:
        decompiled_fn = load_emitted(emitted_source)
        decompiled_out = decompiled_fn(*inputs)
    except Exception:
        return EquivalenceReport(
            case.name, float("inf"), False, detail=traceback.format_exc()
        )

    original_out = case.builder()(*inputs)
    error, detail = compare_outputs(original_out, decompiled_out)

    # guard against fixture drift: the recomputed reference must still show
    # the committed non-finite kinds
    for index, out in enumerate(_as_tuple(original_out)):
        committed = set(expected["outputs"][index]["kinds"])
        if _kinds(np.asarray(out)) != committed:
            detail = detail or f"reference output {index} kinds drifted"
            error = float("inf")

    passed = error <= case.tolerance
    return EquivalenceReport(case.name, error, passed, detail=detail)
