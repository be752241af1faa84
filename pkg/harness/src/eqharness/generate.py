"""Corpus generation: dump each reference function to its fixture directory.

Dumps are committed so that checking can run against a pinned format; this
step is only needed when regenerating the corpus on purpose.
"""

from __future__ import annotations

import json
import re

import jax
import numpy as np

from .cases import CASES, CorpusCase

# the reference listing the dump format is pinned against
_GOLDEN_LISTING = """
{ lambda ; a:f32[]. let
    b:f32[] = exp a
    c:f32[] = add 1.0 b
    _:f32[] = log c
    d:f32[] = div 1.0 c
    e:f32[] = mul d b
  in (e,) }
"""


class FormatDriftError(RuntimeError):
    """The installed framework emits an incompatible dump format."""


def _normalize(text: str) -> str:
    # strip nondeterministic axis addresses and literal type suffixes,
    # then collapse whitespace
    text = re.sub(r"<axis 0x[0-9a-f]+>", "<axis>", text)
    text = re.sub(r"(\d):f32\[\]", r"\1", text)
    return " ".join(text.split())


def render_dump(case: CorpusCase) -> str:
    fn = case.builder()
    text = str(jax.make_jaxpr(fn)(*case.inputs))
    text = re.sub(r"<axis 0x[0-9a-f]+>", "<axis>", text)
    if not text.endswith("\n"):
        text += "\n"
    return text


def _check_format(dump: str) -> None:
    if _normalize(dump) != _normalize(_GOLDEN_LISTING):
        raise FormatDriftError(
            "softplus gradient dump does not match the pinned listing; "
            "the installed framework's dump format has drifted"
        )


def _kinds(array: np.ndarray) -> list[str]:
    kinds = set()
    if np.isnan(array).any():
        kinds.add("nan")
    if np.isposinf(array).any():
        kinds.add("posinf")
    if np.isneginf(array).any():
        kinds.add("neginf")
    return sorted(kinds)


def _summarize(array: np.ndarray) -> dict:
    summary = {
        "shape": list(array.shape),
        "dtype": str(array.dtype),
        "kinds": _kinds(array),
    }
    if array.size <= 64:
        summary["values"] = array.tolist()
    else:
        finite = array[np.isfinite(array)]
        summary["finite_mean"] = float(finite.mean()) if finite.size else None
    return summary


def build_corpus() -> list[CorpusCase]:
    softplus = next(c for c in CASES if c.name == "softplus_grad")
    _check_format(render_dump(softplus))

    for case in CASES:
        case.dump_path.parent.mkdir(parents=True, exist_ok=True)
        case.dump_path.write_text(render_dump(case))

        arrays = {f"arg{i}": np.asarray(a) for i, a in enumerate(case.inputs)}
        np.savez(case.inputs_path, **arrays)

        outputs = case.builder()(*case.inputs)
        if not isinstance(outputs, tuple):
            outputs = (outputs,)
        expected = {
            "tolerance": case.tolerance,
            "outputs": [_summarize(np.asarray(o)) for o in outputs],
        }
        case.expected_path.write_text(json.dumps(expected, indent=2) + "\n")
    return list(CASES)
