"""Reference functions and their fixed example inputs.

Each case pairs a small JAX function with deterministic inputs; the rest
of the harness only ever sees the textual dump, the saved inputs, and the
original callable for side-by-side evaluation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

# pmap needs more than one mapped program instance even on a single host
os.environ.setdefault("XLA_FLAGS", "--xla_force_host_platform_device_count=2")

import jax
import jax.numpy as jnp
import numpy as np

CORPUS_DIR = Path(__file__).resolve().parents[2] / "corpus"

DEFAULT_TOLERANCE = 1e-6  # relative, for 32-bit floats


@dataclass(frozen=True)
class CorpusCase:
    name: str
    builder: Callable
    inputs: tuple
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def dump_path(self) -> Path:
        return CORPUS_DIR / self.name / "program.jaxpr"

    @property
    def inputs_path(self) -> Path:
        return CORPUS_DIR / self.name / "inputs.npz"

    @property
    def expected_path(self) -> Path:
        return CORPUS_DIR / self.name / "expected.json"


@dataclass
class EquivalenceReport:
    name: str
    max_relative_error: float
    passed: bool
    detail: str = ""
    original_mean: float = 0.0
    original_std: float = 0.0
    decompiled_mean: float = 0.0
    decompiled_std: float = 0.0
    parity: bool = field(default=False)


def _softplus(x):
    return jnp.log(1 + jnp.exp(x))


def _softplus_grad():
    return jax.grad(_softplus)


def _mlp_forward(w1, b1, w2, b2, x):
    h = jnp.tanh(x @ w1 + b1)
    return h @ w2 + b2


def _mlp_loss(w1, b1, w2, b2, x, y):
    pred = _mlp_forward(w1, b1, w2, b2, x)
    return jnp.mean((pred - y) ** 2)


def _mlp_inputs(with_targets=False):
    rng = np.random.default_rng(0)
    units = 16
    # batch large enough that arithmetic, not eager dispatch, dominates
    # the runtime comparison
    batch = 16_384
    w1 = rng.standard_normal((8, units)).astype(np.float32)
    b1 = rng.standard_normal(units).astype(np.float32)
    w2 = rng.standard_normal((units, 4)).astype(np.float32)
    b2 = rng.standard_normal(4).astype(np.float32)
    x = rng.standard_normal((batch, 8)).astype(np.float32)
    args = [w1, b1, w2, b2, x]
    if with_targets:
        args.append(rng.standard_normal((batch, 4)).astype(np.float32))
    return tuple(args)


def _cond_fn(x):
    return jax.lax.cond(x > 0, lambda v: v * 2.0, lambda v: -v, x)


def _scan_cumsum(xs):
    def step(carry, x):
        carry = carry + x
        return carry, carry

    _, ys = jax.lax.scan(step, jnp.float32(0.0), xs)
    return ys


def _sort_take3(x):
    return jax.lax.sort(x)[:3]


def _pmap_double(x):
    return jax.pmap(lambda v: v * 2.0)(x)


def _sort_input():
    rng = np.random.default_rng(7)
    return rng.standard_normal(10_000).astype(np.float32)


CASES: tuple[CorpusCase, ...] = (
    CorpusCase("softplus_grad", _softplus_grad, (np.float32(1.0),)),
    CorpusCase("softplus_grad_unstable", _softplus_grad, (np.float32(100.0),)),
    CorpusCase("identity", lambda: (lambda x: x), (np.float32(3.0),)),
    CorpusCase("mlp_forward", lambda: _mlp_forward, _mlp_inputs()),
    CorpusCase(
        "mlp_grad",
        lambda: jax.grad(_mlp_loss, argnums=(0, 1, 2, 3)),
        _mlp_inputs(with_targets=True),
    ),
    CorpusCase("cond_pos", lambda: _cond_fn, (np.float32(3.0),)),
    CorpusCase("cond_neg", lambda: _cond_fn, (np.float32(-1.5),)),
    CorpusCase(
        "scan_cumsum",
        lambda: _scan_cumsum,
        (np.array([1.0, 2.0, 3.0], dtype=np.float32),),
    ),
    CorpusCase("sort_take3", lambda: _sort_take3, (_sort_input(),)),
    CorpusCase(
        "pmap_double",
        lambda: _pmap_double,
        (np.arange(6, dtype=np.float32).reshape(2, 3),),
    ),
)


def case_by_name(name: str) -> CorpusCase:
    for case in CASES:
        if case.name == name:
            return case
    raise KeyError(name)
