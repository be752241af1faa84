"""Equivalence and runtime-parity harness for decompiled Jaxpr programs."""

from .bench import benchmark_pair
from .cases import CASES, CorpusCase, EquivalenceReport, case_by_name
from .check import check_equivalence, decompile_case
from .generate import build_corpus

__all__ = [
    "CASES",
    "CorpusCase",
    "EquivalenceReport",
    "benchmark_pair",
    "build_corpus",
    "case_by_name",
    "check_equivalence",
    "decompile_case",
]

__version__ = "0.1.0"
