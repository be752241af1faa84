"""Command line front end: harness generate | check | bench."""

from __future__ import annotations

import argparse
import sys

from .cases import CASES, case_by_name


def _selected(names):
    return [case_by_name(n) for n in names] if names else list(CASES)


def _cmd_generate(args) -> int:
    from .generate import build_corpus

    for case in build_corpus():
        print(f"wrote {case.dump_path.parent}")
    return 0


def _cmd_check(args) -> int:
    from .check import check_equivalence, decompile_case

    failures = 0
    for case in _selected(args.cases):
        report = check_equivalence(case, decompile_case(case))
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {case.name}: max relative error "
              f"{report.max_relative_error:.3e}")
        if not report.passed:
            failures += 1
            if report.detail:
                print(report.detail, file=sys.stderr)
    return 1 if failures else 0


def _cmd_bench(args) -> int:
    from .bench import benchmark_pair
    from .check import decompile_case

    failures = 0
    for case in _selected(args.cases):
        report = benchmark_pair(case, decompile_case(case))
        status = "PASS" if report.parity else "FAIL"
        print(f"{status} {case.name}: original "
              f"{report.original_mean:.6f}s ± {report.original_std:.6f}, "
              f"decompiled {report.decompiled_mean:.6f}s ± "
              f"{report.decompiled_std:.6f}")
        if not report.parity:
            failures += 1
    return 1 if failures else 0


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="harness")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("generate", help="regenerate the committed corpus")
    for name, help_text in (("check", "verify numerical equivalence"),
                            ("bench", "measure runtime parity")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("cases", nargs="*", help="case names (default: all)")

    args = parser.parse_args(argv)
    return {"generate": _cmd_generate,
            "check": _cmd_check,
            "bench": _cmd_bench}[args.command](args)


def entry() -> None:
    raise SystemExit(run())
