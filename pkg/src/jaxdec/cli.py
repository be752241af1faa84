"""Command-line entry point.

Exit codes: 0 success, 1 lex/parse failure, 2 unknown or unsupported
operator.  stdout carries only generated source; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .emitter import DIALECTS, EmitConfig, decompile
from .errors import DecompileError, LexError, ParseError, UnknownOperator, UnsupportedOperator


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jaxdec",
        description="Decompile a textual Jaxpr dump into editable Python source.",
    )
    parser.add_argument("--in", dest="input", required=True, metavar="PATH",
                        help="input dump file, or '-' for standard input")
    parser.add_argument("--out", dest="output", default=None, metavar="PATH",
                        help="output file (default: standard output)")
    parser.add_argument("--fn-name", dest="fn_name", default="f",
                        help="name of the emitted main function (default: f)")
    parser.add_argument("--dialect", choices=DIALECTS, default=DIALECTS[0])
    parser.add_argument("--lenient", action="store_true",
                        help="emit placeholders for unknown operators instead of failing")
    parser.add_argument("--indent", type=int, default=4, metavar="N",
                        help="spaces per indentation level (default: 4)")
    return parser


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.input == "-":
            source = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                source = fh.read()
        config = EmitConfig(
            function_name=args.fn_name,
            dialect=args.dialect,
            indent=" " * args.indent,
            strict=not args.lenient,
        )
        text, report = decompile(source, config)
    except (LexError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UnknownOperator, UnsupportedOperator) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DecompileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for primitive in report:
        print(f"warning: no rule for operator '{primitive}', emitted placeholder",
              file=sys.stderr)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def entry() -> None:
    raise SystemExit(run())
