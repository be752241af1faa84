"""Final assembly: imports, lifted helpers, then the main function."""

from __future__ import annotations

from dataclasses import dataclass

from .imports import ImportSet
from .ir import Program
from .parser import parse
from .renamer import NameEnv, is_reserved
from .rules import FRAMEWORK, PLAIN, default_registry
from .translator import Registry, TranslationContext, render_function

DIALECTS = (FRAMEWORK, PLAIN)


@dataclass(frozen=True)
class EmitConfig:
    function_name: str = "f"
    dialect: str = FRAMEWORK
    indent: str = "    "
    strict: bool = True

    def __post_init__(self):
        if self.dialect not in DIALECTS:
            raise ValueError(f"unknown dialect {self.dialect!r}")
        if not self.function_name.isidentifier() or is_reserved(self.function_name):
            raise ValueError(f"illegal function name {self.function_name!r}")


def emit_module(
    program: Program,
    config: EmitConfig = EmitConfig(),
    registry: Registry | None = None,
    report: list[str] | None = None,
) -> str:
    """Emit the full output module for a validated program.

    Output is UTF-8/LF, one statement per line, no trailing whitespace, and
    deterministic for identical (program, config) pairs.
    """
    ctx = TranslationContext(
        env=NameEnv(),
        imports=ImportSet(),
        config=config,
        registry=registry or default_registry(),
    )
    main = render_function(program, config.function_name, ctx)
    if report is not None:
        report.extend(ctx.report)
    parts = []
    import_lines = ctx.imports.emit()
    if import_lines:
        parts.append("\n".join(import_lines))
    parts.extend(ctx.helpers)
    parts.append(main)
    return "\n\n".join(parts) + "\n"


def decompile(
    source: str,
    config: EmitConfig = EmitConfig(),
    registry: Registry | None = None,
) -> tuple[str, list[str]]:
    """Text-to-text pipeline: tokenize, parse, validate, translate, emit.

    Returns the emitted module and the report of operators that were given
    placeholders (always empty in strict mode, where they raise instead).
    """
    program = parse(source)
    report: list[str] = []
    text = emit_module(program, config, registry, report)
    return text, report
