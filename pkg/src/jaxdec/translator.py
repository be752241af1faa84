"""Equation-to-statement translation and helper lifting.

Each primitive has an OperatorRule whose render function turns one Equation
into target statements plus the import lines those statements need.  Nested
programs found in operator parameters are lifted into named top-level helper
functions ``fn_0``, ``fn_1``, ... in lift-completion order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import UnknownOperator
from .imports import ImportSet
from .ir import Atom, Equation, Literal, Program, ShapedType, Var
from .renamer import NameEnv

RenderResult = tuple[list[str], set[str]]


@dataclass(frozen=True)
class OperatorRule:
    primitive: str
    render: Callable[[Equation, "TranslationContext"], RenderResult]


class Registry:
    """Exact-match primitive lookup; later registrations replace earlier."""

    def __init__(self, rules: dict[str, OperatorRule] | None = None):
        self._rules: dict[str, OperatorRule] = dict(rules or {})

    def register(self, rule: OperatorRule) -> "Registry":
        self._rules[rule.primitive] = rule
        return self

    def lookup(self, primitive: str) -> OperatorRule | None:
        return self._rules.get(primitive)

    def primitives(self) -> set[str]:
        return set(self._rules)

    def copy(self) -> "Registry":
        return Registry(self._rules)

    def __len__(self) -> int:
        return len(self._rules)


class _HelperState:
    """Helper definitions and the incrementing-index counter, shared across
    every scope of one decompilation."""

    def __init__(self):
        self.counter = 0
        self.defs: list[str] = []


@dataclass
class TranslationContext:
    env: NameEnv
    imports: ImportSet
    config: "EmitConfig"  # duck-typed: dialect / indent / strict
    registry: Registry
    state: _HelperState = field(default_factory=_HelperState)
    report: list[str] = field(default_factory=list)
    types: dict[str, ShapedType | None] = field(default_factory=dict)

    @property
    def helper_counter(self) -> int:
        return self.state.counter

    @property
    def helpers(self) -> list[str]:
        return self.state.defs

    def child(self) -> "TranslationContext":
        """Fresh scope (new name env and type table), shared helpers,
        imports, report, and config."""
        return TranslationContext(
            NameEnv(), self.imports, self.config, self.registry, self.state, self.report
        )

    def type_of(self, atom: Atom) -> ShapedType | None:
        if isinstance(atom, Var):
            return self.types.get(atom.name)
        return None


def atom_text(atom: Atom, ctx: TranslationContext, imports: set[str]) -> str:
    if isinstance(atom, Var):
        return ctx.env.lookup(atom.name)
    if atom.source_text in ("inf", "-inf", "nan"):
        # spelled names come from the wildcard math namespace
        from .rules import ns_import

        imports.add(ns_import(ctx))
    return atom.source_text


def bind_outputs(eq: Equation, ctx: TranslationContext) -> str:
    """Sanitize and bind the equation's output binders; returns the
    assignment target text (tuple target for multi-output primitives)."""
    names = []
    for b in eq.outputs:
        if b.dropped:
            names.append(ctx.env.fresh_dropped())
        else:
            names.append(ctx.env.sanitize(b.name))
            ctx.types[b.name] = b.type
    return ", ".join(names)


def translate_equation(eq: Equation, ctx: TranslationContext) -> list[str]:
    rule = ctx.registry.lookup(eq.primitive)
    if rule is None:
        if ctx.config.strict:
            raise UnknownOperator(eq.primitive)
        targets = bind_outputs(eq, ctx)
        ctx.report.append(eq.primitive)
        return [f"{targets} = None  # unsupported operator: {eq.primitive}"]
    statements, imports = rule.render(eq, ctx)
    for line in imports:
        ctx.imports.require(line)
    return statements


def lift_program(nested: Program, ctx: TranslationContext) -> str:
    """Decompile a nested program into a named helper; returns its name.

    The counter is claimed before recursing, so sibling helpers number in
    encounter order while an inner helper's definition still lands before
    the outer one that references it.
    """
    index = ctx.state.counter
    ctx.state.counter += 1
    name = f"fn_{index}"
    text = render_function(nested, name, ctx.child())
    ctx.state.defs.append(text)
    return name


def render_function(program: Program, name: str, ctx: TranslationContext) -> str:
    """Emit one function definition: invars (constvars appended as trailing
    parameters), the translated body, and the return statement."""
    params: list[str] = []
    for b in (*program.invars, *program.constvars):
        if b.dropped:
            params.append(ctx.env.fresh_dropped())
        else:
            params.append(ctx.env.sanitize(b.name))
            ctx.types[b.name] = b.type
    body: list[str] = []
    for eq in program.equations:
        body.extend(translate_equation(eq, ctx))
    ret_imports: set[str] = set()
    outs = [atom_text(a, ctx, ret_imports) for a in program.outputs]
    for line in ret_imports:
        ctx.imports.require(line)
    body.append("return " + ", ".join(outs) if outs else "return")
    lines = [f"def {name}({', '.join(params)}):"]
    for statement in body:
        for ln in statement.split("\n"):
            lines.append(ctx.config.indent + ln if ln else ln)
    return "\n".join(lines)
