"""In-memory model of a parsed Jaxpr program.

All types are frozen dataclasses: once the parser has built a Program it can
be shared freely across concurrent decompilations.  Structural equality is
the dataclass-generated one, which is what the round-trip tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

SCALAR_KINDS = frozenset(
    {"f16", "bf16", "f32", "f64", "i8", "i32", "i64", "u8", "u32", "u64", "bool"}
)


@dataclass(frozen=True)
class DType:
    name: str

    def __post_init__(self):
        if self.name not in SCALAR_KINDS:
            raise ValueError(f"unknown dtype {self.name!r}")


@dataclass(frozen=True)
class ShapedType:
    dtype: DType
    dims: tuple[int, ...] = ()

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")

    @property
    def rank(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class Binder:
    name: str
    type: ShapedType | None = None
    dropped: bool = False


@dataclass(frozen=True)
class Literal:
    value: Union[int, float, bool]
    source_text: str


@dataclass(frozen=True)
class Var:
    name: str


Atom = Union[Var, Literal]


# Operator-parameter values.  The dump format allows literals, bare symbols
# (possibly dotted, e.g. GatherScatterMode.CLIP), parenthesized tuples,
# bracketed lists, constructor-style calls (np.int64(0)), opaque <...> blobs,
# and whole nested programs.
@dataclass(frozen=True)
class Symbol:
    text: str


@dataclass(frozen=True)
class ParamTuple:
    items: tuple["ParamValue", ...] = ()


@dataclass(frozen=True)
class ParamList:
    items: tuple["ParamValue", ...] = ()


@dataclass(frozen=True)
class ParamCall:
    func: str
    args: tuple["ParamValue", ...] = ()
    kwargs: tuple[tuple[str, "ParamValue"], ...] = ()


@dataclass(frozen=True)
class Opaque:
    text: str


@dataclass(frozen=True)
class Equation:
    outputs: tuple[Binder, ...]
    primitive: str
    params: tuple[tuple[str, "ParamValue"], ...]
    inputs: tuple[Atom, ...]

    def param(self, key: str, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    def has_param(self, key: str) -> bool:
        return any(k == key for k, _ in self.params)


@dataclass(frozen=True)
class Program:
    constvars: tuple[Binder, ...]
    invars: tuple[Binder, ...]
    equations: tuple[Equation, ...]
    outputs: tuple[Atom, ...]


ParamValue = Union[Literal, Symbol, ParamTuple, ParamList, ParamCall, Opaque, Program]


@dataclass(frozen=True)
class Violation:
    equation: int | None
    message: str


def nested_programs(value: ParamValue):
    """Yield every Program nested anywhere inside a parameter value."""
    if isinstance(value, Program):
        yield value
    elif isinstance(value, (ParamTuple, ParamList)):
        for item in value.items:
            yield from nested_programs(item)
    elif isinstance(value, ParamCall):
        for item in value.args:
            yield from nested_programs(item)
        for _, item in value.kwargs:
            yield from nested_programs(item)


def validate(program: Program) -> list[Violation]:
    """Check the structural invariants; an empty list means the program is ok.

    Violations are data, not exceptions: callers decide whether to promote
    them.  Checks def-before-use, per-scope binder uniqueness, and recursively
    validates programs nested in equation parameters.
    """
    violations: list[Violation] = []
    bound: set[str] = set()

    def bind(binder: Binder, index: int | None):
        if binder.dropped:
            return
        if binder.name in bound:
            violations.append(Violation(index, f"duplicate binder {binder.name}"))
        bound.add(binder.name)

    for b in program.constvars:
        bind(b, None)
    for b in program.invars:
        bind(b, None)

    for k, eq in enumerate(program.equations):
        for atom in eq.inputs:
            if isinstance(atom, Var) and atom.name not in bound:
                violations.append(
                    Violation(k, f"undefined variable {atom.name} at equation {k}")
                )
        for key, value in eq.params:
            for sub in nested_programs(value):
                for v in validate(sub):
                    violations.append(
                        Violation(k, f"in nested program ({key}): {v.message}")
                    )
        for b in eq.outputs:
            bind(b, k)

    for atom in program.outputs:
        if isinstance(atom, Var) and atom.name not in bound:
            violations.append(
                Violation(None, f"undefined variable {atom.name} in outputs")
            )
    return violations


# ---------------------------------------------------------------------------
# Debug printer.  parse(pretty_print(parse(text))) must reach a fixed point,
# which the fixture round-trip tests enforce.

def _binder_text(b: Binder) -> str:
    text = "_" if b.dropped else b.name
    if b.type is not None:
        dims = ",".join(str(d) for d in b.type.dims)
        text += f":{b.type.dtype.name}[{dims}]"
    return text


def _atom_text(a: Atom) -> str:
    return a.name if isinstance(a, Var) else a.source_text


def _pvalue_text(v: ParamValue) -> str:
    if isinstance(v, Literal):
        return v.source_text
    if isinstance(v, Symbol):
        return v.text
    if isinstance(v, Opaque):
        return v.text
    if isinstance(v, ParamTuple):
        inner = ", ".join(_pvalue_text(i) for i in v.items)
        if len(v.items) == 1:
            inner += ","
        return f"({inner})"
    if isinstance(v, ParamList):
        return "[" + ", ".join(_pvalue_text(i) for i in v.items) + "]"
    if isinstance(v, ParamCall):
        parts = [_pvalue_text(a) for a in v.args]
        parts += [f"{k}={_pvalue_text(a)}" for k, a in v.kwargs]
        return f"{v.func}({', '.join(parts)})"
    if isinstance(v, Program):
        return pretty_print(v)
    raise TypeError(f"unprintable param value {v!r}")


def _equation_text(eq: Equation) -> str:
    parts = [" ".join(_binder_text(b) for b in eq.outputs), "=", eq.primitive]
    if eq.params:
        parts[-1] += "[" + " ".join(f"{k}={_pvalue_text(v)}" for k, v in eq.params) + "]"
    parts += [_atom_text(a) for a in eq.inputs]
    return " ".join(parts)


def pretty_print(program: Program) -> str:
    """Canonical textual form of a Program, reparseable by the parser."""
    consts = " ".join(_binder_text(b) for b in program.constvars)
    ins = " ".join(_binder_text(b) for b in program.invars)
    head = "{ lambda " + (consts + " " if consts else "") + "; " + ins + ". let"
    outs = ", ".join(_atom_text(a) for a in program.outputs)
    if len(program.outputs) == 1:
        outs += ","
    tail = f"in ({outs}) }}"
    if not program.equations:
        return f"{head} {tail}"
    body = "\n".join("    " + _equation_text(eq) for eq in program.equations)
    return f"{head}\n{body}\n  {tail}"
