"""Built-in operator registry.

Rules render into one of two dialects:

* ``framework-numpy`` — wildcard-imports ``jax.numpy`` and may fall back to
  ``jax.lax`` for primitives with no array-API spelling.
* ``plain-numpy``     — wildcard-imports ``numpy``; primitives with no
  portable equivalent raise UnsupportedOperator.

The rendered statements reference only operand names/literals, so operator
precedence never needs parenthesizing beyond what each template hardcodes.
"""

from __future__ import annotations

from .errors import UnsupportedOperator
from .ir import Equation, Literal, ParamCall, ParamList, ParamTuple, Program, Symbol
from .translator import (
    OperatorRule,
    Registry,
    TranslationContext,
    atom_text,
    bind_outputs,
    lift_program,
)

FRAMEWORK = "framework-numpy"
PLAIN = "plain-numpy"


def ns_import(ctx: TranslationContext) -> str:
    return "from jax.numpy import *" if ctx.config.dialect == FRAMEWORK else "from numpy import *"


def _lax_import(prim: str, ctx: TranslationContext) -> str:
    if ctx.config.dialect != FRAMEWORK:
        raise UnsupportedOperator(prim, "no portable equivalent in the plain-numpy dialect")
    return "from jax import lax"


def _erf_import(ctx: TranslationContext) -> str:
    if ctx.config.dialect == FRAMEWORK:
        return "from jax.scipy.special import erf"
    return "from scipy.special import erf"


# -- parameter coercion helpers ---------------------------------------------

def _as_int(prim: str, value) -> int:
    if isinstance(value, Literal) and isinstance(value.value, int) and not isinstance(value.value, bool):
        return value.value
    # the printer wraps some integers as np.int64(k) / np.int32(k)
    if isinstance(value, ParamCall) and value.func.split(".")[-1] in (
        "int8", "int16", "int32", "int64", "uint8", "uint32", "uint64",
    ) and len(value.args) == 1:
        return _as_int(prim, value.args[0])
    raise UnsupportedOperator(prim, f"expected integer parameter, got {value!r}")


def _as_int_tuple(prim: str, value) -> tuple[int, ...]:
    if isinstance(value, (ParamTuple, ParamList)):
        return tuple(_as_int(prim, item) for item in value.items)
    raise UnsupportedOperator(prim, f"expected integer sequence parameter, got {value!r}")


def _is_none(value) -> bool:
    return isinstance(value, Symbol) and value.text == "None"


_DTYPE_NAMES = {
    "float16": "float16",
    "bfloat16": "bfloat16",
    "float32": "float32",
    "float64": "float64",
    "int8": "int8",
    "int16": "int16",
    "int32": "int32",
    "int64": "int64",
    "uint8": "uint8",
    "uint16": "uint16",
    "uint32": "uint32",
    "uint64": "uint64",
    "bool": "bool_",
}


def _dtype_name(prim: str, value, ctx: TranslationContext) -> str:
    if isinstance(value, Symbol) and value.text in _DTYPE_NAMES:
        name = _DTYPE_NAMES[value.text]
        if name == "bfloat16" and ctx.config.dialect != FRAMEWORK:
            raise UnsupportedOperator(prim, "bfloat16 has no plain-numpy equivalent")
        return name
    raise UnsupportedOperator(prim, f"unknown dtype parameter {value!r}")


# -- registry construction ---------------------------------------------------

_BUILTIN: dict = {}


def _rule(name: str):
    def deco(fn):
        _BUILTIN[name] = fn
        return fn

    return deco


def default_registry() -> Registry:
    registry = Registry()
    for name, fn in _BUILTIN.items():
        registry.register(OperatorRule(name, fn))
    return registry


def _ins(eq: Equation, ctx: TranslationContext, imports: set[str]) -> list[str]:
    return [atom_text(a, ctx, imports) for a in eq.inputs]


# -- element-wise: infix operators ------------------------------------------

_BINOPS = {
    "add": "+",
    "add_any": "+",
    "sub": "-",
    "mul": "*",
    "div": "/",
    "rem": "%",
    "pow": "**",
    "eq": "==",
    "ne": "!=",
    "lt": "<",
    "le": "<=",
    "gt": ">",
    "ge": ">=",
}

for _prim, _op in _BINOPS.items():
    @_rule(_prim)
    def _render_binop(eq, ctx, _op=_op):
        imports: set[str] = set()
        a, b = _ins(eq, ctx, imports)
        return [f"{bind_outputs(eq, ctx)} = {a} {_op} {b}"], imports


# -- element-wise: namespace function calls ---------------------------------

_UNARY_FUNCS = {
    "exp": "exp",
    "log": "log",
    "sin": "sin",
    "cos": "cos",
    "tan": "tan",
    "tanh": "tanh",
    "sqrt": "sqrt",
    "sign": "sign",
    "floor": "floor",
    "ceil": "ceil",
    "round": "round",
    "not": "logical_not",
}

for _prim, _fn in _UNARY_FUNCS.items():
    @_rule(_prim)
    def _render_unary(eq, ctx, _fn=_fn):
        imports = {ns_import(ctx)}
        (a,) = _ins(eq, ctx, imports)
        return [f"{bind_outputs(eq, ctx)} = {_fn}({a})"], imports


_BINARY_FUNCS = {
    "max": "maximum",
    "min": "minimum",
    "and": "logical_and",
    "or": "logical_or",
    "xor": "logical_xor",
}

for _prim, _fn in _BINARY_FUNCS.items():
    @_rule(_prim)
    def _render_binary_fn(eq, ctx, _fn=_fn):
        imports = {ns_import(ctx)}
        a, b = _ins(eq, ctx, imports)
        return [f"{bind_outputs(eq, ctx)} = {_fn}({a}, {b})"], imports


@_rule("neg")
def _render_neg(eq, ctx):
    imports: set[str] = set()
    (a,) = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = -{a}"], imports


@_rule("abs")
def _render_abs(eq, ctx):
    # builtin abs dispatches to __abs__, so no import is needed
    imports: set[str] = set()
    (a,) = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = abs({a})"], imports


@_rule("square")
def _render_square(eq, ctx):
    imports: set[str] = set()
    (a,) = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = {a} ** 2"], imports


@_rule("rsqrt")
def _render_rsqrt(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = 1 / sqrt({a})"], imports


@_rule("logistic")
def _render_logistic(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = 1 / (1 + exp(-{a}))"], imports


@_rule("integer_pow")
def _render_integer_pow(eq, ctx):
    imports: set[str] = set()
    (a,) = _ins(eq, ctx, imports)
    y = _as_int("integer_pow", eq.param("y"))
    return [f"{bind_outputs(eq, ctx)} = {a} ** {y}"], imports


@_rule("erf")
def _render_erf(eq, ctx):
    imports = {_erf_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = erf({a})"], imports


@_rule("select_n")
def _render_select_n(eq, ctx):
    imports = {ns_import(ctx)}
    operands = _ins(eq, ctx, imports)
    pred, cases = operands[0], operands[1:]
    if len(cases) < 2:
        raise UnsupportedOperator("select_n", "needs at least two cases")
    if len(cases) == 2:
        expr = f"where({pred}, {cases[1]}, {cases[0]})"
    else:
        expr = cases[-1]
        for index in range(len(cases) - 2, -1, -1):
            expr = f"where({pred} == {index}, {cases[index]}, {expr})"
    return [f"{bind_outputs(eq, ctx)} = {expr}"], imports


@_rule("convert_element_type")
def _render_convert(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    dtype = _dtype_name("convert_element_type", eq.param("new_dtype"), ctx)
    return [f"{bind_outputs(eq, ctx)} = asarray({a}).astype({dtype})"], imports


@_rule("stop_gradient")
def _render_stop_gradient(eq, ctx):
    imports: set[str] = set()
    (a,) = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = {a}"], imports


# -- tensor manipulation -----------------------------------------------------

@_rule("dot_general")
def _render_dot_general(eq, ctx):
    dn = eq.param("dimension_numbers")
    if not isinstance(dn, ParamTuple) or len(dn.items) != 2:
        raise UnsupportedOperator("dot_general", f"malformed dimension_numbers {dn!r}")
    contract, batch = dn.items
    lc, rc = (_as_int_tuple("dot_general", v) for v in contract.items)
    lb, rb = (_as_int_tuple("dot_general", v) for v in batch.items)
    imports = {ns_import(ctx)}
    a, b = _ins(eq, ctx, imports)
    targets = bind_outputs(eq, ctx)
    if lb or rb:
        imports = {_lax_import("dot_general", ctx)}
        dims = f"(({list(lc)}, {list(rc)}), ({list(lb)}, {list(rb)}))"
        return [f"{targets} = lax.dot_general({a}, {b}, dimension_numbers={dims})"], imports
    lhs_type = ctx.type_of(eq.inputs[0])
    if lhs_type is not None and lhs_type.rank == 2 and lc == (1,) and rc == (0,):
        return [f"{targets} = matmul({a}, {b})"], imports
    return [f"{targets} = tensordot({a}, {b}, axes=({list(lc)}, {list(rc)}))"], imports


@_rule("transpose")
def _render_transpose(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    perm = _as_int_tuple("transpose", eq.param("permutation"))
    return [f"{bind_outputs(eq, ctx)} = transpose({a}, {perm!r})"], imports


@_rule("reshape")
def _render_reshape(eq, ctx):
    if not _is_none(eq.param("dimensions", Symbol("None"))):
        raise UnsupportedOperator("reshape", "dimensions != None is not supported")
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    sizes = _as_int_tuple("reshape", eq.param("new_sizes"))
    return [f"{bind_outputs(eq, ctx)} = reshape({a}, {sizes!r})"], imports


@_rule("broadcast_in_dim")
def _render_broadcast_in_dim(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    shape = _as_int_tuple("broadcast_in_dim", eq.param("shape"))
    bdims = _as_int_tuple("broadcast_in_dim", eq.param("broadcast_dimensions"))
    targets = bind_outputs(eq, ctx)
    if not bdims:
        # scalar operand
        return [f"{targets} = full({shape!r}, {a})"], imports
    missing = tuple(sorted(set(range(len(shape))) - set(bdims)))
    if missing:
        expr = f"broadcast_to(expand_dims({a}, {missing!r}), {shape!r})"
    else:
        expr = f"broadcast_to({a}, {shape!r})"
    return [f"{targets} = {expr}"], imports


_REDUCERS = {
    "reduce_sum": "sum",
    "reduce_max": "amax",
    "reduce_min": "amin",
    "reduce_prod": "prod",
    "reduce_and": "all",
    "reduce_or": "any",
}

for _prim, _fn in _REDUCERS.items():
    @_rule(_prim)
    def _render_reduce(eq, ctx, _prim=_prim, _fn=_fn):
        imports = {ns_import(ctx)}
        (a,) = _ins(eq, ctx, imports)
        axes = _as_int_tuple(_prim, eq.param("axes"))
        return [f"{bind_outputs(eq, ctx)} = {_fn}({a}, axis={axes!r})"], imports


for _prim, _fn in {"argmax": "argmax", "argmin": "argmin"}.items():
    @_rule(_prim)
    def _render_arg_reduce(eq, ctx, _prim=_prim, _fn=_fn):
        imports = {ns_import(ctx)}
        (a,) = _ins(eq, ctx, imports)
        axes = _as_int_tuple(_prim, eq.param("axes"))
        if len(axes) != 1:
            raise UnsupportedOperator(_prim, "only a single reduction axis is supported")
        return [f"{bind_outputs(eq, ctx)} = {_fn}({a}, axis={axes[0]})"], imports


@_rule("sort")
def _render_sort(eq, ctx):
    if len(eq.inputs) != 1 or _as_int("sort", eq.param("num_keys", Literal(1, "1"))) != 1:
        raise UnsupportedOperator("sort", "only single-operand single-key sort is supported")
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    dim = _as_int("sort", eq.param("dimension"))
    return [f"{bind_outputs(eq, ctx)} = sort({a}, axis={dim})"], imports


@_rule("concatenate")
def _render_concatenate(eq, ctx):
    imports = {ns_import(ctx)}
    operands = _ins(eq, ctx, imports)
    dim = _as_int("concatenate", eq.param("dimension"))
    return [f"{bind_outputs(eq, ctx)} = concatenate(({', '.join(operands)}), axis={dim})"], imports


@_rule("slice")
def _render_slice(eq, ctx):
    imports: set[str] = set()
    (a,) = _ins(eq, ctx, imports)
    starts = _as_int_tuple("slice", eq.param("start_indices"))
    limits = _as_int_tuple("slice", eq.param("limit_indices"))
    strides_param = eq.param("strides")
    if _is_none(strides_param) or strides_param is None:
        strides = (1,) * len(starts)
    else:
        strides = _as_int_tuple("slice", strides_param)
    subs = []
    for s, l, st in zip(starts, limits, strides):
        subs.append(f"{s}:{l}" if st == 1 else f"{s}:{l}:{st}")
    return [f"{bind_outputs(eq, ctx)} = {a}[{', '.join(subs)}]"], imports


@_rule("dynamic_slice")
def _render_dynamic_slice(eq, ctx):
    imports: set[str] = set()
    operands = _ins(eq, ctx, imports)
    a, starts = operands[0], operands[1:]
    sizes = _as_int_tuple("dynamic_slice", eq.param("slice_sizes"))
    targets = bind_outputs(eq, ctx)
    if ctx.config.dialect == FRAMEWORK:
        imports.add(_lax_import("dynamic_slice", ctx))
        return [f"{targets} = lax.dynamic_slice({a}, ({', '.join(starts)},), {sizes!r})"], imports
    # plain indexing: correct for in-bounds starts (no clamping)
    subs = [f"{i}:{i} + {n}" for i, n in zip(starts, sizes)]
    return [f"{targets} = {a}[{', '.join(subs)}]"], imports


@_rule("dynamic_update_slice")
def _render_dynamic_update_slice(eq, ctx):
    imports: set[str] = set()
    operands = _ins(eq, ctx, imports)
    a, update, starts = operands[0], operands[1], operands[2:]
    targets = bind_outputs(eq, ctx)
    if ctx.config.dialect == FRAMEWORK:
        imports.add(_lax_import("dynamic_update_slice", ctx))
        return [f"{targets} = lax.dynamic_update_slice({a}, {update}, ({', '.join(starts)},))"], imports
    imports.add(ns_import(ctx))
    subs = [f"{i}:{i} + {update}.shape[{d}]" for d, i in enumerate(starts)]
    return [
        f"{targets} = array({a})",
        f"{targets}[{', '.join(subs)}] = {update}",
    ], imports


@_rule("squeeze")
def _render_squeeze(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    dims = _as_int_tuple("squeeze", eq.param("dimensions"))
    return [f"{bind_outputs(eq, ctx)} = squeeze({a}, axis={dims!r})"], imports


@_rule("expand_dims")
def _render_expand_dims(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    dims = _as_int_tuple("expand_dims", eq.param("dimensions"))
    return [f"{bind_outputs(eq, ctx)} = expand_dims({a}, {dims!r})"], imports


@_rule("rev")
def _render_rev(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    dims = _as_int_tuple("rev", eq.param("dimensions"))
    return [f"{bind_outputs(eq, ctx)} = flip({a}, {dims!r})"], imports


@_rule("pad")
def _render_pad(eq, ctx):
    imports: set[str] = set()
    a, value = _ins(eq, ctx, imports)
    config = eq.param("padding_config")
    if not isinstance(config, (ParamTuple, ParamList)):
        raise UnsupportedOperator("pad", f"malformed padding_config {config!r}")
    triples = [_as_int_tuple("pad", item) for item in config.items]
    targets = bind_outputs(eq, ctx)
    simple = all(lo >= 0 and hi >= 0 and interior == 0 for lo, hi, interior in triples)
    if simple:
        imports.add(ns_import(ctx))
        widths = tuple((lo, hi) for lo, hi, _ in triples)
        return [f"{targets} = pad({a}, {widths!r}, constant_values={value})"], imports
    imports.add(_lax_import("pad", ctx))
    cfg = tuple((lo, hi, interior) for lo, hi, interior in triples)
    return [f"{targets} = lax.pad({a}, {value}, {cfg!r})"], imports


@_rule("iota")
def _render_iota(eq, ctx):
    imports = {ns_import(ctx)}
    shape = _as_int_tuple("iota", eq.param("shape"))
    dim = _as_int("iota", eq.param("dimension"))
    dtype = _dtype_name("iota", eq.param("dtype"), ctx)
    targets = bind_outputs(eq, ctx)
    base = f"arange({shape[dim]}, dtype={dtype})"
    if len(shape) == 1:
        return [f"{targets} = {base}"], imports
    missing = tuple(i for i in range(len(shape)) if i != dim)
    return [f"{targets} = broadcast_to(expand_dims({base}, {missing!r}), {shape!r})"], imports


@_rule("cumsum")
def _render_cumsum(eq, ctx):
    imports = {ns_import(ctx)}
    (a,) = _ins(eq, ctx, imports)
    axis = _as_int("cumsum", eq.param("axis"))
    reverse = eq.param("reverse")
    targets = bind_outputs(eq, ctx)
    if isinstance(reverse, Literal) and reverse.value is True:
        return [f"{targets} = flip(cumsum(flip({a}, {axis}), axis={axis}), {axis})"], imports
    return [f"{targets} = cumsum({a}, axis={axis})"], imports


@_rule("gather")
def _render_gather(eq, ctx):
    # Supported subset: single leading-axis take, i.e. x[indices] with the
    # index-vector dimension last and size 1 (what basic integer indexing
    # lowers to).  Anything else is rejected rather than guessed at.
    dn = eq.param("dimension_numbers")
    if not isinstance(dn, ParamCall):
        raise UnsupportedOperator("gather", f"malformed dimension_numbers {dn!r}")
    fields = dict(dn.kwargs)
    collapsed = _as_int_tuple("gather", fields.get("collapsed_slice_dims", ParamTuple()))
    start_map = _as_int_tuple("gather", fields.get("start_index_map", ParamTuple()))
    for key in ("operand_batching_dims", "start_indices_batching_dims"):
        if key in fields and _as_int_tuple("gather", fields[key]):
            raise UnsupportedOperator("gather", "batching dimensions are not supported")
    sizes = _as_int_tuple("gather", eq.param("slice_sizes"))
    if start_map != (0,) or collapsed != (0,) or not sizes or sizes[0] != 1:
        raise UnsupportedOperator("gather", "only leading-axis take-style gathers are supported")
    imports = {ns_import(ctx)}
    a, idx = _ins(eq, ctx, imports)
    return [f"{bind_outputs(eq, ctx)} = take({a}, squeeze({idx}, axis=-1), axis=0)"], imports


# -- higher-order primitives -------------------------------------------------

def _program_param(prim: str, eq: Equation, *keys: str) -> Program:
    for key in keys:
        value = eq.param(key)
        if isinstance(value, Program):
            return value
    raise UnsupportedOperator(prim, f"missing nested program parameter ({'/'.join(keys)})")


@_rule("cond")
def _render_cond(eq, ctx):
    branches = eq.param("branches")
    if not isinstance(branches, ParamTuple) or not all(
        isinstance(b, Program) for b in branches.items
    ):
        raise UnsupportedOperator("cond", f"malformed branches {branches!r}")
    imports: set[str] = set()
    operands = _ins(eq, ctx, imports)
    pred, args = operands[0], operands[1:]
    names = [lift_program(b, ctx) for b in branches.items]
    targets = bind_outputs(eq, ctx)
    return [f"{targets} = ({', '.join(names)})[{pred}]({', '.join(args)})"], imports


@_rule("while")
def _render_while(eq, ctx):
    cond_prog = _program_param("while", eq, "cond_jaxpr")
    body_prog = _program_param("while", eq, "body_jaxpr")
    cn = _as_int("while", eq.param("cond_nconsts", Literal(0, "0")))
    bn = _as_int("while", eq.param("body_nconsts", Literal(0, "0")))
    imports: set[str] = set()
    operands = _ins(eq, ctx, imports)
    cond_consts = operands[:cn]
    body_consts = operands[cn : cn + bn]
    carry = operands[cn + bn :]
    fn_cond = lift_program(cond_prog, ctx)
    fn_body = lift_program(body_prog, ctx)
    targets = bind_outputs(eq, ctx)
    cond_args = ", ".join(cond_consts + targets.split(", "))
    body_args = ", ".join(body_consts + targets.split(", "))
    indent = ctx.config.indent
    return [
        f"{targets} = {', '.join(carry)}",
        f"while {fn_cond}({cond_args}):\n{indent}{targets} = {fn_body}({body_args})",
    ], imports


@_rule("scan")
def _render_scan(eq, ctx):
    body = _program_param("scan", eq, "jaxpr")
    length = _as_int("scan", eq.param("length"))
    num_carry = _as_int("scan", eq.param("num_carry", Literal(0, "0")))
    num_consts = _as_int("scan", eq.param("num_consts", Literal(0, "0")))
    reverse_param = eq.param("reverse")
    reverse = isinstance(reverse_param, Literal) and reverse_param.value is True
    imports = {ns_import(ctx)}
    operands = _ins(eq, ctx, imports)
    consts = operands[:num_consts]
    init = operands[num_consts : num_consts + num_carry]
    xs = operands[num_consts + num_carry :]
    fn = lift_program(body, ctx)
    targets = bind_outputs(eq, ctx).split(", ")
    carry_names = targets[:num_carry]
    ys_names = targets[num_carry:]
    loop_var = ctx.env.fresh("_i")
    step_ys = [ctx.env.fresh(f"_y{k}") for k in range(len(ys_names))]
    acc_lists = [ctx.env.fresh(f"_ys{k}") for k in range(len(ys_names))]
    statements: list[str] = []
    if carry_names:
        statements.append(f"{', '.join(carry_names)} = {', '.join(init)}")
    for acc in acc_lists:
        statements.append(f"{acc} = []")
    rng = f"reversed(range({length}))" if reverse else f"range({length})"
    call_args = consts + carry_names + [f"{x}[{loop_var}]" for x in xs]
    step_targets = carry_names + step_ys
    indent = ctx.config.indent
    loop = [f"for {loop_var} in {rng}:"]
    loop.append(f"{indent}{', '.join(step_targets)} = {fn}({', '.join(call_args)})")
    for acc, y in zip(acc_lists, step_ys):
        loop.append(f"{indent}{acc}.append({y})")
    statements.append("\n".join(loop))
    for name, acc in zip(ys_names, acc_lists):
        src = f"{acc}[::-1]" if reverse else acc
        statements.append(f"{name} = stack({src})")
    return statements, imports


def _render_inline_call(prim: str, *param_keys: str):
    def render(eq, ctx):
        nested = _program_param(prim, eq, *param_keys)
        imports: set[str] = set()
        operands = _ins(eq, ctx, imports)
        fn = lift_program(nested, ctx)
        targets = bind_outputs(eq, ctx)
        return [f"{targets} = {fn}({', '.join(operands)})"], imports

    return render


_BUILTIN["pjit"] = _render_inline_call("pjit", "jaxpr", "call_jaxpr")
_BUILTIN["closed_call"] = _render_inline_call("closed_call", "call_jaxpr", "jaxpr")
_BUILTIN["custom_jvp_call"] = _render_inline_call("custom_jvp_call", "call_jaxpr")
_BUILTIN["custom_vjp_call"] = _render_inline_call("custom_vjp_call", "call_jaxpr")
_BUILTIN["remat"] = _render_inline_call("remat", "jaxpr", "call_jaxpr")


@_rule("xla_pmap")
def _render_pmap(eq, ctx):
    # serial-equivalent fallback: a stacked map over the leading axis
    nested = _program_param("xla_pmap", eq, "call_jaxpr")
    in_axes = eq.param("in_axes")
    if isinstance(in_axes, (ParamTuple, ParamList)):
        axes = list(in_axes.items)
    else:
        axes = [Literal(0, "0")] * len(eq.inputs)
    if len(eq.outputs) != 1:
        raise UnsupportedOperator("xla_pmap", "only single-output parallel maps are supported")
    imports = {ns_import(ctx)}
    operands = _ins(eq, ctx, imports)
    fn = lift_program(nested, ctx)
    loop_var = ctx.env.fresh("_i")
    mapped = None
    call_args = []
    for operand, axis in zip(operands, axes):
        if _is_none(axis):
            call_args.append(operand)
        elif isinstance(axis, Literal) and axis.value == 0:
            call_args.append(f"{operand}[{loop_var}]")
            mapped = mapped or operand
        else:
            raise UnsupportedOperator("xla_pmap", "only in_axes of 0 or None are supported")
    if mapped is None:
        raise UnsupportedOperator("xla_pmap", "no mapped operand")
    targets = bind_outputs(eq, ctx)
    expr = (
        f"stack([{fn}({', '.join(call_args)}) for {loop_var} in range({mapped}.shape[0])])"
    )
    return [f"{targets} = {expr}  # originally a parallel map; decompiled to a serial map"], imports
