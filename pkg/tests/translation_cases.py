"""One minimal dump per registered primitive, with expected output snippets.

Shared between the translator unit tests and the acceptance check that every
registered primitive has at least one translation test.
"""

_BIN = "{{ lambda ; a:f32[] b:f32[]. let c:f32[] = {prim} a b in (c,) }}"
_UN = "{{ lambda ; a:f32[]. let b:f32[] = {prim} a in (b,) }}"

_INFIX = {
    "add": "c = a + b",
    "add_any": "c = a + b",
    "sub": "c = a - b",
    "mul": "c = a * b",
    "div": "c = a / b",
    "rem": "c = a % b",
    "pow": "c = a ** b",
    "eq": "c = a == b",
    "ne": "c = a != b",
    "lt": "c = a < b",
    "le": "c = a <= b",
    "gt": "c = a > b",
    "ge": "c = a >= b",
}

_UNARY_CALLS = {
    "exp": "b = exp(a)",
    "log": "b = log(a)",
    "sin": "b = sin(a)",
    "cos": "b = cos(a)",
    "tan": "b = tan(a)",
    "tanh": "b = tanh(a)",
    "sqrt": "b = sqrt(a)",
    "sign": "b = sign(a)",
    "floor": "b = floor(a)",
    "ceil": "b = ceil(a)",
    "round": "b = round(a)",
    "not": "b = logical_not(a)",
}

_BINARY_CALLS = {
    "max": "c = maximum(a, b)",
    "min": "c = minimum(a, b)",
    "and": "c = logical_and(a, b)",
    "or": "c = logical_or(a, b)",
    "xor": "c = logical_xor(a, b)",
}

# case id -> (primitive, dump text, expected substrings of the emitted module)
CASES: dict[str, tuple[str, str, list[str]]] = {}

for prim, expected in _INFIX.items():
    CASES[prim] = (prim, _BIN.format(prim=prim), [expected])
for prim, expected in _UNARY_CALLS.items():
    CASES[prim] = (prim, _UN.format(prim=prim), [expected])
for prim, expected in _BINARY_CALLS.items():
    CASES[prim] = (prim, _BIN.format(prim=prim), [expected])

CASES.update(
    {
        "neg": ("neg", _UN.format(prim="neg"), ["b = -a"]),
        "abs": ("abs", _UN.format(prim="abs"), ["b = abs(a)"]),
        "square": ("square", _UN.format(prim="square"), ["b = a ** 2"]),
        "rsqrt": ("rsqrt", _UN.format(prim="rsqrt"), ["b = 1 / sqrt(a)"]),
        "logistic": ("logistic", _UN.format(prim="logistic"), ["b = 1 / (1 + exp(-a))"]),
        "erf": ("erf", _UN.format(prim="erf"), ["from jax.scipy.special import erf", "b = erf(a)"]),
        "integer_pow": (
            "integer_pow",
            "{ lambda ; a:f32[]. let b:f32[] = integer_pow[y=3] a in (b,) }",
            ["b = a ** 3"],
        ),
        "select_n": (
            "select_n",
            "{ lambda ; p:bool[] a:f32[] b:f32[]. let c:f32[] = select_n p a b in (c,) }",
            ["c = where(p, b, a)"],
        ),
        "select_n_3way": (
            "select_n",
            "{ lambda ; p:i32[] a:f32[] b:f32[] c:f32[]. let d:f32[] = select_n p a b c in (d,) }",
            ["d = where(p == 0, a, where(p == 1, b, c))"],
        ),
        "convert_element_type": (
            "convert_element_type",
            "{ lambda ; a:f32[]. let b:i32[] = convert_element_type[new_dtype=int32 weak_type=False] a in (b,) }",
            ["b = asarray(a).astype(int32)"],
        ),
        "stop_gradient": (
            "stop_gradient",
            _UN.format(prim="stop_gradient"),
            ["b = a"],
        ),
        "dot_general_matmul": (
            "dot_general",
            "{ lambda ; a:f32[3,4] b:f32[4,2]. let "
            "c:f32[3,2] = dot_general[dimension_numbers=(([1], [0]), ([], [])) preferred_element_type=float32] a b "
            "in (c,) }",
            ["c = matmul(a, b)"],
        ),
        "dot_general_contract": (
            "dot_general",
            "{ lambda ; a:f32[2,3,4] b:f32[4,5]. let "
            "c:f32[2,3,5] = dot_general[dimension_numbers=(([2], [0]), ([], []))] a b "
            "in (c,) }",
            ["c = tensordot(a, b, axes=([2], [0]))"],
        ),
        "dot_general_batched": (
            "dot_general",
            "{ lambda ; a:f32[2,3,4] b:f32[2,4,5]. let "
            "c:f32[2,3,5] = dot_general[dimension_numbers=(([2], [1]), ([0], [0]))] a b "
            "in (c,) }",
            ["from jax import lax", "c = lax.dot_general(a, b, dimension_numbers=(([2], [1]), ([0], [0])))"],
        ),
        "transpose": (
            "transpose",
            "{ lambda ; a:f32[3,2]. let b:f32[2,3] = transpose[permutation=(1, 0)] a in (b,) }",
            ["b = transpose(a, (1, 0))"],
        ),
        "reshape": (
            "reshape",
            "{ lambda ; a:f32[6]. let b:f32[2,3] = reshape[new_sizes=(2, 3) dimensions=None] a in (b,) }",
            ["b = reshape(a, (2, 3))"],
        ),
        "broadcast_in_dim": (
            "broadcast_in_dim",
            "{ lambda ; a:f32[3]. let b:f32[2,3] = broadcast_in_dim[broadcast_dimensions=(1,) shape=(2, 3)] a in (b,) }",
            ["b = broadcast_to(expand_dims(a, (0,)), (2, 3))"],
        ),
        "broadcast_scalar": (
            "broadcast_in_dim",
            "{ lambda ; . let b:f32[2,3] = broadcast_in_dim[broadcast_dimensions=() shape=(2, 3)] 1.5 in (b,) }",
            ["b = full((2, 3), 1.5)"],
        ),
        "reduce_sum": (
            "reduce_sum",
            "{ lambda ; a:f32[2,3]. let b:f32[] = reduce_sum[axes=(0, 1)] a in (b,) }",
            ["b = sum(a, axis=(0, 1))"],
        ),
        "reduce_sum_np_axis": (
            "reduce_sum",
            "{ lambda ; a:f32[2,3]. let b:f32[3] = reduce_sum[axes=(np.int64(0),)] a in (b,) }",
            ["b = sum(a, axis=(0,))"],
        ),
        "reduce_max": (
            "reduce_max",
            "{ lambda ; a:f32[2,3]. let b:f32[3] = reduce_max[axes=(0,)] a in (b,) }",
            ["b = amax(a, axis=(0,))"],
        ),
        "reduce_min": (
            "reduce_min",
            "{ lambda ; a:f32[2,3]. let b:f32[3] = reduce_min[axes=(0,)] a in (b,) }",
            ["b = amin(a, axis=(0,))"],
        ),
        "reduce_prod": (
            "reduce_prod",
            "{ lambda ; a:f32[2,3]. let b:f32[] = reduce_prod[axes=(0, 1)] a in (b,) }",
            ["b = prod(a, axis=(0, 1))"],
        ),
        "reduce_and": (
            "reduce_and",
            "{ lambda ; a:bool[4]. let b:bool[] = reduce_and[axes=(0,)] a in (b,) }",
            ["b = all(a, axis=(0,))"],
        ),
        "reduce_or": (
            "reduce_or",
            "{ lambda ; a:bool[4]. let b:bool[] = reduce_or[axes=(0,)] a in (b,) }",
            ["b = any(a, axis=(0,))"],
        ),
        "argmax": (
            "argmax",
            "{ lambda ; a:f32[4]. let b:i32[] = argmax[axes=(0,) index_dtype=int32] a in (b,) }",
            ["b = argmax(a, axis=0)"],
        ),
        "argmin": (
            "argmin",
            "{ lambda ; a:f32[4]. let b:i32[] = argmin[axes=(0,) index_dtype=int32] a in (b,) }",
            ["b = argmin(a, axis=0)"],
        ),
        "sort": (
            "sort",
            "{ lambda ; a:f32[4]. let b:f32[4] = sort[dimension=0 is_stable=True num_keys=1] a in (b,) }",
            ["b = sort(a, axis=0)"],
        ),
        "concatenate": (
            "concatenate",
            "{ lambda ; a:f32[2] b:f32[3]. let c:f32[5] = concatenate[dimension=0] a b in (c,) }",
            ["c = concatenate((a, b), axis=0)"],
        ),
        "slice": (
            "slice",
            "{ lambda ; a:f32[8]. let b:f32[3] = slice[limit_indices=(3,) start_indices=(0,) strides=None] a in (b,) }",
            ["b = a[0:3]"],
        ),
        "slice_strided": (
            "slice",
            "{ lambda ; a:f32[8]. let b:f32[3] = slice[limit_indices=(6,) start_indices=(0,) strides=(2,)] a in (b,) }",
            ["b = a[0:6:2]"],
        ),
        "dynamic_slice": (
            "dynamic_slice",
            "{ lambda ; a:f32[6] i:i32[]. let b:f32[2] = dynamic_slice[slice_sizes=(2,)] a i in (b,) }",
            ["b = lax.dynamic_slice(a, (i,), (2,))"],
        ),
        "dynamic_update_slice": (
            "dynamic_update_slice",
            "{ lambda ; a:f32[6] u:f32[2] i:i32[]. let b:f32[6] = dynamic_update_slice a u i in (b,) }",
            ["b = lax.dynamic_update_slice(a, u, (i,))"],
        ),
        "squeeze": (
            "squeeze",
            "{ lambda ; a:f32[1,3]. let b:f32[3] = squeeze[dimensions=(0,)] a in (b,) }",
            ["b = squeeze(a, axis=(0,))"],
        ),
        "expand_dims": (
            "expand_dims",
            "{ lambda ; a:f32[3]. let b:f32[1,3] = expand_dims[dimensions=(0,)] a in (b,) }",
            ["b = expand_dims(a, (0,))"],
        ),
        "rev": (
            "rev",
            "{ lambda ; a:f32[3]. let b:f32[3] = rev[dimensions=(0,)] a in (b,) }",
            ["b = flip(a, (0,))"],
        ),
        "pad": (
            "pad",
            "{ lambda ; a:f32[3]. let b:f32[6] = pad[padding_config=((1, 2, 0),)] a 0.5 in (b,) }",
            ["b = pad(a, ((1, 2),), constant_values=0.5)"],
        ),
        "pad_negative": (
            "pad",
            "{ lambda ; a:f32[5]. let b:f32[3] = pad[padding_config=((-1, -1, 0),)] a 0.0 in (b,) }",
            ["b = lax.pad(a, 0.0, ((-1, -1, 0),))"],
        ),
        "iota": (
            "iota",
            "{ lambda ; . let a:f32[5] = iota[dimension=0 dtype=float32 shape=(5,) sharding=None] in (a,) }",
            ["a = arange(5, dtype=float32)"],
        ),
        "iota_2d": (
            "iota",
            "{ lambda ; . let a:i32[2,3] = iota[dimension=1 dtype=int32 shape=(2, 3) sharding=None] in (a,) }",
            ["a = broadcast_to(expand_dims(arange(3, dtype=int32), (0,)), (2, 3))"],
        ),
        "cumsum": (
            "cumsum",
            "{ lambda ; a:f32[4]. let b:f32[4] = cumsum[axis=0 reverse=False] a in (b,) }",
            ["b = cumsum(a, axis=0)"],
        ),
        "cumsum_reverse": (
            "cumsum",
            "{ lambda ; a:f32[4]. let b:f32[4] = cumsum[axis=0 reverse=True] a in (b,) }",
            ["b = flip(cumsum(flip(a, 0), axis=0), 0)"],
        ),
        "gather": (
            "gather",
            "{ lambda ; a:f32[3,2] b:i32[2,1]. let "
            "c:f32[2,2] = gather[dimension_numbers=GatherDimensionNumbers(offset_dims=(1,), "
            "collapsed_slice_dims=(0,), start_index_map=(0,), operand_batching_dims=(), "
            "start_indices_batching_dims=()) slice_sizes=(1, 2) "
            "mode=GatherScatterMode.PROMISE_IN_BOUNDS fill_value=None "
            "indices_are_sorted=False unique_indices=False] a b in (c,) }",
            ["c = take(a, squeeze(b, axis=-1), axis=0)"],
        ),
        "cond": (
            "cond",
            "{ lambda ; p:i32[] a:f32[]. let b:f32[] = cond[branches=( "
            "{ lambda ; x:f32[]. let y:f32[] = neg x in (y,) } "
            "{ lambda ; x:f32[]. let y:f32[] = exp x in (y,) } )] p a in (b,) }",
            ["def fn_0(x):", "def fn_1(x):", "b = (fn_0, fn_1)[p](a)"],
        ),
        "while": (
            "while",
            "{ lambda ; a:f32[]. let b:f32[] = while["
            "body_jaxpr={ lambda ; x:f32[]. let y:f32[] = mul x 2.0 in (y,) } body_nconsts=0 "
            "cond_jaxpr={ lambda ; x:f32[]. let y:bool[] = lt x 10.0 in (y,) } cond_nconsts=0] a in (b,) }",
            ["b = a", "while fn_0(b):", "b = fn_1(b)"],
        ),
        "scan": (
            "scan",
            "{ lambda ; a:f32[3]. let _:f32[] b:f32[3] = scan[_split_transpose=False "
            "jaxpr={ lambda ; c:f32[] d:f32[]. let e:f32[] = add c d in (e, e) } "
            "length=3 linear=(False, False) num_carry=1 num_consts=0 reverse=False unroll=1] "
            "0.0 a in (b,) }",
            ["for _i in range(3):", "fn_0(_, a[_i])", "b = stack(_ys0)"],
        ),
        "pjit": (
            "pjit",
            "{ lambda ; a:f32[]. let b:f32[] = pjit[name=inner "
            "jaxpr={ lambda ; x:f32[]. let y:f32[] = exp x in (y,) }] a in (b,) }",
            ["b = fn_0(a)"],
        ),
        "closed_call": (
            "closed_call",
            "{ lambda ; a:f32[]. let b:f32[] = closed_call["
            "call_jaxpr={ lambda ; x:f32[]. let y:f32[] = exp x in (y,) }] a in (b,) }",
            ["b = fn_0(a)"],
        ),
        "custom_jvp_call": (
            "custom_jvp_call",
            "{ lambda ; a:f32[]. let b:f32[] = custom_jvp_call["
            "call_jaxpr={ lambda ; x:f32[]. let y:f32[] = tanh x in (y,) } "
            "jvp_jaxpr_fun=<function jvp> num_consts=0 symbolic_zeros=False] a in (b,) }",
            ["b = fn_0(a)"],
        ),
        "custom_vjp_call": (
            "custom_vjp_call",
            "{ lambda ; a:f32[]. let b:f32[] = custom_vjp_call["
            "call_jaxpr={ lambda ; x:f32[]. let y:f32[] = tanh x in (y,) } num_consts=0] a in (b,) }",
            ["b = fn_0(a)"],
        ),
        "remat": (
            "remat",
            "{ lambda ; a:f32[]. let b:f32[] = remat["
            "jaxpr={ lambda ; x:f32[]. let y:f32[] = exp x in (y,) }] a in (b,) }",
            ["b = fn_0(a)"],
        ),
        "xla_pmap": (
            "xla_pmap",
            "{ lambda ; a:f32[1,4]. let b:f32[1,4] = xla_pmap[axis_name=<axis> axis_size=1 "
            "backend=None call_jaxpr={ lambda ; c:f32[4]. let d:f32[4] = mul c 2.0 in (d,) } "
            "devices=None donated_invars=(False,) global_axis_size=1 in_axes=(0,) "
            "is_explicit_global_axis_size=False name=<lambda> out_axes=(0,)] a in (b,) }",
            ["b = stack([fn_0(a[_i]) for _i in range(a.shape[0])])"],
        ),
    }
)


def covered_primitives() -> set[str]:
    return {primitive for primitive, _, _ in CASES.values()}
