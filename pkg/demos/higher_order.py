"""Decompile programs with nested sub-programs.

Conditionals and scans carry whole programs as parameters. The translator
lifts each one into a numbered `fn_` helper defined above the main
function, then renders the control flow with ordinary Python.
"""

import numpy as np

from jaxdec import EmitConfig, decompile

COND_DUMP = """\
{ lambda ; a:f32[]. let
    b:bool[] = gt a 0.0:f32[]
    c:i32[] = convert_element_type[new_dtype=int32 weak_type=False] b
    d:f32[] = cond[
      branches=(
        { lambda ; e:f32[]. let f:f32[] = neg e in (f,) }
        { lambda ; g:f32[]. let h:f32[] = mul g 2.0:f32[] in (h,) }
      )
    ] c a
  in (d,) }
"""

SCAN_DUMP = """\
{ lambda ; a:f32[3]. let
    _:f32[] b:f32[3] = scan[
      _split_transpose=False
      jaxpr={ lambda ; c:f32[] d:f32[]. let e:f32[] = add c d in (e, e) }
      length=3
      linear=(False, False)
      num_carry=1
      num_consts=0
      reverse=False
      unroll=1
    ] 0.0:f32[] a
  in (b,) }
"""


def show(title, dump):
    source, _ = decompile(dump, EmitConfig(dialect="plain-numpy"))
    print(f"--- {title} ---")
    print(source)
    namespace = {}
    exec(source, namespace)
    return namespace["f"]


def main():
    branchy = show("conditional", COND_DUMP)
    print("f(3.0)  =", branchy(np.float32(3.0)))
    print("f(-1.5) =", branchy(np.float32(-1.5)))
    print()

    cumsum = show("scan as a loop", SCAN_DUMP)
    xs = np.array([1.0, 2.0, 3.0], dtype=np.float32)
    print("f([1, 2, 3]) =", cumsum(xs))


if __name__ == "__main__":
    main()
