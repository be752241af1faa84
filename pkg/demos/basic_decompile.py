"""Decompile a Jaxpr dump into plain Python and run the result.

The input below is the gradient of softplus, log(1 + exp(x)), as printed
by the tracing framework. The decompiler turns it back into source code
you can read, edit, and execute.
"""

from jaxdec import EmitConfig, decompile

DUMP = """\
{ lambda ; a:f32[]. let
b:f32[] = exp a
c:f32[] = add 1.0 b
_:f32[] = log c
d:f32[] = div 1.0 c
e:f32[] = mul d b
in (e,) }
"""


def main():
    source, _ = decompile(DUMP, EmitConfig(function_name="softplus_grad",
                                           dialect="plain-numpy"))
    print("decompiled source:")
    print(source)

    namespace = {}
    exec(source, namespace)
    grad = namespace["softplus_grad"]
    for x in (0.0, 1.0, -2.0):
        print(f"softplus_grad({x}) = {grad(x)}")


if __name__ == "__main__":
    main()
