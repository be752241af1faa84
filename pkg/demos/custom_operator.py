"""Extend the operator registry with a custom translation rule.

Registration is last-write-wins, so a rule can also replace a builtin:
here we reroute `erf` to a hand-written rational approximation instead
of the default special-functions import.
"""

from jaxdec import OperatorRule, decompile, default_registry
from jaxdec.translator import bind_outputs

DUMP = "{ lambda ; a:f32[4]. let b:f32[4] = erf a in (b,) }"

HELPER = "from erf_approx import erf_rational"


def render_erf(equation, ctx):
    target = bind_outputs(equation, ctx)
    operand = ctx.env.lookup(equation.inputs[0].name)
    return [f"{target} = erf_rational({operand})"], {HELPER}


def main():
    registry = default_registry()
    print("default rendering:")
    print(decompile(DUMP, registry=registry)[0])

    registry.register(OperatorRule("erf", render_erf))
    print("after overriding erf:")
    print(decompile(DUMP, registry=registry)[0])


if __name__ == "__main__":
    main()
