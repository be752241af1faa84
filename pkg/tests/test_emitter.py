import numpy as np
import pytest

from jaxdec import EmitConfig, decompile, emit_module, parse
from jaxdec.errors import ParseError

from conftest import GOLDEN_INPUT, GOLDEN_OUTPUT


def run_emitted(text, fn_name="f"):
    namespace = {}
    exec(compile(text, "<emitted>", "exec"), namespace)
    return namespace[fn_name]


def test_golden_listing_byte_for_byte():
    text, report = decompile(GOLDEN_INPUT, EmitConfig(function_name="gf2"))
    assert text == GOLDEN_OUTPUT
    assert report == []


def test_identity_program():
    text, _ = decompile("{ lambda ; a:f32[]. let in (a,) }")
    assert text == "def f(a):\n    return a\n"
    assert run_emitted(text)(3.0) == 3.0


def test_empty_program():
    text, _ = decompile("{ lambda ; . let in ( ) }")
    assert text == "def f():\n    return\n"


def test_multiple_outputs():
    text, _ = decompile("{ lambda ; a:f32[] b:f32[]. let in (a, b) }")
    assert "return a, b" in text
    assert run_emitted(text)(1.0, 2.0) == (1.0, 2.0)


def test_constvars_become_trailing_parameters(fixture_dumps):
    text, _ = decompile(fixture_dumps["constvar"], EmitConfig(dialect="plain-numpy"))
    assert "def f(b, a):" in text
    f = run_emitted(text)
    got = f(np.ones(3, dtype=np.float32), np.arange(3, dtype=np.float32))
    assert got == pytest.approx(3.0)


def test_scan_cumulative_sum_executes(fixture_dumps):
    text, _ = decompile(fixture_dumps["scan_cumsum"], EmitConfig(dialect="plain-numpy"))
    assert "def fn_0(" in text
    assert "for " in text
    f = run_emitted(text)
    xs = np.array([1.0, 2.0, 3.0], dtype=np.float32)
    # independent oracle: running sum
    expected = []
    acc = 0.0
    for x in xs:
        acc += x
        expected.append(acc)
    np.testing.assert_allclose(np.asarray(f(xs)), expected, rtol=1e-6)


def test_cond_lifts_helpers_in_branch_order(fixture_dumps):
    text, _ = decompile(fixture_dumps["cond"], EmitConfig(dialect="plain-numpy"))
    assert text.index("def fn_0(") < text.index("def fn_1(") < text.index("def f(")
    f = run_emitted(text)
    assert f(np.float32(3.0)) == pytest.approx(6.0)
    assert f(np.float32(-1.5)) == pytest.approx(1.5)


def test_nested_helper_defined_before_outer_reference(fixture_dumps):
    text, _ = decompile(fixture_dumps["cond_scan_nested"], EmitConfig(dialect="plain-numpy"))
    f = run_emitted(text)
    xs = np.array([1.0, 2.0, 3.0], dtype=np.float32)
    assert f(np.float32(1.0), xs) == pytest.approx(1.0 + 1.0 + 2.0 + 3.0)
    assert f(np.float32(-1.0), xs) == pytest.approx(-1.0)


def test_determinism():
    config = EmitConfig(function_name="gf2")
    assert decompile(GOLDEN_INPUT, config) == decompile(GOLDEN_INPUT, config)


def test_output_has_no_trailing_whitespace():
    text, _ = decompile(GOLDEN_INPUT)
    assert text.endswith("\n")
    assert not text.endswith("\n\n")
    for line in text.split("\n"):
        assert line == line.rstrip()


def test_custom_indent():
    text, _ = decompile(GOLDEN_INPUT, EmitConfig(indent="  "))
    assert "\n  b = exp(a)\n" in text


def test_lenient_placeholder_and_report():
    dump = "{ lambda ; x:f32[]. let z:f32[] = frobnicate x in (z,) }"
    text, report = decompile(dump, EmitConfig(strict=False))
    assert "# unsupported operator: frobnicate" in text
    assert report == ["frobnicate"]


def test_truncated_input_is_parse_error():
    with pytest.raises(ParseError):
        decompile("{ lambda ; a:f32[]. let")


def test_emit_module_accepts_parsed_program():
    program = parse(GOLDEN_INPUT)
    assert emit_module(program, EmitConfig(function_name="gf2")) == GOLDEN_OUTPUT


@pytest.mark.parametrize("name", ["for", "fn_0", "not an ident"])
def test_config_rejects_bad_function_names(name):
    with pytest.raises(ValueError):
        EmitConfig(function_name=name)


def test_config_rejects_unknown_dialect():
    with pytest.raises(ValueError):
        EmitConfig(dialect="fortran")


def test_plain_dialect_swaps_wildcard_import():
    text, _ = decompile(GOLDEN_INPUT, EmitConfig(dialect="plain-numpy"))
    assert text.startswith("from numpy import *")
    f = run_emitted(text)
    assert f(1.0) == pytest.approx(1.0 / (1.0 + np.exp(-1.0)))
