import pytest

from jaxdec.ir import (
    Atom,
    Binder,
    DType,
    Equation,
    Literal,
    Program,
    ShapedType,
    Var,
    pretty_print,
    validate,
)
from jaxdec.parser import parse

F32 = ShapedType(DType("f32"))


def test_unknown_dtype_rejected():
    with pytest.raises(ValueError):
        DType("f33")


def test_negative_dims_rejected():
    with pytest.raises(ValueError):
        ShapedType(DType("f32"), (2, -1))


def test_rank():
    assert ShapedType(DType("f32"), ()).rank == 0
    assert ShapedType(DType("i32"), (2, 3)).rank == 2


def test_validate_gf_program(fixture_dumps):
    program = parse(fixture_dumps["golden_gf"])
    assert len(program.equations) == 5
    assert program.outputs == (Var("e"),)
    assert validate(program) == []


def test_validate_identity():
    program = Program((), (Binder("a", F32),), (), (Var("a"),))
    assert validate(program) == []


def test_validate_undefined_variable():
    eq = Equation((Binder("b", F32),), "exp", (), (Var("z"),))
    program = Program((), (Binder("a", F32),), (eq,), (Var("b"),))
    violations = validate(program)
    assert len(violations) == 1
    assert violations[0].equation == 0
    assert violations[0].message == "undefined variable z at equation 0"


def test_validate_duplicate_binder():
    eq = Equation((Binder("a", F32),), "exp", (), (Var("a"),))
    program = Program((), (Binder("a", F32),), (eq,), (Var("a"),))
    assert any("duplicate binder a" in v.message for v in validate(program))


def test_validate_is_pure():
    eq = Equation((Binder("b", F32),), "exp", (), (Var("z"),))
    program = Program((), (), (eq,), (Var("b"),))
    assert validate(program) == validate(program)


def test_bound_names_cover_references(fixture_dumps):
    # collecting bound names yields no duplicates and a superset of all uses
    for text in fixture_dumps.values():
        program = parse(text)
        bound = []
        for b in (*program.constvars, *program.invars):
            if not b.dropped:
                bound.append(b.name)
        used = set()
        for eq in program.equations:
            for atom in eq.inputs:
                if isinstance(atom, Var):
                    used.add(atom.name)
            for b in eq.outputs:
                if not b.dropped:
                    bound.append(b.name)
        for atom in program.outputs:
            if isinstance(atom, Var):
                used.add(atom.name)
        assert len(bound) == len(set(bound))
        assert used <= set(bound)


def test_pretty_print_literal_spelling_round_trips():
    lit = Literal(1.0, "1.0")
    eq = Equation((Binder("b", F32),), "add", (), (lit, Var("a")))
    program = Program((), (Binder("a", F32),), (eq,), (Var("b"),))
    text = pretty_print(program)
    assert "add 1.0 a" in text
    assert parse(text) == program
