import pathlib
import sys

import pytest

TESTS_DIR = pathlib.Path(__file__).parent
FIXTURES_DIR = TESTS_DIR / "fixtures"

sys.path.insert(0, str(TESTS_DIR))


@pytest.fixture(scope="session")
def fixture_dumps() -> dict[str, str]:
    return {p.stem: p.read_text() for p in sorted(FIXTURES_DIR.glob("*.jaxpr"))}


GOLDEN_INPUT = """\
{ lambda ; a:f32[]. let
b:f32[] = exp a
c:f32[] = add 1.0 b
_:f32[] = log c
d:f32[] = div 1.0 c
e:f32[] = mul d b
in (e,) }
"""

GOLDEN_OUTPUT = """\
from jax.numpy import *

def gf2(a):
    b = exp(a)
    c = 1.0 + b
    _ = log(c)
    d = 1.0 / c
    e = d * b
    return e
"""
