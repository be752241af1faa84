"""jaxdec: decompile textual Jaxpr dumps into editable Python source."""

from .emitter import EmitConfig, decompile, emit_module
from .errors import (
    DecompileError,
    LexError,
    ParseError,
    UnknownOperator,
    UnsupportedOperator,
)
from .imports import ImportSet
from .ir import Program, pretty_print, validate
from .lexer import Token, TokenKind, tokenize
from .parser import parse
from .renamer import NameEnv
from .rules import default_registry
from .translator import OperatorRule, Registry

__all__ = [
    "DecompileError",
    "EmitConfig",
    "ImportSet",
    "LexError",
    "NameEnv",
    "OperatorRule",
    "ParseError",
    "Program",
    "Registry",
    "Token",
    "TokenKind",
    "UnknownOperator",
    "UnsupportedOperator",
    "decompile",
    "default_registry",
    "emit_module",
    "parse",
    "pretty_print",
    "tokenize",
    "validate",
]

__version__ = "0.1.0"
