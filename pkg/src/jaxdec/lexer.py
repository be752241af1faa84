"""Lexer turning raw Jaxpr dump text into a flat token stream."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import LexError


class TokenKind(enum.Enum):
    LBRACE = "{"
    RBRACE = "}"
    LBRACK = "["
    RBRACK = "]"
    LPAREN = "("
    RPAREN = ")"
    COLON = ":"
    SEMI = ";"
    DOT = "."
    COMMA = ","
    EQUALS = "="
    IDENT = "ident"
    INT = "int"
    FLOAT = "float"
    BOOL = "bool"
    KEYWORD = "keyword"  # lambda / let / in
    UNDERSCORE = "_"
    OPAQUE = "opaque"  # <...> blobs, e.g. xla_pmap's axis_name
    EOF = "eof"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    col: int


_PUNCT = {
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    "[": TokenKind.LBRACK,
    "]": TokenKind.RBRACK,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ":": TokenKind.COLON,
    ";": TokenKind.SEMI,
    ",": TokenKind.COMMA,
    "=": TokenKind.EQUALS,
}

_KEYWORDS = frozenset({"lambda", "let", "in"})


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch in "_'"


class _Scanner:
    def __init__(self, source: str):
        self.src = source
        self.pos = 0
        self.line = 1
        self.col = 1

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.src[i] if i < len(self.src) else ""

    def advance(self) -> str:
        ch = self.src[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch


def _scan_number(s: _Scanner) -> tuple[TokenKind, str]:
    start = s.pos
    if s.peek() == "-":
        s.advance()
    is_float = False
    while s.peek().isdigit():
        s.advance()
    if s.peek() == ".":
        is_float = True
        s.advance()
        while s.peek().isdigit():
            s.advance()
    if s.peek() in "eE" and (s.peek(1).isdigit() or (s.peek(1) in "+-" and s.peek(2).isdigit())):
        is_float = True
        s.advance()
        if s.peek() in "+-":
            s.advance()
        while s.peek().isdigit():
            s.advance()
    text = s.src[start : s.pos]
    return (TokenKind.FLOAT if is_float else TokenKind.INT), text


def tokenize(source: str) -> list[Token]:
    """Split dump text into tokens, ending with EOF.

    Numeric literals are FLOAT iff they contain a '.' or an exponent, or are
    an inf/nan spelling; '-' fuses into a following numeric literal since the
    dump prints negatives inline.  '<...>' blobs become single OPAQUE tokens.
    """
    s = _Scanner(source)
    tokens: list[Token] = []
    while s.pos < len(s.src):
        ch = s.peek()
        if ch in " \t\r\n":
            s.advance()
            continue
        line, col = s.line, s.col
        if ch in _PUNCT:
            s.advance()
            tokens.append(Token(_PUNCT[ch], ch, line, col))
        elif ch == ".":
            s.advance()
            tokens.append(Token(TokenKind.DOT, ".", line, col))
        elif ch.isdigit() or (ch == "-" and (s.peek(1).isdigit() or s.peek(1) == ".")):
            kind, text = _scan_number(s)
            tokens.append(Token(kind, text, line, col))
        elif ch == "-" and s.src.startswith("-inf", s.pos):
            for _ in range(4):
                s.advance()
            tokens.append(Token(TokenKind.FLOAT, "-inf", line, col))
        elif _is_ident_start(ch):
            start = s.pos
            while s.pos < len(s.src) and _is_ident_char(s.peek()):
                s.advance()
            text = s.src[start : s.pos]
            if text in _KEYWORDS:
                kind = TokenKind.KEYWORD
            elif text in ("True", "False"):
                kind = TokenKind.BOOL
            elif text == "_":
                kind = TokenKind.UNDERSCORE
            elif text in ("inf", "nan"):
                kind = TokenKind.FLOAT
            else:
                kind = TokenKind.IDENT
            tokens.append(Token(kind, text, line, col))
        elif ch == "<":
            start = s.pos
            while s.pos < len(s.src) and s.peek() != ">":
                s.advance()
            if s.pos >= len(s.src):
                raise LexError("unterminated '<...>'", line, col)
            s.advance()
            tokens.append(Token(TokenKind.OPAQUE, s.src[start : s.pos], line, col))
        else:
            raise LexError(f"unexpected character {ch!r}", s.line, s.col)
    tokens.append(Token(TokenKind.EOF, "", s.line, s.col))
    return tokens
