"""Recursive-descent parser from tokens to a validated Program.

Grammar (dumps as printed by the source framework's pretty-printer):

    program  = "{" "lambda" {binder} ";" {binder} "." "let" {equation}
               "in" "(" [atoms] ")" "}"
    binder   = (ident | "_") [":" dtype "[" [dims] "]"]
    equation = binder {binder} "=" ident [params] {atom}
    params   = "[" {ident "=" pvalue} "]"
    pvalue   = literal | symbol | call | "(" tuple ")" | "[" list "]"
             | "<...>" | program
    atom     = (ident | literal) [":" dtype "[" [dims] "]"]

Tuple elements may be separated by commas or plain whitespace (the printer
uses whitespace between nested programs in `branches=(...)`), and literals
may carry inline type suffixes (`1.0:f32[]`), which are consumed and
discarded: the model keeps literals typeless.
"""

from __future__ import annotations

from .errors import ParseError
from .ir import (
    Binder,
    DType,
    Equation,
    Literal,
    Opaque,
    ParamCall,
    ParamList,
    ParamTuple,
    ParamValue,
    Program,
    SCALAR_KINDS,
    ShapedType,
    Symbol,
    Var,
    validate,
)
from .lexer import Token, TokenKind, tokenize

_K = TokenKind

_LITERAL_KINDS = (_K.INT, _K.FLOAT, _K.BOOL)


class _Parser:
    def __init__(self, tokens: list[Token], pos: int = 0):
        self.tokens = tokens
        self.pos = pos

    def peek(self, offset: int = 0) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind is not _K.EOF:
            self.pos += 1
        return tok

    def expect(self, kind: TokenKind, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind is not kind or (text is not None and tok.text != text):
            want = text or kind.value
            found = tok.text or "end of input"
            raise ParseError(f"expected {want!r}, found {found!r}", tok.line, tok.col)
        return self.advance()

    def error(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    # -- binders ------------------------------------------------------------

    def parse_type(self) -> ShapedType:
        tok = self.expect(_K.IDENT)
        if tok.text not in SCALAR_KINDS:
            raise ParseError(f"unknown dtype {tok.text!r}", tok.line, tok.col)
        self.expect(_K.LBRACK)
        dims: list[int] = []
        if self.peek().kind is _K.INT:
            dims.append(int(self.advance().text))
            while self.peek().kind is _K.COMMA:
                self.advance()
                dims.append(int(self.expect(_K.INT).text))
        self.expect(_K.RBRACK)
        return ShapedType(DType(tok.text), tuple(dims))

    def parse_binder(self) -> Binder:
        tok = self.peek()
        if tok.kind is _K.UNDERSCORE:
            self.advance()
            name, dropped = "_", True
        elif tok.kind is _K.IDENT:
            self.advance()
            name, dropped = tok.text, False
        else:
            self.error(f"expected binder, found {tok.text!r}")
        type_ = None
        if self.peek().kind is _K.COLON:
            self.advance()
            type_ = self.parse_type()
        return Binder(name, type_, dropped)

    # -- atoms --------------------------------------------------------------

    def _literal(self, tok: Token) -> Literal:
        if tok.kind is _K.INT:
            return Literal(int(tok.text), tok.text)
        if tok.kind is _K.FLOAT:
            return Literal(float(tok.text), tok.text)
        return Literal(tok.text == "True", tok.text)

    def parse_atom(self) -> Var | Literal:
        tok = self.peek()
        if tok.kind is _K.IDENT:
            self.advance()
            return Var(tok.text)
        if tok.kind in _LITERAL_KINDS:
            self.advance()
            lit = self._literal(tok)
            # inline type suffix on literals (`1.0:f32[]`) is discarded
            if self.peek().kind is _K.COLON:
                self.advance()
                self.parse_type()
            return lit
        self.error(f"expected atom, found {tok.text!r}")

    def _starts_equation(self) -> bool:
        # A new equation begins at `_`, at `name =`, or at `name : type`.
        # Input atoms are bare variable names or typed literals, so neither
        # pattern can occur mid-atom-list in printed dumps.
        tok = self.peek()
        if tok.kind is _K.UNDERSCORE:
            return True
        if tok.kind is not _K.IDENT:
            return False
        return self.peek(1).kind in (_K.COLON, _K.EQUALS)

    # -- params -------------------------------------------------------------

    def parse_pvalue(self) -> ParamValue:
        tok = self.peek()
        if tok.kind in _LITERAL_KINDS:
            self.advance()
            return self._literal(tok)
        if tok.kind is _K.OPAQUE:
            self.advance()
            return Opaque(tok.text)
        if tok.kind is _K.IDENT:
            name = self.advance().text
            while self.peek().kind is _K.DOT and self.peek(1).kind is _K.IDENT:
                self.advance()
                name += "." + self.advance().text
            if self.peek().kind is _K.LPAREN:
                return self._parse_call(name)
            return Symbol(name)
        if tok.kind is _K.LPAREN:
            self.advance()
            items = self._parse_value_seq(_K.RPAREN)
            self.expect(_K.RPAREN)
            return ParamTuple(items)
        if tok.kind is _K.LBRACK:
            self.advance()
            items = self._parse_value_seq(_K.RBRACK)
            self.expect(_K.RBRACK)
            return ParamList(items)
        if tok.kind is _K.LBRACE:
            return self.parse_program()
        self.error(f"expected parameter value, found {tok.text!r}")

    def _parse_value_seq(self, closer: TokenKind) -> tuple[ParamValue, ...]:
        items: list[ParamValue] = []
        while self.peek().kind is not closer:
            if self.peek().kind is _K.EOF:
                self.error("unbalanced brackets")
            items.append(self.parse_pvalue())
            if self.peek().kind is _K.COMMA:
                self.advance()
        return tuple(items)

    def _parse_call(self, func: str) -> ParamCall:
        self.expect(_K.LPAREN)
        args: list[ParamValue] = []
        kwargs: list[tuple[str, ParamValue]] = []
        while self.peek().kind is not _K.RPAREN:
            if self.peek().kind is _K.EOF:
                self.error("unbalanced parentheses in call")
            if self.peek().kind is _K.IDENT and self.peek(1).kind is _K.EQUALS:
                key = self.advance().text
                self.advance()
                kwargs.append((key, self.parse_pvalue()))
            else:
                args.append(self.parse_pvalue())
            if self.peek().kind is _K.COMMA:
                self.advance()
        self.expect(_K.RPAREN)
        return ParamCall(func, tuple(args), tuple(kwargs))

    def parse_params(self) -> tuple[tuple[str, ParamValue], ...]:
        self.expect(_K.LBRACK)
        params: list[tuple[str, ParamValue]] = []
        while self.peek().kind is not _K.RBRACK:
            if self.peek().kind is _K.EOF:
                self.error("unbalanced '[' in operator parameters")
            key = self.expect(_K.IDENT).text
            self.expect(_K.EQUALS)
            params.append((key, self.parse_pvalue()))
        self.expect(_K.RBRACK)
        return tuple(params)

    # -- equations and programs --------------------------------------------

    def parse_equation(self) -> Equation:
        outputs = [self.parse_binder()]
        while self.peek().kind is not _K.EQUALS:
            outputs.append(self.parse_binder())
        self.expect(_K.EQUALS)
        primitive = self.expect(_K.IDENT).text
        params: tuple[tuple[str, ParamValue], ...] = ()
        if self.peek().kind is _K.LBRACK:
            params = self.parse_params()
        inputs: list[Var | Literal] = []
        while True:
            kind = self.peek().kind
            if kind in _LITERAL_KINDS:
                inputs.append(self.parse_atom())
            elif kind is _K.IDENT and not self._starts_equation():
                inputs.append(self.parse_atom())
            else:
                break
        return Equation(tuple(outputs), primitive, params, tuple(inputs))

    def parse_program(self) -> Program:
        self.expect(_K.LBRACE)
        self.expect(_K.KEYWORD, "lambda")
        constvars: list[Binder] = []
        while self.peek().kind is not _K.SEMI:
            constvars.append(self.parse_binder())
        self.expect(_K.SEMI)
        invars: list[Binder] = []
        while self.peek().kind is not _K.DOT:
            invars.append(self.parse_binder())
        self.expect(_K.DOT)
        self.expect(_K.KEYWORD, "let")
        equations: list[Equation] = []
        while not (self.peek().kind is _K.KEYWORD and self.peek().text == "in"):
            if self.peek().kind is _K.EOF:
                self.error("unterminated 'let': expected 'in'")
            equations.append(self.parse_equation())
        self.expect(_K.KEYWORD, "in")
        self.expect(_K.LPAREN)
        outputs: list[Var | Literal] = []
        while self.peek().kind is not _K.RPAREN:
            outputs.append(self.parse_atom())
            if self.peek().kind is _K.COMMA:
                self.advance()
        self.expect(_K.RPAREN)
        self.expect(_K.RBRACE)
        return Program(tuple(constvars), tuple(invars), tuple(equations), tuple(outputs))


def parse_program(tokens: list[Token], pos: int = 0) -> tuple[Program, int]:
    p = _Parser(tokens, pos)
    program = p.parse_program()
    return program, p.pos


def parse_equation(tokens: list[Token], pos: int = 0) -> tuple[Equation, int]:
    p = _Parser(tokens, pos)
    eq = p.parse_equation()
    return eq, p.pos


def parse_params(tokens: list[Token], pos: int = 0):
    p = _Parser(tokens, pos)
    params = p.parse_params()
    return params, p.pos


def parse(source: str) -> Program:
    """Tokenize, parse, and validate a full dump; the sole parser entry point
    the rest of the pipeline uses."""
    tokens = tokenize(source)
    program, pos = parse_program(tokens)
    p = _Parser(tokens, pos)
    p.expect(TokenKind.EOF)
    violations = validate(program)
    if violations:
        first = violations[0]
        raise ParseError(f"invalid program: {first.message}", 1, 1)
    return program
