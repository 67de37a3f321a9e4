"""A small expression language over the nine irreducible characters.

Grammar (whitespace-insensitive)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := NAME | 'sym' '^' INT '(' expr ')' | 'dual' '(' expr ')'
            | '(' expr ')'

``NAME`` is one of U, V, W, X1, X2, W', W'', X', X'' (primes written as
ASCII apostrophes).  ``*`` is the tensor product and binds tighter than the
direct sum ``+``; ``sym^n`` demands a 2-dimensional argument, which is a
semantic check performed at evaluation time so the parser can still build
the tree and point at the offending spot.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartab import IRREP_NAMES, CharacterTable, ClassFunction, default_table


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int) -> None:
        line = text.count("\n", 0, pos) + 1
        column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {column}: {message}")
        self.pos = pos
        self.line = line
        self.column = column


class DimensionError(ValueError):
    """sym^n applied to a subexpression that is not 2-dimensional."""


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sym:
    n: int
    arg: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Dual:
    arg: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Plus:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


Expr = Atom | Sym | Dual | Tensor | Plus


def render(expr: Expr) -> str:
    """Canonical text for an AST; reparsing yields an identical tree."""
    if isinstance(expr, Atom):
        return expr.name
    if isinstance(expr, Sym):
        return f"sym^{expr.n}({render(expr.arg)})"
    if isinstance(expr, Dual):
        return f"dual({render(expr.arg)})"
    if isinstance(expr, Tensor):
        left = render(expr.left)
        if isinstance(expr.left, Plus):
            left = f"({left})"
        right = render(expr.right)
        if isinstance(expr.right, (Plus, Tensor)):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(expr, Plus):
        left = render(expr.left)
        right = render(expr.right)
        if isinstance(expr.right, Plus):
            right = f"({right})"
        return f"{left} + {right}"
    raise TypeError(f"not an expression node: {expr!r}")


# -- tokenizer ---------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | int | caret | lparen | rparen | star | plus | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "'"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        simple = {"^": "caret", "(": "lparen", ")": "rparen", "*": "star", "+": "plus"}
        if ch in simple:
            tokens.append(_Token(simple[ch], ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(_Token("end", "", n))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            got = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ParseError(f"expected {what}, got {got}", self.text, tok.pos)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(
                f"unexpected trailing input {tok.text!r}", self.text, tok.pos
            )
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "plus":
            pos = self.advance().pos
            node = Plus(node, self.term(), pos=pos)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind == "star":
            pos = self.advance().pos
            node = Tensor(node, self.factor(), pos=pos)
        return node

    def factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "lparen":
            self.advance()
            node = self.expr()
            self.expect("rparen", "')'")
            return node
        if tok.kind == "ident" and tok.text == "sym":
            self.advance()
            self.expect("caret", "'^' after sym")
            power = self.expect("int", "an integer power")
            self.expect("lparen", "'(' after the power")
            arg = self.expr()
            self.expect("rparen", "')'")
            return Sym(int(power.text), arg, pos=tok.pos)
        if tok.kind == "ident" and tok.text == "dual":
            self.advance()
            self.expect("lparen", "'(' after dual")
            arg = self.expr()
            self.expect("rparen", "')'")
            return Dual(arg, pos=tok.pos)
        if tok.kind == "ident":
            if tok.text not in IRREP_NAMES:
                raise ParseError(
                    f"unknown name {tok.text!r}; expected one of "
                    + ", ".join(IRREP_NAMES),
                    self.text,
                    tok.pos,
                )
            self.advance()
            return Atom(tok.text, pos=tok.pos)
        got = repr(tok.text) if tok.kind != "end" else "end of input"
        raise ParseError(f"expected an expression, got {got}", self.text, tok.pos)


def parse(text: str) -> Expr:
    """Parse an expression; errors carry line and column."""
    return _Parser(text).parse()


def evaluate(expr: Expr, tab: CharacterTable | None = None) -> ClassFunction:
    """Evaluate an AST to an exact class function.

    Raises :class:`DimensionError` when sym^n is applied to a subexpression
    whose dimension is not 2.
    """
    tab = tab or default_table()
    if isinstance(expr, Atom):
        return tab.row(expr.name)
    if isinstance(expr, Sym):
        inner = evaluate(expr.arg, tab)
        if inner.dim() != 2:
            raise DimensionError(
                f"sym^{expr.n} needs a 2-dimensional argument, but "
                f"{render(expr.arg)} has dimension {inner.dim()}"
            )
        return tab.sym_power(inner, expr.n)
    if isinstance(expr, Dual):
        return tab.dual(evaluate(expr.arg, tab))
    if isinstance(expr, Tensor):
        return evaluate(expr.left, tab) * evaluate(expr.right, tab)
    if isinstance(expr, Plus):
        return evaluate(expr.left, tab) + evaluate(expr.right, tab)
    raise TypeError(f"not an expression node: {expr!r}")


def decompose_text(text: str, tab: CharacterTable | None = None):
    """Parse, evaluate, and decompose in one step: (class function, mults)."""
    tab = tab or default_table()
    f = evaluate(parse(text), tab)
    return f, tab.decompose(f)
