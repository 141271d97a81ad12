"""Text front end for expressions: tokenizer, parser, printer, evaluation.

Grammar::

    expr := term (('+' | '-') term)*
    term := ['-'] [scalar] atom
    atom := name | '(' expr '*' expr ')' | '[' expr ',' expr ']'
          | '{' expr ',' expr '}' | '<' expr ',' expr '>' | '(' expr ')'

A name is either a generator of the active table or, when every character
is a single-letter generator, a word.  Juxtaposed letters are contracted
with the word rules; ``(x*y)`` is the plain binary product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import expr as E
from .algebra import Element, MonomialTable, format_scalar
from .brackets import ContractionOrder, evaluate
from .words import DEFAULT_OPTIONS, EngineOptions


class ExprSyntaxError(ValueError):
    """Parse failure located at ``line``/``col`` (both 1-based)."""

    def __init__(self, message: str, src: str, start: int, end: int | None = None):
        self.src = src
        self.start = start
        self.end = max(end if end is not None else start + 1, start + 1)
        self.line = src.count("\n", 0, start) + 1
        self.col = start - (src.rfind("\n", 0, start) + 1) + 1
        self.reason = message
        super().__init__(f"line {self.line}, col {self.col}: {message}")

    def caret(self) -> str:
        """The offending source line with the span underlined."""
        lines = self.src.split("\n")
        text = lines[self.line - 1] if lines else ""
        width = min(self.end - self.start, max(len(text) - self.col + 1, 1))
        return f"{text}\n{' ' * (self.col - 1)}{'^' * width}"


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    start: int
    end: int


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*,()\[\]{}<>])"
)


def tokenize(src: str) -> list[Token]:
    out, pos = [], 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", src, pos)
        kind = m.lastgroup
        if kind != "ws":
            if kind == "num" and "/" in m.group() and int(m.group().split("/")[1]) == 0:
                raise ExprSyntaxError("zero denominator", src, pos, m.end())
            out.append(Token(kind, m.group(), pos, m.end()))
        pos = m.end()
    out.append(Token("end", "", len(src), len(src)))
    return out


_CLOSERS = {"[": ("]", E.Commutator), "{": ("}", E.Anticommutator), "<": (">", E.GradedBracket)}


class _Parser:
    def __init__(self, src: str, table: MonomialTable | None):
        self.src = src
        self.table = table
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ExprSyntaxError:
        tok = tok or self.tok
        return ExprSyntaxError(message, self.src, tok.start, tok.end)

    def take(self, text: str) -> Token:
        tok = self.tok
        if tok.text != text or tok.kind == "end":
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def parse(self) -> E.Node:
        node = self.expr()
        if self.at("*"):
            raise self.error("products must be parenthesized, e.g. (x*y)")
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> E.Node:
        terms = [self.term()]
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.i += 1
            t = self.term()
            terms.append(E.Neg(t) if op == "-" else t)
        return terms[0] if len(terms) == 1 else E.Sum(tuple(terms))

    def term(self) -> E.Node:
        negate = False
        if self.at("-"):
            negate = True
            self.i += 1
        node: E.Node
        if self.tok.kind == "num" and not self._number_is_generator():
            coeff = Fraction(self.tok.text)
            self.i += 1
            node = E.Scaled(coeff, self.atom())
        else:
            node = self.atom()
        return E.Neg(node) if negate else node

    def _number_is_generator(self) -> bool:
        # "1" is a generator of the quaternions; it is a scalar only when an
        # atom follows.
        tok = self.tok
        if self.table is None or tok.text not in self.table.basis:
            return False
        nxt = self.tokens[self.i + 1]
        return not (nxt.kind in ("name", "num") or nxt.text in ("(", "[", "{", "<"))

    def atom(self) -> E.Node:
        tok = self.tok
        if tok.kind in ("name", "num"):
            if tok.kind == "num" and (self.table is None or tok.text not in self.table.basis):
                raise self.error("a scalar must be followed by a term")
            self.i += 1
            return self.resolve(tok)
        if self.at("("):
            self.i += 1
            inner = self.expr()
            if self.at("*"):
                self.i += 1
                right = self.expr()
                if self.at("*"):
                    raise self.error("products are binary; write ((x*y)*z) or (x*(y*z))")
                self.take(")")
                return E.Product(inner, right)
            self.take(")")
            return inner
        if tok.kind == "op" and tok.text in _CLOSERS:
            closer, cls = _CLOSERS[tok.text]
            self.i += 1
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take(closer)
            return cls(left, right)
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise self.error(f"expected a generator, word or bracket, found {found}")

    def resolve(self, tok: Token) -> E.Node:
        name = tok.text
        if self.table is None:
            if len(name) == 1 or any(ch.isdigit() or ch == "_" for ch in name):
                return E.Gen(name)
            return E.Word(name)
        basis = self.table.basis
        if name in basis:
            return E.Gen(name)
        if len(name) > 1 and all(ch in basis for ch in name):
            return E.Word(name)
        raise self.error(f"unknown generator {name!r} for algebra {self.table.name}", tok)


def parse(src: str, table: MonomialTable | None = None) -> E.Node:
    """Parse ``src``; with ``table`` given, names are checked against its basis."""
    return _Parser(src, table).parse()


_ATOMS = (E.Gen, E.Word, E.Product, E.Commutator, E.Anticommutator, E.GradedBracket)
_BRACKETS = {E.Commutator: "[]", E.Anticommutator: "{}", E.GradedBracket: "<>"}


def unparse(node: E.Node) -> str:
    """Canonical text; ``parse(unparse(n)) == n`` for trees the parser can build."""
    if isinstance(node, E.Gen):
        return node.name
    if isinstance(node, E.Word):
        return node.letters
    if isinstance(node, E.Product):
        return f"({unparse(node.left)}*{unparse(node.right)})"
    if isinstance(node, tuple(_BRACKETS)):
        o, c = _BRACKETS[type(node)]
        return f"{o}{unparse(node.left)}, {unparse(node.right)}{c}"
    if isinstance(node, E.Scaled):
        child = unparse(node.child)
        if not isinstance(node.child, _ATOMS):
            child = f"({child})"
        return f"{format_scalar(node.coeff)} {child}"
    if isinstance(node, E.Neg):
        child = unparse(node.child)
        if not isinstance(node.child, _ATOMS + (E.Scaled,)):
            child = f"({child})"
        return f"-{child}"
    if isinstance(node, E.Sum):
        parts = []
        for k, term in enumerate(node.terms):
            if k and isinstance(term, E.Neg):
                inner = unparse(term.child)
                if not isinstance(term.child, _ATOMS + (E.Scaled,)):
                    inner = f"({inner})"
                parts.append(f"- {inner}")
                continue
            text = unparse(term)
            if isinstance(term, E.Sum):
                text = f"({text})"
            parts.append(f"+ {text}" if k else text)
        return " ".join(parts)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(
    src: str,
    table: MonomialTable,
    order: ContractionOrder = ContractionOrder.FITO,
    options: EngineOptions = DEFAULT_OPTIONS,
) -> Element:
    return evaluate(parse(src, table), table, order, options)
