"""Tokenizer and recursive-descent parser for mnesor expressions.

Precedence, loosest first: ``|`` union, ``&`` intersection, prefix ``~``
complement, postfix ``* <number>`` scaling. Binary operators associate to
the left.
"""

import re
from dataclasses import dataclass

from ..errors import ParseError
from .ast import EMPTY, FULL, Complement, Intersect, Scale, Union, Var

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[|&~*()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "name", "keyword", "op" or "end"
    text: str
    line: int
    column: int


def _describe(tok):
    return "end of input" if tok.kind == "end" else repr(tok.text)


def tokenize(text):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            for i, ch in enumerate(m.group(), start=pos):
                if ch == "\n":
                    line, line_start = line + 1, i + 1
        else:
            value = m.group()
            if kind == "name" and value in ("EMPTY", "FULL"):
                kind = "keyword"
            tokens.append(Token(kind, value, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


_OPERAND_START = ("name", "EMPTY", "FULL", "'~'", "'('")


class Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def _error(self, expected):
        tok = self.tok
        raise ParseError(f"unexpected {_describe(tok)}", tok.line, tok.column, expected)

    def _accept(self, op):
        if self.tok.kind == "op" and self.tok.text == op:
            self.pos += 1
            return True
        return False

    def parse(self):
        e = self.union()
        if self.tok.kind != "end":
            self._error(("'|'", "'&'", "'*'", "end of input"))
        return e

    def union(self):
        e = self.intersection()
        while self._accept("|"):
            e = Union(e, self.intersection())
        return e

    def intersection(self):
        e = self.prefix()
        while self._accept("&"):
            e = Intersect(e, self.prefix())
        return e

    def prefix(self):
        if self._accept("~"):
            return Complement(self.prefix())
        return self.postfix()

    def postfix(self):
        e = self.atom()
        while self._accept("*"):
            tok = self.tok
            if tok.kind != "number":
                self._error(("positive number",))
            value = float(tok.text)
            if not value > 0 or value == float("inf"):
                raise ParseError(f"scale literal {tok.text} is not a finite positive number",
                                 tok.line, tok.column, ("positive number",))
            self.pos += 1
            e = Scale(e, value)
        return e

    def atom(self):
        tok = self.tok
        if tok.kind == "name":
            self.pos += 1
            return Var(tok.text)
        if tok.kind == "keyword":
            self.pos += 1
            return EMPTY if tok.text == "EMPTY" else FULL
        if self._accept("("):
            e = self.union()
            if not self._accept(")"):
                self._error(("')'",))
            return e
        self._error(_OPERAND_START)


def parse(text):
    return Parser(text).parse()
