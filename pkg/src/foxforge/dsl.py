"""Text syntax for words and presentations.

Grammar::

    pres     := "gens:" namelist ";" "rels:" rellist?
    namelist := name ("," name)*
    rellist  := word (";" word)* | word ("," word)*
    word     := term ("*"? term)*
    term     := name ("^" integer)? | "[" word "," word "]" ("^" integer)?
              | "(" word ")" ("^" integer)?
    name     := letter (letter | digit | "_")* "'"*

A bare ``1`` is accepted as the identity term.  ``#`` starts a comment that
runs to the end of the line.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .words import Alphabet, Word, commutator

__all__ = ["DSLSyntaxError", "UnknownGenerator", "parse_word", "parse_presentation_parts"]


class DSLSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownGenerator(ValueError):
    def __init__(self, name: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: unknown generator {name!r}")
        self.name = name
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<kw>(?:gens|rels)\s*:)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*'*)
  | (?P<int>[+-]?\d+)
  | (?P<op>[\^*\[\](),;])
    """,
    re.VERBOSE,
)


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                self.fail(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            if kind != "ws":
                value = m.group()
                if kind == "kw":
                    value = value[:4]
                self.tokens.append((kind, value, pos))
            pos = m.end()
        self.i = 0

    def position(self, offset: int) -> Tuple[int, int]:
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def fail(self, message: str, offset: Optional[int] = None):
        if offset is None:
            offset = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise DSLSyntaxError(message, *self.position(offset))

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] in ("op", "kw") and tok[1] == value

    def expect(self, value: str):
        if not self.at(value):
            tok = self.peek()
            got = "end of input" if tok is None else repr(tok[1])
            want = value + ":" if value in ("gens", "rels") else value
            self.fail(f"expected {want!r}, got {got}")
        self.i += 1

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok


class _WordParser:
    def __init__(self, lexer: _Lexer, alphabet: Alphabet):
        self.lx = lexer
        self.alphabet = alphabet

    def _starts_term(self) -> bool:
        tok = self.lx.peek()
        if tok is None:
            return False
        kind, value, _ = tok
        return kind == "name" or (kind == "op" and value in "[(") or (kind == "int" and value == "1")

    def word(self) -> Word:
        if not self._starts_term():
            self.lx.fail("expected a word")
        w = self.term()
        while True:
            if self.lx.at("*"):
                self.lx.next()
                w = w * self.term()
            elif self._starts_term():
                w = w * self.term()
            else:
                return w

    def _power(self, w: Word) -> Word:
        if self.lx.at("^"):
            self.lx.next()
            tok = self.lx.peek()
            if tok is None or tok[0] != "int":
                self.lx.fail("expected an integer exponent")
            self.lx.next()
            w = w ** int(tok[1])
        return w

    def term(self) -> Word:
        tok = self.lx.peek()
        if tok is None:
            self.lx.fail("expected a term")
        kind, value, offset = tok
        if kind == "int" and value == "1":
            self.lx.next()
            return self._power(self.alphabet.identity())
        if kind == "name":
            self.lx.next()
            if value not in self.alphabet:
                line, col = self.lx.position(offset)
                raise UnknownGenerator(value, line, col)
            return self._power(self.alphabet.letter(value))
        if self.lx.at("["):
            self.lx.next()
            a = self.word()
            self.lx.expect(",")
            b = self.word()
            self.lx.expect("]")
            return self._power(commutator(a, b))
        if self.lx.at("("):
            self.lx.next()
            w = self.word()
            self.lx.expect(")")
            return self._power(w)
        self.lx.fail(f"unexpected {value!r}")


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse a single word over ``alphabet``.

    >>> from foxforge.words import Alphabet
    >>> str(parse_word("[x1,x2]*x3^-2", Alphabet.free(3)))
    'x1^-1*x2^-1*x1*x2*x3^-1*x3^-1'
    """
    lx = _Lexer(text)
    w = _WordParser(lx, alphabet).word()
    if lx.peek() is not None:
        lx.fail(f"trailing input {lx.peek()[1]!r}")
    return w


def parse_presentation_parts(text: str):
    """Parse presentation text into ``(alphabet, [(word, line, column), ...])``.

    Reduction to the empty word is left to the caller to report.
    """
    lx = _Lexer(text)
    lx.expect("gens")
    names = []
    while True:
        tok = lx.peek()
        if tok is None or tok[0] != "name":
            lx.fail("expected a generator name")
        lx.next()
        names.append(tok[1])
        if lx.at(","):
            lx.next()
            continue
        break
    lx.expect(";")
    try:
        alphabet = Alphabet(names)
    except ValueError as e:
        lx.fail(str(e))
    lx.expect("rels")
    parser = _WordParser(lx, alphabet)
    rels = []
    sep = None
    if lx.peek() is not None:
        while True:
            start = lx.peek()
            rels.append((parser.word(), *lx.position(start[2])))
            if lx.peek() is None:
                break
            if sep is None and (lx.at(";") or lx.at(",")):
                sep = lx.peek()[1]
            if not lx.at(sep or ";"):
                lx.fail(f"expected {sep or ';'!r} between relators")
            lx.next()
            if lx.peek() is None:
                break  # tolerate a trailing separator
    return alphabet, rels
