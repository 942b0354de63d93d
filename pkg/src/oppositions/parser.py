"""Concrete syntax for sentences and corpora.

Sentence grammar (precedence ~ > & > | > ->, binary connectives
left-associative)::

    sentence := sentence ('->' | '|' | '&') sentence
              | '~' sentence
              | '(' sentence ')'
              | ('forall' | 'exists') VAR '.' matrix
              | TAG '[' PREDICATE ']'          # A,E,I,O,U,Y sugar
    matrix   := same connective structure over atoms PREDICATE '(' VAR ')'

The quantifier body extends as far as possible.  Sugar tags expand at
parse time through the mixed representation, so later stages only ever
see plain sentences.

Corpus files are line oriented: one ``label: sentence`` entry per line,
``#`` starts a comment, blank lines are skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import (
    EXISTS,
    FORALL,
    FORMS,
    Atom,
    MAnd,
    MImplies,
    MNot,
    MOr,
    Matrix,
    Sentence,
    And,
    Implies,
    Not,
    Or,
    Quantified,
    Vocabulary,
    make_categorical,
    sentence_predicates,
)


class ParseError(Exception):
    """Syntax error carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Corpus:
    """Ordered labelled sentences over a shared inferred vocabulary."""

    entries: tuple[tuple[str, Sentence], ...]
    vocabulary: Vocabulary

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    def sentence(self, label: str) -> Sentence:
        for name, s in self.entries:
            if name == label:
                return s
        raise KeyError(label)

    def __len__(self) -> int:
        return len(self.entries)


_TOKEN_RE = re.compile(r"->|[()\[\].~&|]|[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    col: int


def _tokenize(text: str, line: int, col_offset: int) -> list[_Token]:
    tokens = []
    for lineno, raw in enumerate(text.split("\n"), start=line):
        offset = col_offset if lineno == line else 0
        pos = 0
        while pos < len(raw):
            if raw[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(raw, pos)
            if m is None:
                raise ParseError(f"unexpected character {raw[pos]!r}", lineno, offset + pos + 1)
            tokens.append(_Token(m.group(), lineno, offset + pos + 1))
            pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, line: int = 1, col_offset: int = 0):
        self.tokens = _tokenize(text, line, col_offset)
        self.pos = 0
        lines = text.split("\n")
        self.end_line = line + len(lines) - 1
        self.end_col = (col_offset if len(lines) == 1 else 0) + len(lines[-1]) + 1

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end_line, self.end_col)
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {text!r}", self.end_line, self.end_col)
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.col)
        self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        if tok is None:
            return ParseError(message, self.end_line, self.end_col)
        return ParseError(message, tok.line, tok.col)

    # sentence level

    def sentence(self) -> Sentence:
        return self._sentence_binary(1)

    def _sentence_binary(self, level: int) -> Sentence:
        ops = {1: ("->", Implies), 2: ("|", Or), 3: ("&", And)}
        if level > 3:
            return self._sentence_unary()
        symbol, node = ops[level]
        result = self._sentence_binary(level + 1)
        while (tok := self.peek()) is not None and tok.text == symbol:
            self.advance()
            result = node(result, self._sentence_binary(level + 1))
        return result

    def _sentence_unary(self) -> Sentence:
        tok = self.peek()
        if tok is not None and tok.text == "~":
            self.advance()
            return Not(self._sentence_unary())
        return self._sentence_primary()

    def _sentence_primary(self) -> Sentence:
        tok = self.peek()
        if tok is None:
            raise self.fail("expected a sentence")
        if tok.text == "(":
            self.advance()
            inner = self.sentence()
            self.expect(")")
            return inner
        if tok.text in (FORALL, EXISTS):
            self.advance()
            var = self._variable()
            self.expect(".")
            return Quantified(tok.text, self._matrix_binary(1, var))
        if tok.text[0].isalpha():
            after = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            if after is not None and after.text == "[":
                if tok.text not in FORMS:
                    raise ParseError(f"unknown sugar tag {tok.text!r}", tok.line, tok.col)
                self.advance()
                self.advance()
                pred = self._predicate_name()
                self.expect("]")
                return make_categorical(tok.text, pred)
            if after is not None and after.text == "(":
                raise ParseError(
                    f"atom {tok.text!r} outside a quantifier leaves its variable free",
                    tok.line,
                    tok.col,
                )
        raise self.fail(f"expected a sentence, found {tok.text!r}")

    # matrix level

    def _matrix_binary(self, level: int, var: str) -> Matrix:
        ops = {1: ("->", MImplies), 2: ("|", MOr), 3: ("&", MAnd)}
        if level > 3:
            return self._matrix_unary(var)
        symbol, node = ops[level]
        result = self._matrix_binary(level + 1, var)
        while (tok := self.peek()) is not None and tok.text == symbol:
            self.advance()
            result = node(result, self._matrix_binary(level + 1, var))
        return result

    def _matrix_unary(self, var: str) -> Matrix:
        tok = self.peek()
        if tok is not None and tok.text == "~":
            self.advance()
            return MNot(self._matrix_unary(var))
        return self._matrix_primary(var)

    def _matrix_primary(self, var: str) -> Matrix:
        tok = self.peek()
        if tok is None:
            raise self.fail("expected an atom")
        if tok.text == "(":
            self.advance()
            inner = self._matrix_binary(1, var)
            self.expect(")")
            return inner
        if tok.text[0].isalpha() and tok.text[0].isupper():
            name = self.advance().text
            self.expect("(")
            arg = self.advance()
            if not arg.text[0].isalpha():
                raise ParseError(f"expected a variable, found {arg.text!r}", arg.line, arg.col)
            if arg.text != var:
                raise ParseError(f"free variable {arg.text!r}", arg.line, arg.col)
            self.expect(")")
            return Atom(name)
        raise self.fail(f"expected an atom, found {tok.text!r}")

    def _variable(self) -> str:
        tok = self.advance()
        if not tok.text[0].isalpha() or not tok.text[0].islower() or tok.text in (FORALL, EXISTS):
            raise ParseError(f"expected a variable, found {tok.text!r}", tok.line, tok.col)
        return tok.text

    def _predicate_name(self) -> str:
        tok = self.advance()
        if not tok.text[0].isalpha() or not tok.text[0].isupper():
            raise ParseError(f"expected a predicate name, found {tok.text!r}", tok.line, tok.col)
        return tok.text


def parse_sentence(text: str, *, line: int = 1, col_offset: int = 0) -> Sentence:
    """Parse a single sentence; raises ParseError with position on failure."""
    parser = _Parser(text, line=line, col_offset=col_offset)
    result = parser.sentence()
    tok = parser.peek()
    if tok is not None:
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.col)
    return result


def parse_corpus(text: str) -> Corpus:
    """Parse a labelled corpus; vocabulary is inferred from the sentences."""
    entries: list[tuple[str, Sentence]] = []
    seen: set[str] = set()
    predicates: list[str] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        cut = raw.find("#")
        content = raw if cut < 0 else raw[:cut]
        if not content.strip():
            continue
        if ":" not in content:
            raise ParseError("expected 'label: sentence'", lineno, 1)
        label_part, sentence_part = content.split(":", 1)
        label = label_part.strip()
        if not label or any(ch.isspace() for ch in label):
            raise ParseError(f"invalid label {label_part.strip()!r}", lineno, 1)
        if label in seen:
            raise ParseError(f"duplicate label {label!r}", lineno, 1)
        seen.add(label)
        sentence = parse_sentence(
            sentence_part, line=lineno, col_offset=len(label_part) + 1
        )
        entries.append((label, sentence))
        for pred in sentence_predicates(sentence):
            if pred not in predicates:
                predicates.append(pred)
    if not entries:
        raise ParseError("corpus has no entries", 1, 1)
    return Corpus(tuple(entries), Vocabulary(tuple(predicates)))
