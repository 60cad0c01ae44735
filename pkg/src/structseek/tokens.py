"""Statement tokens and the query-term grammar.

A method structure is an ordered sequence of :class:`StatementToken`. Each
token renders to a canonical text ("if{", "break", "}", "Logger.debug") and
:func:`parse_term` reads that text back, so stored structures and user
queries share one vocabulary.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

CONTROL_OPEN_KEYWORDS = (
    "if",
    "else",
    "else if",
    "switch",
    "while",
    "do",
    "for",
    "try",
    "catch",
    "finally",
    "synchronized",
)
SIMPLE_CONTROL_KEYWORDS = ("break", "continue", "return", "throw")

_WS = re.compile(r"\s+")


class QuerySyntaxError(ValueError):
    """A query term that does not parse."""


class TokenKind(enum.Enum):
    CONTROL_OPEN = "control_open"
    SIMPLE_CONTROL = "simple_control"
    BLOCK_CLOSE = "block_close"
    METHOD_CALL = "method_call"


@dataclass(frozen=True, order=True)
class StatementToken:
    kind: TokenKind
    text: str = ""

    def __post_init__(self) -> None:
        if self.kind is TokenKind.CONTROL_OPEN and self.text not in CONTROL_OPEN_KEYWORDS:
            raise ValueError(f"not a control keyword: {self.text!r}")
        if self.kind is TokenKind.SIMPLE_CONTROL and self.text not in SIMPLE_CONTROL_KEYWORDS:
            raise ValueError(f"not a simple control keyword: {self.text!r}")
        if self.kind is TokenKind.BLOCK_CLOSE and self.text:
            raise ValueError("block close carries no text")
        if self.kind is TokenKind.METHOD_CALL and (
            not self.text or _WS.search(self.text) or "(" in self.text or ")" in self.text
        ):
            raise ValueError(f"bad method call name: {self.text!r}")

    @property
    def canonical_text(self) -> str:
        if self.kind is TokenKind.CONTROL_OPEN:
            return self.text + "{"
        if self.kind is TokenKind.BLOCK_CLOSE:
            return "}"
        return self.text

    def __str__(self) -> str:
        return self.canonical_text


def control_open(keyword: str) -> StatementToken:
    return StatementToken(TokenKind.CONTROL_OPEN, keyword)


def simple_control(keyword: str) -> StatementToken:
    return StatementToken(TokenKind.SIMPLE_CONTROL, keyword)


def method_call(name: str) -> StatementToken:
    return StatementToken(TokenKind.METHOD_CALL, name)


BLOCK_CLOSE = StatementToken(TokenKind.BLOCK_CLOSE)


def parse_term(raw: str) -> StatementToken:
    """Parse one canonical token text (or one query term) into a token.

    Raises:
        QuerySyntaxError: empty term, unknown ``X{`` prefix, or a call name
            containing whitespace or parentheses.
    """
    term = raw.strip()
    if not term:
        raise QuerySyntaxError("empty query term")
    if term == "}":
        return BLOCK_CLOSE
    if term.endswith("{"):
        keyword = _WS.sub(" ", term[:-1].strip())
        if keyword not in CONTROL_OPEN_KEYWORDS:
            raise QuerySyntaxError(f"unknown control keyword: {keyword}")
        return control_open(keyword)
    if term in SIMPLE_CONTROL_KEYWORDS:
        return simple_control(term)
    if _WS.search(term) or "(" in term or ")" in term or "{" in term or "}" in term:
        raise QuerySyntaxError(f"malformed method call term: {term}")
    return method_call(term)


_SEPARATOR = re.compile(r"->|→")


def parse_sequence(raw: str) -> tuple[StatementToken, ...]:
    """Split ``"if{ -> addParameter -> }"`` (or the arrow form) into tokens."""
    if not raw.strip():
        raise QuerySyntaxError("empty query")
    return tuple(parse_term(part) for part in _SEPARATOR.split(raw))
