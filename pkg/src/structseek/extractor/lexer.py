"""Split masked Java text into lexical tokens.

The input is expected to come from :func:`strip_noise`, so literals are
already reduced to quote pairs around blanks and comments are gone.
"""

from __future__ import annotations

import re
from typing import NamedTuple

JAVA_KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
    true false null
    """.split()
)

PRIMITIVE_TYPES = frozenset("boolean byte char short int long float double void".split())

MODIFIERS = frozenset(
    """
    public protected private static final abstract native synchronized
    transient volatile strictfp default sealed
    """.split()
)


class Lex(NamedTuple):
    kind: str  # "id", "num", "str", "chr", "op"
    text: str
    pos: int
    line: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<id>[A-Za-z_$\u0080-\uffff][\w$\u0080-\uffff]*)
  | (?P<num>\d[\w.]*|\.\d\w*)
  | (?P<str>\"\"\"[\s\S]*?\"\"\"|"[^"\n]*"?)
  | (?P<chr>'[^'\n]*'?)
  | (?P<op>->|::|\.\.\.|==|!=|<=|>=|&&|\|\||\+\+|--|[-+*/%&|^]=|.)
    """,
    re.VERBOSE,
)


def tokenize(masked: str) -> list[Lex]:
    toks: list[Lex] = []
    line = 1
    last = 0
    for m in _TOKEN.finditer(masked):
        kind = m.lastgroup
        if kind == "ws":
            continue
        start = m.start()
        line += masked.count("\n", last, start)
        last = start
        toks.append(Lex(kind, m.group(), start, line))
    return toks


def is_identifier(tok: Lex) -> bool:
    return tok.kind == "id" and tok.text not in JAVA_KEYWORDS


def match_brackets(toks: list[Lex]) -> dict[int, int]:
    """Map each bracket token index to its partner (both directions).

    Mismatched closers are dropped; openers left on the stack when a closer
    of another kind arrives are skipped, so braces still pair up around a
    stray parenthesis.
    """
    pairs = {")": "(", "]": "[", "}": "{"}
    match: dict[int, int] = {}
    stack: list[tuple[str, int]] = []
    for idx, tok in enumerate(toks):
        t = tok.text
        if tok.kind != "op":
            continue
        if t in "([{":
            stack.append((t, idx))
        elif t in pairs:
            want = pairs[t]
            for depth in range(len(stack) - 1, -1, -1):
                if stack[depth][0] == want:
                    opener = stack[depth][1]
                    del stack[depth:]
                    match[opener] = idx
                    match[idx] = opener
                    break
    return match


def unbalanced_brace_line(toks: list[Lex]) -> int | None:
    """Line of the first unmatched brace, or None when braces balance."""
    stack: list[Lex] = []
    for tok in toks:
        if tok.kind != "op":
            continue
        if tok.text == "{":
            stack.append(tok)
        elif tok.text == "}":
            if not stack:
                return tok.line
            stack.pop()
    return stack[0].line if stack else None
