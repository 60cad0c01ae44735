"""Blank out comments and literal interiors before any tokenization."""

from __future__ import annotations

import re

from .diagnostics import Diagnostic

_INTERESTING = re.compile(r'["\'/]')


def _blank(chunk: str) -> str:
    # newlines stay put so line numbers survive masking
    return re.sub(r"[^\n]", " ", chunk)


def strip_noise(
    text: str,
    diagnostics: list[Diagnostic] | None = None,
    path: str = "",
    keep_literals: bool = False,
) -> str:
    """Replace comments and string/char literal interiors with spaces.

    Quote characters of literals are kept, so ``s = "if{";`` becomes
    ``s = "   ";``. The result has the same length as ``text`` and every
    newline at its original offset. Unterminated constructs are masked to
    the end of the file (block comments, text blocks) or of the line
    (ordinary literals) and a warning is appended to ``diagnostics``.
    With ``keep_literals`` only comments are blanked.
    """
    lit = (lambda chunk: chunk) if keep_literals else _blank
    out: list[str] = []
    i = 0
    n = len(text)

    def warn(offset: int, message: str) -> None:
        if diagnostics is not None:
            diagnostics.append(Diagnostic(path, text.count("\n", 0, offset) + 1, message))

    while i < n:
        m = _INTERESTING.search(text, i)
        if m is None:
            out.append(text[i:])
            break
        j = m.start()
        out.append(text[i:j])
        ch = text[j]
        if ch == "/":
            nxt = text[j + 1 : j + 2]
            if nxt == "/":
                end = text.find("\n", j)
                end = n if end < 0 else end
                out.append(_blank(text[j:end]))
                i = end
            elif nxt == "*":
                end = text.find("*/", j + 2)
                if end < 0:
                    warn(j, "unterminated block comment")
                    out.append(_blank(text[j:]))
                    i = n
                else:
                    out.append(_blank(text[j : end + 2]))
                    i = end + 2
            else:
                out.append(ch)
                i = j + 1
        elif text.startswith('"""', j):
            end = text.find('"""', j + 3)
            while end >= 0 and _escaped(text, end):
                end = text.find('"""', end + 1)
            if end < 0:
                warn(j, "unterminated text block")
                out.append('"""' + lit(text[j + 3 :]))
                i = n
            else:
                out.append('"""' + lit(text[j + 3 : end]) + '"""')
                i = end + 3
        else:
            end = _literal_end(text, j + 1, ch)
            if end is None:
                stop = text.find("\n", j)
                stop = n if stop < 0 else stop
                warn(j, "unterminated literal")
                out.append(ch + lit(text[j + 1 : stop]))
                i = stop
            else:
                out.append(ch + lit(text[j + 1 : end]) + ch)
                i = end + 1
    masked = "".join(out)
    assert len(masked) == n
    return masked


def _escaped(text: str, pos: int) -> bool:
    k = pos - 1
    backslashes = 0
    while k >= 0 and text[k] == "\\":
        backslashes += 1
        k -= 1
    return backslashes % 2 == 1


def _literal_end(text: str, start: int, quote: str) -> int | None:
    i = start
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\\":
            i += 2
            continue
        if c == quote:
            return i
        if c == "\n":
            return None
        i += 1
    return None
