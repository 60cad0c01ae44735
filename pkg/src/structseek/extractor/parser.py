"""Lexical extraction of per-method statement sequences from Java source.

This is deliberately not a Java grammar. It recognises enough structure
(type declarations, members, statements, control headers, call sites) to
emit, per method body, the ordered control-open / simple-control /
block-close / method-call tokens, with call receivers qualified by their
declared types.

Token placement rules:

* Every control block yields an open token and a close token; a braceless
  body gets a synthetic close after its single statement.
* The method body's closing brace yields one close token. Bare blocks,
  class bodies, array initializers and switch labels yield nothing.
* ``else if (..)`` is one ``else if{`` token. The trailing ``while`` of a
  do-while yields no control token.
* Calls inside a control header (``if (it.hasNext())``) are emitted before
  the header's open token.
* ``new T(..)`` emits nothing; an anonymous class body becomes its own set
  of methods and contributes nothing to the enclosing one.
* Block-bodied lambdas and switch expressions are skipped with a warning.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..tokens import BLOCK_CLOSE, StatementToken, control_open, method_call, simple_control
from .diagnostics import Diagnostic
from .lexer import (
    JAVA_KEYWORDS,
    MODIFIERS,
    PRIMITIVE_TYPES,
    Lex,
    is_identifier,
    match_brackets,
    tokenize,
    unbalanced_brace_line,
)
from .masking import strip_noise
from .model import FileExtraction, MethodStructure, SourceUnit, TypeEnvironment, resolve_receiver

_EOF = Lex("eof", "", -1, 0)
_TYPE_KEYWORDS = ("class", "interface", "enum")
_GENERIC_OK = frozenset(",.?&[]@")


@dataclass
class _Ctx:
    out: list[StatementToken]
    env: TypeEnvironment
    class_path: tuple[str, ...]


@dataclass
class _RawMethod:
    class_path: tuple[str, ...]
    anon: int | None  # token index of the anonymous body's "{"
    signature: str
    line_start: int
    line_end: int
    statements: list[StatementToken]


@dataclass
class _Member:
    kind: str  # "method", "field", "type", "init", "const"
    start: int
    line: int = 0
    name: str = ""
    return_type: str = ""
    params: list[tuple[str, str]] | None = None
    params_raw: str = ""
    body: int | None = None  # index of "{"
    type_text: str = ""
    declarators: list[tuple[str, str, int | None, int]] = field(default_factory=list)
    args: tuple[int, int] | None = None


def _param_binding(type_text: str) -> str:
    return type_text[:-3] + "[]" if type_text.endswith("...") else type_text


class _Parser:
    def __init__(self, path: str, masked: str, toks: list[Lex], diagnostics: list[Diagnostic]) -> None:
        self.path = path
        self.masked = masked
        self.toks = toks
        self.n = len(toks)
        self.match = match_brackets(toks)
        self.diagnostics = diagnostics
        self.classes = 0
        self.raw: list[_RawMethod] = []

    # ------------------------------------------------------------------
    # small helpers

    def tok(self, k: int) -> Lex:
        return self.toks[k] if 0 <= k < self.n else _EOF

    def text(self, k: int) -> str:
        return self.toks[k].text if 0 <= k < self.n else ""

    def warn(self, k: int, message: str) -> None:
        line = self.tok(k).line or (self.toks[-1].line if self.toks else 1)
        self.diagnostics.append(Diagnostic(self.path, line, message))

    def close_of(self, k: int, fallback: int) -> int:
        return self.match.get(k, fallback)

    def skip_annotation(self, k: int) -> int:
        k += 1
        if is_identifier(self.tok(k)):
            k += 1
            while self.text(k) == "." and self.tok(k + 1).kind == "id":
                k += 2
        if self.text(k) == "(":
            k = self.close_of(k, k) + 1
        return k

    def skip_modifiers(self, k: int) -> int:
        while True:
            t = self.text(k)
            if t == "@" and self.text(k + 1) != "interface":
                k = self.skip_annotation(k)
            elif t in MODIFIERS:
                k += 1
            elif t == "non" and self.text(k + 1) == "-" and self.text(k + 2) == "sealed":
                k += 3
            else:
                return k

    def is_type_decl(self, k: int) -> bool:
        t = self.text(k)
        if t in _TYPE_KEYWORDS:
            return True
        if t == "@" and self.text(k + 1) == "interface":
            return True
        return t == "record" and is_identifier(self.tok(k + 1)) and self.text(k + 2) in ("(", "<")

    def generic_end(self, k: int) -> int | None:
        """Index of the ">" closing the type-argument list opened at k."""
        depth = 0
        for j in range(k, min(self.n, k + 200)):
            t = self.toks[j]
            if t.text == "<":
                depth += 1
            elif t.text == ">":
                depth -= 1
                if depth == 0:
                    return j
            elif t.kind == "id" or t.text in _GENERIC_OK:
                continue
            else:
                return None
        return None

    def parse_type(self, k: int) -> tuple[str, int] | None:
        """Read a type at k; return (whitespace-free text, next index)."""
        while self.text(k) == "@":
            k = self.skip_annotation(k)
        t = self.tok(k)
        if t.kind != "id" or (t.text in JAVA_KEYWORDS and t.text not in PRIMITIVE_TYPES):
            return None
        parts = [t.text]
        k += 1
        while True:
            if self.text(k) == "<":
                g = self.generic_end(k)
                if g is None:
                    return None
                parts.extend(self.toks[j].text for j in range(k, g + 1))
                k = g + 1
            if self.text(k) == "." and is_identifier(self.tok(k + 1)):
                parts += [".", self.toks[k + 1].text]
                k += 2
                continue
            break
        while self.text(k) == "[" and self.text(k + 1) == "]":
            parts.append("[]")
            k += 2
        if self.text(k) == "...":
            parts.append("...")
            k += 1
        return "".join(parts), k

    def parse_params(self, open_: int, close: int) -> list[tuple[str, str]] | None:
        params: list[tuple[str, str]] = []
        k = open_ + 1
        while k < close:
            while self.text(k) == "final" or self.text(k) == "@":
                k = k + 1 if self.text(k) == "final" else self.skip_annotation(k)
            parsed = self.parse_type(k)
            if parsed is None:
                return None
            type_text, k = parsed
            name_tok = self.tok(k)
            if name_tok.kind != "id":
                return None
            k += 1
            while self.text(k) == "[" and self.text(k + 1) == "]":
                type_text += "[]"
                k += 2
            params.append((type_text, name_tok.text))
            if self.text(k) == ",":
                k += 1
            elif k != close:
                return None
        return params

    def raw_text(self, start: int, end: int) -> str:
        return " ".join(self.toks[j].text for j in range(start, end))

    # ------------------------------------------------------------------
    # declarations

    def compilation_unit(self) -> None:
        env = TypeEnvironment()
        k = 0
        while k < self.n:
            t = self.text(k)
            if t in ("package", "import"):
                while k < self.n and self.text(k) != ";":
                    k += 1
                k += 1
                continue
            j = self.skip_modifiers(k)
            if self.is_type_decl(j):
                k = self.type_decl(j, (), env)
            elif self.text(j) == "{":
                self.warn(j, "block outside any type declaration skipped")
                k = self.close_of(j, j) + 1
            else:
                k = max(j, k) + 1

    def type_decl(self, k: int, class_path: tuple[str, ...], env: TypeEnvironment) -> int:
        if self.text(k) == "@":
            k += 1
        kind = self.text(k)
        k += 1
        name = self.text(k) if self.tok(k).kind == "id" else "?"
        k += 1
        record_params: list[tuple[str, str]] | None = None
        while k < self.n:
            t = self.text(k)
            if t == "<":
                g = self.generic_end(k)
                k = k + 1 if g is None else g + 1
            elif t == "(":
                close = self.close_of(k, k)
                if kind == "record" and record_params is None:
                    record_params = self.parse_params(k, close) or []
                k = close + 1
            elif t == "{":
                break
            elif t in (";", "}"):
                self.warn(k, f"type declaration {name} has no body")
                return k + 1 if t == ";" else k
            else:
                k += 1
        if k >= self.n:
            return k
        self.classes += 1
        fields = {n: _param_binding(t) for t, n in record_params or []}
        self.class_body(k, class_path + (name,), None, env, kind == "enum", fields)
        return self.close_of(k, self.n - 1) + 1

    def scan_members(self, k: int, end: int, is_enum: bool) -> list[_Member]:
        members: list[_Member] = []
        if is_enum:
            while k < end:
                while self.text(k) == "@":
                    k = self.skip_annotation(k)
                if not is_identifier(self.tok(k)):
                    break
                const = _Member("const", k, line=self.toks[k].line, name=self.toks[k].text)
                k += 1
                if self.text(k) == "(":
                    close = self.close_of(k, k)
                    const.args = (k + 1, close)
                    k = close + 1
                if self.text(k) == "{":
                    const.body = k
                    k = self.close_of(k, k) + 1
                members.append(const)
                if self.text(k) == ",":
                    k += 1
                else:
                    break
            if self.text(k) == ";":
                k += 1
        while k < end:
            if self.text(k) == ";":
                k += 1
                continue
            while self.text(k) == "@" and self.text(k + 1) != "interface":
                k = self.skip_annotation(k)
            start = k
            k = self.skip_modifiers(k)
            if k >= end:
                break
            t = self.text(k)
            if t == "{":
                members.append(_Member("init", start, body=k))
                k = self.close_of(k, end) + 1
                continue
            if self.is_type_decl(k):
                members.append(_Member("type", k))
                k = self.skip_type_decl(k, end)
                continue
            if t == "<":
                g = self.generic_end(k)
                k = k + 1 if g is None else g + 1
            member, k = self.scan_member(start, k, end)
            if member is not None:
                members.append(member)
        return members

    def skip_type_decl(self, k: int, end: int) -> int:
        while k < end and self.text(k) != "{":
            if self.text(k) == ";":
                return k + 1
            k = self.close_of(k, k) + 1 if self.text(k) == "(" else k + 1
        return self.close_of(k, end) + 1

    def scan_member(self, start: int, k: int, end: int) -> tuple[_Member | None, int]:
        line = self.toks[start].line
        tok = self.tok(k)
        if is_identifier(tok) and self.text(k + 1) in ("(", "{"):
            # constructor (or a record's compact constructor)
            return self.method_header(_Member("method", start, line=line, name=tok.text), k + 1, end)
        parsed = self.parse_type(k)
        if parsed is not None:
            type_text, j = parsed
            if is_identifier(self.tok(j)):
                if self.text(j + 1) == "(":
                    member = _Member("method", start, line=line, name=self.toks[j].text, return_type=type_text)
                    return self.method_header(member, j + 1, end)
                return self.field_decl(_Member("field", start, line=line, type_text=type_text), j, end)
        self.warn(k, "unrecognized class member skipped")
        while k < end and self.text(k) not in (";", "{"):
            k = self.close_of(k, k) + 1 if self.text(k) in ("(", "[") else k + 1
        if self.text(k) == "{":
            k = self.close_of(k, end)
        return None, k + 1

    def method_header(self, member: _Member, k: int, end: int) -> tuple[_Member, int]:
        if self.text(k) == "(":
            close = self.close_of(k, k)
            member.params = self.parse_params(k, close)
            if member.params is None:
                self.warn(k, f"could not parse parameters of {member.name}")
                member.params_raw = self.raw_text(k + 1, close)
            k = close + 1
        else:
            member.params = []
        while self.text(k) == "[" and self.text(k + 1) == "]":
            member.return_type += "[]"
            k += 2
        while k < end and self.text(k) not in ("{", ";"):
            if self.text(k) == "default":
                k = self.expr(k + 1, end, (";",), None)
                break
            k += 1
        if self.text(k) == "{":
            member.body = k
            return member, self.close_of(k, end) + 1
        return member, k + 1

    def field_decl(self, member: _Member, k: int, end: int) -> tuple[_Member, int]:
        while k < end:
            name = self.text(k)
            k += 1
            dims = ""
            while self.text(k) == "[" and self.text(k + 1) == "]":
                dims += "[]"
                k += 2
            init = None
            if self.text(k) == "=":
                init = k + 1
                k = self.expr(k + 1, end, (",", ";"), None)
            member.declarators.append((name, dims, init, k))
            if self.text(k) == "," and is_identifier(self.tok(k + 1)):
                k += 1
                continue
            break
        while k < end and self.text(k) != ";":
            k += 1
        return member, k + 1

    def class_body(
        self,
        open_: int,
        class_path: tuple[str, ...],
        anon: int | None,
        outer_env: TypeEnvironment,
        is_enum: bool = False,
        fields: dict[str, str] | None = None,
    ) -> None:
        close = self.close_of(open_, self.n)
        members = self.scan_members(open_ + 1, close, is_enum)
        env = outer_env.fork()
        scope = dict(fields or {})
        env.push(scope)
        for m in members:
            if m.kind == "field":
                for name, dims, _, _ in m.declarators:
                    if m.type_text != "var":
                        scope[name] = m.type_text + dims
        for m in members:
            if m.kind == "method" and m.body is not None:
                self.method_body(m, class_path, anon, env)
            elif m.kind == "field":
                ctx = _Ctx([], env, class_path)
                for _, _, init, stop in m.declarators:
                    if init is not None:
                        self.expr(init, stop, (), ctx)
            elif m.kind == "init":
                ctx = _Ctx([], env.fork(), class_path)
                ctx.env.push()
                self.block_statements(m.body + 1, self.close_of(m.body, close), ctx)
            elif m.kind == "type":
                self.type_decl(m.start, class_path, env)
            elif m.kind == "const":
                ctx = _Ctx([], env, class_path)
                if m.args:
                    self.expr(m.args[0], m.args[1], (), ctx)
                if m.body is not None:
                    self.anon_body(m.body, ctx)

    def method_body(self, m: _Member, class_path: tuple[str, ...], anon: int | None, env: TypeEnvironment) -> None:
        close = self.close_of(m.body, self.n - 1)
        menv = env.fork()
        menv.push({n: _param_binding(t) for t, n in m.params or []})
        ctx = _Ctx([], menv, class_path)
        self.block_statements(m.body + 1, close, ctx)
        ctx.out.append(BLOCK_CLOSE)
        if m.params is not None:
            params = ", ".join(f"{t} {n}" for t, n in m.params)
        else:
            params = m.params_raw
        head = f"{m.return_type} {m.name}" if m.return_type else m.name
        self.raw.append(
            _RawMethod(class_path, anon, f"{head}({params})", m.line, self.tok(close).line, ctx.out)
        )

    def anon_body(self, brace: int, ctx: _Ctx) -> None:
        self.class_body(brace, ctx.class_path, brace, ctx.env)

    # ------------------------------------------------------------------
    # statements

    def block_statements(self, k: int, close: int, ctx: _Ctx) -> None:
        while k < close:
            nxt = self.statement(k, close, ctx)
            k = nxt if nxt > k else k + 1

    def control_body(self, k: int, end: int, ctx: _Ctx) -> int:
        ctx.env.push()
        if self.text(k) == "{" and k < end:
            close = self.close_of(k, end)
            self.block_statements(k + 1, close, ctx)
            k = close + 1
        elif k < end:
            k = self.statement(k, end, ctx)
        else:
            self.warn(k, "control statement without body")
        ctx.env.pop()
        ctx.out.append(BLOCK_CLOSE)
        return k

    def header(self, k: int, end: int, ctx: _Ctx) -> int:
        """Scan a parenthesized control header for calls; return index past it."""
        if self.text(k) != "(" or k >= end:
            self.warn(k, "control statement without parenthesized header")
            return k
        close = self.close_of(k, end)
        self.expr(k + 1, close, (), ctx)
        return close + 1

    def statement(self, k: int, end: int, ctx: _Ctx) -> int:
        tok = self.toks[k]
        t = tok.text
        if tok.kind == "op":
            if t == "{":
                close = self.close_of(k, end)
                ctx.env.push()
                self.block_statements(k + 1, close, ctx)
                ctx.env.pop()
                return close + 1
            if t == ";":
                return k + 1
            if t == "}":
                return k + 1
        elif tok.kind == "id":
            handler = self._STATEMENTS.get(t)
            if handler is not None and not (t == "synchronized" and self.text(k + 1) != "("):
                return handler(self, k, end, ctx)
            if is_identifier(tok) and self.text(k + 1) == ":":
                return k + 2  # label
            j = self.skip_modifiers(k)
            if self.is_type_decl(j):
                return self.type_decl(j, ctx.class_path, ctx.env)
        stop = self.local_decl(k, end, ctx)
        if stop is None:
            stop = self.expr(k, end, (";",), ctx)
        return stop + 1 if self.text(stop) == ";" and stop < end else max(stop, k + 1)

    def st_if(self, k: int, end: int, ctx: _Ctx, keyword: str = "if") -> int:
        k = self.header(k + 1, end, ctx)
        ctx.out.append(control_open(keyword))
        k = self.control_body(k, end, ctx)
        if k < end and self.text(k) == "else":
            if self.text(k + 1) == "if":
                return self.st_if(k + 1, end, ctx, "else if")
            ctx.out.append(control_open("else"))
            return self.control_body(k + 1, end, ctx)
        return k

    def st_while(self, k: int, end: int, ctx: _Ctx) -> int:
        k = self.header(k + 1, end, ctx)
        ctx.out.append(control_open("while"))
        return self.control_body(k, end, ctx)

    def st_synchronized(self, k: int, end: int, ctx: _Ctx) -> int:
        k = self.header(k + 1, end, ctx)
        ctx.out.append(control_open("synchronized"))
        return self.control_body(k, end, ctx)

    def st_do(self, k: int, end: int, ctx: _Ctx) -> int:
        ctx.out.append(control_open("do"))
        k = self.control_body(k + 1, end, ctx)
        if self.text(k) == "while" and k < end:
            k = self.header(k + 1, end, ctx)
            if self.text(k) == ";":
                k += 1
        return k

    def st_for(self, k: int, end: int, ctx: _Ctx) -> int:
        open_ = k + 1
        if self.text(open_) != "(":
            return self.st_while(k, end, ctx)
        close = self.close_of(open_, end)
        ctx.env.push()
        semis = [j for j in self.top_level(open_ + 1, close) if self.text(j) == ";"]
        if semis:
            bounds = [open_ + 1, *(s + 1 for s in semis)]
            stops = [*semis, close]
            init_stop = self.local_decl(bounds[0], stops[0], ctx)
            if init_stop is None:
                self.expr(bounds[0], stops[0], (), ctx)
            for b, s in zip(bounds[1:], stops[1:]):
                self.expr(b, s, (), ctx)
        else:
            colon = next((j for j in self.top_level(open_ + 1, close) if self.text(j) == ":"), None)
            if colon is not None:
                j = open_ + 1
                while self.text(j) in ("final", "@"):
                    j = j + 1 if self.text(j) == "final" else self.skip_annotation(j)
                parsed = self.parse_type(j)
                if parsed is not None and self.tok(parsed[1]).kind == "id":
                    ctx.env.bind(self.toks[parsed[1]].text, parsed[0])
                self.expr(colon + 1, close, (), ctx)
            else:
                self.expr(open_ + 1, close, (), ctx)
        ctx.out.append(control_open("for"))
        k = self.control_body(close + 1, end, ctx)
        ctx.env.pop()
        return k

    def top_level(self, k: int, end: int):
        """Indices in [k, end) not nested inside any bracket pair."""
        while k < end:
            yield k
            if self.text(k) in ("(", "[", "{"):
                k = self.close_of(k, k) + 1
            else:
                k += 1

    def st_switch(self, k: int, end: int, ctx: _Ctx) -> int:
        k = self.header(k + 1, end, ctx)
        ctx.out.append(control_open("switch"))
        if self.text(k) != "{" or k >= end:
            self.warn(k, "switch without body")
            ctx.out.append(BLOCK_CLOSE)
            return k
        close = self.close_of(k, end)
        ctx.env.push()
        j = k + 1
        while j < close:
            t = self.text(j)
            if t == "case" or (t == "default" and self.text(j + 1) in (":", "->")):
                j += 1
                while j < close and self.text(j) not in (":", "->"):
                    j = self.close_of(j, j) + 1 if self.text(j) in ("(", "[", "{") else j + 1
                if self.text(j) == "->":
                    j = self.statement(j + 1, close, ctx) if j + 1 < close else j + 1
                else:
                    j += 1
                continue
            nxt = self.statement(j, close, ctx)
            j = nxt if nxt > j else j + 1
        ctx.env.pop()
        ctx.out.append(BLOCK_CLOSE)
        return close + 1

    def st_try(self, k: int, end: int, ctx: _Ctx) -> int:
        ctx.env.push()
        k += 1
        if self.text(k) == "(":
            close = self.close_of(k, end)
            j = k + 1
            while j < close:
                semi = next((s for s in self.top_level(j, close) if self.text(s) == ";"), close)
                if self.local_decl(j, semi, ctx) is None:
                    self.expr(j, semi, (), ctx)
                j = semi + 1
            k = close + 1
        ctx.out.append(control_open("try"))
        k = self.control_body(k, end, ctx)
        while k < end and self.text(k) == "catch":
            ctx.env.push()
            if self.text(k + 1) == "(":
                close = self.close_of(k + 1, end)
                self.catch_param(k + 2, close, ctx)
                k = close + 1
            else:
                k += 1
            ctx.out.append(control_open("catch"))
            k = self.control_body(k, end, ctx)
            ctx.env.pop()
        if k < end and self.text(k) == "finally":
            ctx.out.append(control_open("finally"))
            k = self.control_body(k + 1, end, ctx)
        ctx.env.pop()
        return k

    def catch_param(self, k: int, close: int, ctx: _Ctx) -> None:
        while self.text(k) in ("final", "@"):
            k = k + 1 if self.text(k) == "final" else self.skip_annotation(k)
        types = []
        while k < close:
            parsed = self.parse_type(k)
            if parsed is None:
                return
            types.append(parsed[0])
            k = parsed[1]
            if self.text(k) == "|":
                k += 1
                continue
            break
        if is_identifier(self.tok(k)):
            ctx.env.bind(self.toks[k].text, "|".join(types))

    def st_jump(self, k: int, end: int, ctx: _Ctx) -> int:
        ctx.out.append(simple_control(self.toks[k].text))
        stop = self.expr(k + 1, end, (";",), ctx)
        return stop + 1 if self.text(stop) == ";" and stop < end else stop

    def st_stray(self, k: int, end: int, ctx: _Ctx) -> int:
        t = self.toks[k].text
        if t == "else":
            self.warn(k, "else without matching if")
            return k + 1
        if t in ("case", "default"):
            # label outside a recognised switch body
            j = k + 1
            while j < end and self.text(j) not in (":", "->", ";"):
                j += 1
            return j + 1
        return k + 1

    _STATEMENTS = {
        "if": st_if,
        "while": st_while,
        "do": st_do,
        "for": st_for,
        "switch": st_switch,
        "try": st_try,
        "synchronized": st_synchronized,
        "return": st_jump,
        "throw": st_jump,
        "break": st_jump,
        "continue": st_jump,
        "else": st_stray,
        "case": st_stray,
    }

    def local_decl(self, k: int, end: int, ctx: _Ctx) -> int | None:
        """Parse ``[final] Type a [= e], b ...`` at k; bind the names.

        Returns the index of the terminating token, or None when k does not
        start a declaration.
        """
        while self.text(k) in ("final", "@"):
            k = k + 1 if self.text(k) == "final" else self.skip_annotation(k)
        parsed = self.parse_type(k)
        if parsed is None:
            return None
        type_text, k = parsed
        if not (is_identifier(self.tok(k)) and self.text(k + 1) in ("=", ";", ",", "[", ":", ")")) and not (
            k + 1 == end and is_identifier(self.tok(k))
        ):
            return None
        while k < end:
            name = self.toks[k].text
            k += 1
            dims = ""
            while self.text(k) == "[" and self.text(k + 1) == "]":
                dims += "[]"
                k += 2
            if type_text != "var":
                ctx.env.bind(name, type_text + dims)
            if self.text(k) == "=" and k < end:
                if type_text == "var" and self.text(k + 1) == "new":
                    inferred = self.parse_type(k + 2)
                    if inferred is not None:
                        ctx.env.bind(name, inferred[0])
                k = self.expr(k + 1, end, (",", ";"), ctx)
            if self.text(k) == "," and k < end and is_identifier(self.tok(k + 1)):
                k += 1
                continue
            break
        return k

    # ------------------------------------------------------------------
    # expressions

    def expr(self, k: int, end: int, stops: tuple[str, ...], ctx: _Ctx | None) -> int:
        """Walk an expression, emitting calls into ``ctx`` (None: skip only).

        Returns the index of the first top-level stop token, of an unmatched
        "}", or ``end``.
        """
        toks = self.toks
        while k < end:
            tok = toks[k]
            t = tok.text
            if tok.kind == "op":
                if t in stops:
                    return k
                if t == "(" or t == "[":
                    close = self.match.get(k)
                    if close is None or close > end:
                        k += 1
                        continue
                    self.expr(k + 1, close, (), ctx)
                    k = close + 1
                    continue
                if t == "{":
                    close = self.match.get(k)
                    if close is None or close > end:
                        return k
                    if self.text(k - 1) == "->":
                        if ctx is not None:
                            self.warn(k, "lambda body skipped")
                    else:
                        self.expr(k + 1, close, (), ctx)
                    k = close + 1
                    continue
                if t == "}":
                    return k
                k += 1
                continue
            if tok.kind == "id":
                if t == "new":
                    k = self.new_expr(k, end, ctx)
                    continue
                if t == "switch" and self.text(k + 1) == "(":
                    j = self.close_of(k + 1, k + 1) + 1
                    if self.text(j) == "{" and j < end:
                        if ctx is not None:
                            self.warn(k, "switch expression skipped")
                        j = self.close_of(j, end) + 1
                    k = j
                    continue
                if ctx is not None and self.text(k + 1) == "(" and is_identifier(tok):
                    ctx.out.append(method_call(self.call_name(k, ctx.env)))
            k += 1
        return k

    def new_expr(self, k: int, end: int, ctx: _Ctx | None) -> int:
        j = k + 1
        while self.text(j) == "@":
            j = self.skip_annotation(j)
        while j < end and self.tok(j).kind == "id":
            j += 1
            if self.text(j) == "<":
                g = self.generic_end(j)
                j = j + 1 if g is None else g + 1
            if self.text(j) == "." and j < end:
                j += 1
                continue
            break
        if self.text(j) == "(" and j < end:
            close = self.close_of(j, end)
            self.expr(j + 1, close, (), ctx)
            j = close + 1
            if self.text(j) == "{" and j < end:
                if ctx is not None:
                    self.anon_body(j, ctx)
                j = self.close_of(j, end) + 1
            return j
        while self.text(j) == "[" and j < end:
            close = self.close_of(j, end)
            self.expr(j + 1, close, (), ctx)
            j = close + 1
        if self.text(j) == "{" and j < end:
            close = self.close_of(j, end)
            self.expr(j + 1, close, (), ctx)
            j = close + 1
        return max(j, k + 1)

    def call_name(self, k: int, env: TypeEnvironment) -> str:
        name = self.toks[k].text
        p = k - 1
        if self.text(p) == ">":
            p = self.explicit_type_args_dot(p)
            if p is None:
                return name
        if self.text(p) != ".":
            return name
        recv = self.tok(p - 1)
        if not is_identifier(recv):
            return name  # this/super, call result, parenthesized, literal
        if self.text(p - 2) == ".":
            if self.text(p - 3) == "this" and self.text(p - 4) != ".":
                return f"{resolve_receiver(recv.text, env)}.{name}"
            return name
        return f"{resolve_receiver(recv.text, env)}.{name}"

    def explicit_type_args_dot(self, p: int) -> int | None:
        """For ``recv.<T>name(``, given the index of ">", return the "." index."""
        depth = 0
        j = p
        while j >= 0:
            t = self.toks[j]
            if t.text == ">":
                depth += 1
            elif t.text == "<":
                depth -= 1
                if depth == 0:
                    return j - 1 if self.text(j - 1) == "." else None
            elif not (t.kind == "id" or t.text in _GENERIC_OK):
                return None
            j -= 1
        return None


def _code_line_flags(masked: str) -> list[bool]:
    return [bool(line.strip()) for line in masked.split("\n")]


def extract_file(unit: SourceUnit) -> FileExtraction:
    """Extract every method of one file, with diagnostics and class count."""
    result = FileExtraction(unit.path)
    diagnostics: list[Diagnostic] = []
    result.diagnostics = diagnostics
    masked = strip_noise(unit.text, diagnostics, unit.path)
    toks = tokenize(masked)
    bad_line = unbalanced_brace_line(toks)
    if bad_line is not None:
        diagnostics.append(Diagnostic(unit.path, bad_line, "unbalanced braces; file rejected"))
        result.rejected = True
        return result
    parser = _Parser(unit.path, masked, toks, diagnostics)
    try:
        parser.compilation_unit()
    except (IndexError, KeyError, RecursionError) as exc:
        diagnostics.append(Diagnostic(unit.path, 1, f"parse failure ({type(exc).__name__}); file rejected"))
        result.rejected = True
        return result
    flags = _code_line_flags(strip_noise(unit.text, keep_literals=True))
    anon_index = {brace: i for i, brace in enumerate(sorted({m.anon for m in parser.raw if m.anon is not None}), 1)}
    methods = []
    for raw in parser.raw:
        owner = ".".join(raw.class_path)
        if raw.anon is None:
            method_id = f"{owner}::{raw.signature}"
        else:
            method_id = f"{owner}:Anon${anon_index[raw.anon]}:{raw.signature}"
        code_lines = sum(flags[raw.line_start - 1 : raw.line_end])
        methods.append(
            MethodStructure(method_id, unit.path, raw.line_start, raw.line_end, tuple(raw.statements), code_lines)
        )
    methods.sort(key=lambda m: (m.file, m.line_start))
    result.methods = methods
    result.classes = parser.classes
    return result


def extract_methods(unit: SourceUnit) -> list[MethodStructure]:
    return extract_file(unit).methods
