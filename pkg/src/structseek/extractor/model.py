from __future__ import annotations

from dataclasses import dataclass, field

from ..tokens import StatementToken, TokenKind


@dataclass(frozen=True)
class SourceUnit:
    path: str
    text: str


@dataclass(frozen=True)
class MethodStructure:
    """One method: its identity and ordered statement tokens."""

    method_id: str
    file: str
    line_start: int
    line_end: int
    statements: tuple[StatementToken, ...]
    code_lines: int

    @property
    def terms(self) -> tuple[str, ...]:
        """Canonical token texts, the form every similarity model consumes."""
        return tuple(t.canonical_text for t in self.statements)

    def count(self, kind: TokenKind) -> int:
        return sum(1 for t in self.statements if t.kind is kind)


class TypeEnvironment:
    """Scoped identifier → declared type map; innermost binding wins."""

    def __init__(self, scopes: list[dict[str, str]] | None = None) -> None:
        self.scopes: list[dict[str, str]] = scopes if scopes is not None else [{}]

    def push(self, scope: dict[str, str] | None = None) -> None:
        self.scopes.append(scope if scope is not None else {})

    def pop(self) -> None:
        self.scopes.pop()

    def bind(self, name: str, type_text: str) -> None:
        self.scopes[-1][name] = type_text

    def lookup(self, name: str) -> str | None:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def fork(self) -> TypeEnvironment:
        """Snapshot the chain for a nested class body.

        Scope dicts are shared, not copied: later bindings in an enclosing
        scope are visible, matching how the enclosing method continues.
        """
        return TypeEnvironment(list(self.scopes))


def resolve_receiver(receiver: str, env: TypeEnvironment) -> str:
    """Qualifier text for a call on ``receiver``: its declared type if bound,
    else the identifier itself (static class references, unknown names)."""
    bound = env.lookup(receiver)
    return receiver if bound is None else bound


@dataclass
class FileMetrics:
    files: int = 0
    classes: int = 0
    methods: int = 0
    lines_of_code: int = 0
    comment_lines: int = 0
    total_lines: int = 0

    def __add__(self, other: FileMetrics) -> FileMetrics:
        return FileMetrics(
            self.files + other.files,
            self.classes + other.classes,
            self.methods + other.methods,
            self.lines_of_code + other.lines_of_code,
            self.comment_lines + other.comment_lines,
            self.total_lines + other.total_lines,
        )

    @property
    def blank_lines(self) -> int:
        return self.total_lines - self.lines_of_code - self.comment_lines


@dataclass
class FileExtraction:
    """Everything one pass over a file yields."""

    path: str
    methods: list[MethodStructure] = field(default_factory=list)
    classes: int = 0
    diagnostics: list = field(default_factory=list)
    rejected: bool = False
