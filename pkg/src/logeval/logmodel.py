"""Canonical log-statement model: levels, logger-call parsing, template split.

A log statement is a logger API call such as

    log.info("The server run on the ports, {}", args.status ? localPort : remotePort);

decomposed into a verbosity level, the static message template, and the
ordered dynamic expressions. Parsing is lexical: it recognizes, delimits,
and decomposes logger calls without a full grammar for the host language,
which keeps it usable on Java-style and Python-style sources alike.
"""

from __future__ import annotations

import enum
import functools
import re
from bisect import bisect_right
from dataclasses import dataclass, field, replace


class LogModelError(ValueError):
    """Base class for log-statement parsing failures."""


class UnknownLevel(LogModelError):
    """A level name outside trace/debug/info/warn/error/fatal."""


class NotALogStatement(LogModelError):
    """The text is not a recognized logger call."""


class UnbalancedDelimiters(LogModelError):
    """A string, comment, or bracket never closes."""


class LogLevel(enum.IntEnum):
    """Verbosity levels with their fixed ordinal severity ranks."""

    TRACE = 0
    DEBUG = 1
    INFO = 2
    WARN = 3
    ERROR = 4
    FATAL = 5

    @classmethod
    def parse(cls, name: str) -> "LogLevel":
        """Case-insensitive level lookup; anything else is rejected."""
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise UnknownLevel(f"unknown log level: {name!r}") from None

    @property
    def label(self) -> str:
        return self.name.lower()


def level_distance(predicted: LogLevel, oracle: LogLevel) -> int:
    """Absolute ordinal distance between two levels (0..5)."""
    return abs(int(predicted) - int(oracle))


_IDENT = r"[A-Za-z_$][A-Za-z0-9_$]*"
_WORD_RE = re.compile(r"[A-Za-z0-9_]+")


def code_tokens(text: str) -> list[str]:
    """Deterministic word splitter: identifier/number words, punctuation dropped.

    Used for source-unit token counts (the 512-token length split) and for
    contamination n-grams. Deliberately model-agnostic; callers may plug in
    a different splitter where a function is accepted.
    """
    return _WORD_RE.findall(text)


def normalize_ws(text: str) -> str:
    """Collapse all whitespace runs to single spaces and strip the ends."""
    return " ".join(text.split())


@dataclass(frozen=True)
class LoggerCallSpec:
    """Which calls count as log statements.

    ``receiver_pattern`` is matched against the final segment of the receiver
    chain (``this.log`` matches via ``log``); ``methods`` must be level names.
    """

    receiver_pattern: str = r"log|LOG|logger|Logger|LOGGER"
    methods: tuple[str, ...] = ("trace", "debug", "info", "warn", "error", "fatal")


DEFAULT_CALL_SPEC = LoggerCallSpec()


@functools.lru_cache(maxsize=16)
def _head_regex(spec: LoggerCallSpec) -> re.Pattern:
    methods = "|".join(re.escape(m) for m in spec.methods)
    return re.compile(
        rf"((?:{_IDENT}\s*\.\s*)*)({spec.receiver_pattern})\s*\.\s*({methods})\s*\("
    )


@dataclass(frozen=True)
class LogStatement:
    """A parsed logger call.

    ``static_text`` is the message template with one ``{}`` placeholder per
    dynamic fragment; ``dynamic_exprs`` keeps argument order, each expression
    a maximal unit (a ternary or arithmetic composite is never split).
    ``span`` is (start_line, end_line), 1-based within the source unit.
    """

    raw_text: str
    level: LogLevel
    static_text: str
    dynamic_exprs: tuple[str, ...]
    receiver: str
    span: tuple[int, int] = (1, 1)

    def render(self) -> str:
        """Canonical single-line form; reparses to the same decomposition."""
        args = [f'"{self.static_text}"', *self.dynamic_exprs]
        return f"{self.receiver}.{self.level.label}({', '.join(args)});"


@dataclass(frozen=True)
class SourceUnit:
    """One evaluation unit of source code (a file, in this harness).

    ``lines`` round-trip to the original content after newline normalization
    (CRLF and CR become LF): joining with "\\n" reproduces it byte-for-byte.
    """

    id: str
    lines: tuple[str, ...]
    token_count: int

    @classmethod
    def from_text(cls, unit_id: str, text: str) -> "SourceUnit":
        normalized = text.replace("\r\n", "\n").replace("\r", "\n")
        return cls(
            id=unit_id,
            lines=tuple(normalized.split("\n")),
            token_count=len(code_tokens(normalized)),
        )

    @property
    def text(self) -> str:
        return "\n".join(self.lines)


@dataclass(frozen=True)
class RawLogMatch:
    """A delimited logger call inside a larger text, before decomposition."""

    text: str
    start_offset: int
    end_offset: int
    start_line: int
    end_line: int


def _skip_string(text: str, i: int) -> int:
    """``text[i]`` is a quote; return the index just past the literal."""
    quote = text[i]
    if text[i : i + 3] == quote * 3:
        end = text.find(quote * 3, i + 3)
        if end == -1:
            raise UnbalancedDelimiters("unterminated triple-quoted string")
        return end + 3
    j = i + 1
    n = len(text)
    while j < n:
        ch = text[j]
        if ch == "\\":
            j += 2
            continue
        if ch == quote:
            return j + 1
        if ch == "\n":
            break
        j += 1
    raise UnbalancedDelimiters("unterminated string literal")


def _skip_comment(text: str, i: int) -> int | None:
    """Return the index past a comment starting at ``i``, or None."""
    if text.startswith("//", i) or text.startswith("#", i):
        nl = text.find("\n", i)
        return len(text) if nl == -1 else nl
    if text.startswith("/*", i):
        end = text.find("*/", i + 2)
        if end == -1:
            raise UnbalancedDelimiters("unterminated block comment")
        return end + 2
    return None


_OPEN = {"(": ")", "[": "]", "{": "}"}
_CLOSE = {")", "]", "}"}


def _scan_balanced(text: str, open_idx: int) -> int:
    """``text[open_idx]`` is '('; return the index of its matching ')'."""
    stack: list[str] = []
    i = open_idx
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in "\"'":
            i = _skip_string(text, i)
            continue
        past = _skip_comment(text, i)
        if past is not None:
            i = past
            continue
        if ch in _OPEN:
            stack.append(_OPEN[ch])
            i += 1
            continue
        if ch in _CLOSE:
            if not stack or stack[-1] != ch:
                raise UnbalancedDelimiters(f"mismatched {ch!r} at offset {i}")
            stack.pop()
            if not stack:
                return i
            i += 1
            continue
        i += 1
    raise UnbalancedDelimiters("unterminated call")


def _split_top_level(text: str, seps: tuple[str, ...]) -> list[str]:
    """Split at separators that sit outside strings, comments, and brackets."""
    parts: list[str] = []
    stack: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in "\"'":
            i = _skip_string(text, i)
            continue
        past = _skip_comment(text, i)
        if past is not None:
            i = past
            continue
        if ch in _OPEN:
            stack.append(_OPEN[ch])
        elif ch in _CLOSE:
            if not stack or stack[-1] != ch:
                raise UnbalancedDelimiters(f"mismatched {ch!r} at offset {i}")
            stack.pop()
        elif not stack and ch in seps:
            parts.append(text[start:i])
            start = i + 1
        i += 1
    parts.append(text[start:])
    return parts


def _string_literal_content(fragment: str) -> str | None:
    """The inner text if ``fragment`` is exactly one string literal, else None."""
    fragment = fragment.strip()
    if not fragment or fragment[0] not in "\"'":
        return None
    try:
        end = _skip_string(fragment, 0)
    except UnbalancedDelimiters:
        return None
    if end != len(fragment):
        return None
    if fragment[:3] in ('"""', "'''"):
        return fragment[3:-3]
    return fragment[1:-1]


def _decompose_message(arg: str) -> tuple[str, list[str]]:
    """Split a message argument into template text and inline dynamics.

    String-literal fragments of a ``+`` concatenation become template text;
    every other fragment becomes a ``{}`` placeholder plus one dynamic
    expression, in textual order.
    """
    static_parts: list[str] = []
    dynamics: list[str] = []
    for fragment in _split_top_level(arg, seps=("+",)):
        fragment = fragment.strip()
        if not fragment:
            continue
        literal = _string_literal_content(fragment)
        if literal is not None:
            static_parts.append(literal)
        else:
            static_parts.append("{}")
            dynamics.append(normalize_ws(fragment))
    return "".join(static_parts), dynamics


def parse_log_statement(
    text: str, spec: LoggerCallSpec = DEFAULT_CALL_SPEC
) -> LogStatement:
    """Parse one syntactically complete logger call.

    Raises NotALogStatement when the call head does not match ``spec`` (or
    trailing text follows the call) and UnbalancedDelimiters when a string or
    bracket never closes.
    """
    stripped = text.strip()
    head = _head_regex(spec).match(stripped)
    if head is None or head.start() != 0:
        raise NotALogStatement(f"not a recognized logger call: {stripped[:60]!r}")
    qualifier, receiver, method = head.group(1), head.group(2), head.group(3)
    open_idx = head.end() - 1
    close_idx = _scan_balanced(stripped, open_idx)
    tail = stripped[close_idx + 1 :].strip()
    if tail not in ("", ";"):
        raise NotALogStatement(f"trailing text after logger call: {tail[:40]!r}")

    args_text = stripped[open_idx + 1 : close_idx]
    raw_args = [a for a in (p.strip() for p in _split_top_level(args_text, (",",))) if a]
    if raw_args:
        static_text, dynamics = _decompose_message(raw_args[0])
        dynamics.extend(normalize_ws(a) for a in raw_args[1:])
    else:
        static_text, dynamics = "", []

    return LogStatement(
        raw_text=text,
        level=LogLevel.parse(method),
        static_text=static_text,
        dynamic_exprs=tuple(dynamics),
        receiver=re.sub(r"\s+", "", qualifier) + receiver,
        span=(1, text.count("\n") + 1),
    )


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def find_log_statements(
    text: str, spec: LoggerCallSpec = DEFAULT_CALL_SPEC
) -> list[RawLogMatch]:
    """Locate every logger call in ``text``, skipping strings and comments.

    Matches never overlap; a call spanning several physical lines is one
    match whose span covers them all.
    """
    head_re = _head_regex(spec)
    line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def line_of(offset: int) -> int:
        return bisect_right(line_starts, offset)

    matches: list[RawLogMatch] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in "\"'":
            i = _skip_string(text, i)
            continue
        past = _skip_comment(text, i)
        if past is not None:
            i = past
            continue
        if _is_ident_char(ch) and not ch.isdigit():
            if i > 0 and (_is_ident_char(text[i - 1]) or text[i - 1] == "."):
                while i < n and _is_ident_char(text[i]):
                    i += 1
                continue
            head = head_re.match(text, i)
            if head is None:
                while i < n and _is_ident_char(text[i]):
                    i += 1
                continue
            close_idx = _scan_balanced(text, head.end() - 1)
            end = close_idx + 1
            while end < n and text[end] in " \t":
                end += 1
            if end < n and text[end] == ";":
                end += 1
            else:
                end = close_idx + 1
            matches.append(
                RawLogMatch(
                    text=text[i:end],
                    start_offset=i,
                    end_offset=end,
                    start_line=line_of(i),
                    end_line=line_of(end - 1),
                )
            )
            i = end
            continue
        i += 1
    return matches


def with_span(stmt: LogStatement, start_line: int, end_line: int) -> LogStatement:
    """Copy of ``stmt`` re-anchored to file coordinates."""
    return replace(stmt, span=(start_line, end_line))
