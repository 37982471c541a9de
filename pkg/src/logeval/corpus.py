"""Corpus construction: extraction, masking, lint, contamination, length split.

Each source file is one evaluation unit. Every recognized log statement in a
unit yields one instance: the unit with that statement's physical lines
removed, the 1-based insertion index, and the statement itself as oracle.
Reinserting the oracle at the recorded position reproduces the unit exactly.
"""

from __future__ import annotations

import enum
import json
import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .logmodel import (
    DEFAULT_CALL_SPEC,
    LogLevel,
    LoggerCallSpec,
    LogModelError,
    LogStatement,
    SourceUnit,
    code_tokens,
    find_log_statements,
    normalize_ws,
    parse_log_statement,
    with_span,
)

SHORT_TOKEN_LIMIT = 512
SOURCE_EXTENSIONS = (".java", ".py", ".scala", ".kt", ".groovy")


@dataclass(frozen=True)
class RepoQualification:
    """Repository metadata record for the corpus inclusion predicate.

    The counts are inputs (supplied by the user or a fetcher client); no
    network access is needed to evaluate the predicate.
    """

    stars: int
    log_related_issues: int
    commits_per_month: float
    issue_resolution_rate: float
    months_since_update: float

    def qualifies(self) -> bool:
        return (
            self.stars >= 10_000
            and self.log_related_issues >= 500
            and self.commits_per_month > 50
            and self.issue_resolution_rate > 0.70
            and self.months_since_update <= 6
        )


@dataclass(frozen=True)
class CorpusInstance:
    """The static-eval tuple: unit-without-statement, position, oracle."""

    id: str
    code_without: SourceUnit
    log_pos: int
    oracle: LogStatement
    project: str
    length_class: str

    @property
    def oracle_text(self) -> str:
        return self.oracle.raw_text

    def reinserted_text(self) -> str:
        """The unit with the oracle put back; equals the original source."""
        lines = insert_lines(list(self.code_without.lines), self.log_pos, self.oracle_text)
        return "\n".join(lines)

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "project": self.project,
            "code_without": list(self.code_without.lines),
            "log_pos": self.log_pos,
            "oracle_text": self.oracle_text,
            "length_class": self.length_class,
        }

    @classmethod
    def from_record(cls, record: dict, spec: LoggerCallSpec = DEFAULT_CALL_SPEC) -> "CorpusInstance":
        text = "\n".join(record["code_without"])
        unit = SourceUnit.from_text(record["id"], text)
        return cls(
            id=record["id"],
            code_without=unit,
            log_pos=int(record["log_pos"]),
            oracle=parse_log_statement(record["oracle_text"], spec),
            project=record["project"],
            length_class=record["length_class"],
        )


def insert_lines(lines: list[str], pos: int, statement_text: str) -> list[str]:
    """Insert a statement's physical lines before 1-based line ``pos``.

    ``pos == len(lines) + 1`` appends at end of unit.
    """
    if not 1 <= pos <= len(lines) + 1:
        raise ValueError(f"insertion position {pos} outside 1..{len(lines) + 1}")
    inserted = statement_text.split("\n")
    return lines[: pos - 1] + inserted + lines[pos - 1 :]


def length_class_of(token_count: int, limit: int = SHORT_TOKEN_LIMIT) -> str:
    return "short" if token_count <= limit else "long"


@dataclass
class ExtractionResult:
    """Instances plus an account of everything that was not extracted."""

    instances: list[CorpusInstance]
    skipped_files: list[tuple[str, str]] = field(default_factory=list)
    skipped_statements: list[tuple[str, int, str]] = field(default_factory=list)
    n_files: int = 0
    n_statements: int = 0


def _iter_source_files(root: Path, extensions: Sequence[str]) -> list[Path]:
    files = [
        p
        for p in sorted(root.rglob("*"))
        if p.is_file() and p.suffix in extensions
    ]
    return files


def _statement_owns_its_lines(text: str, match_start: int, match_end: int) -> bool:
    """True when nothing but whitespace shares the statement's boundary lines."""
    line_start = text.rfind("\n", 0, match_start) + 1
    before = text[line_start:match_start]
    nl = text.find("\n", match_end)
    after = text[match_end:] if nl == -1 else text[match_end:nl]
    return before.strip() == "" and after.strip() == ""


def extract_instances(
    root: Path,
    project: str | None = None,
    spec: LoggerCallSpec = DEFAULT_CALL_SPEC,
    token_limit: int = SHORT_TOKEN_LIMIT,
    extensions: Sequence[str] = SOURCE_EXTENSIONS,
    tokenizer: Callable[[str], list[str]] = code_tokens,
) -> ExtractionResult:
    """Build one instance per log statement found under ``root``.

    A unit containing k statements yields k instances, each masking exactly
    one while the other k-1 remain in ``code_without``. Files that fail to
    scan, and statements sharing a physical line with other code, are
    excluded and reported, never silently dropped.
    """
    root = Path(root)
    project = project or root.name
    result = ExtractionResult(instances=[])
    for path in _iter_source_files(root, extensions):
        relpath = path.relative_to(root).as_posix()
        result.n_files += 1
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            result.skipped_files.append((relpath, f"unreadable: {exc}"))
            continue
        text = text.replace("\r\n", "\n").replace("\r", "\n")
        try:
            matches = find_log_statements(text, spec)
        except LogModelError as exc:
            result.skipped_files.append((relpath, str(exc)))
            continue
        lines = text.split("\n")
        for match in matches:
            result.n_statements += 1
            if not _statement_owns_its_lines(text, match.start_offset, match.end_offset):
                result.skipped_statements.append(
                    (relpath, match.start_line, "shares a line with other code")
                )
                continue
            # The oracle keeps the complete physical lines (indentation and
            # all) so reinsertion reproduces the unit byte-for-byte.
            full_text = "\n".join(lines[match.start_line - 1 : match.end_line])
            try:
                stmt = parse_log_statement(full_text, spec)
            except LogModelError as exc:
                result.skipped_statements.append((relpath, match.start_line, str(exc)))
                continue
            stmt = with_span(stmt, match.start_line, match.end_line)
            masked = lines[: match.start_line - 1] + lines[match.end_line :]
            unit_id = f"{project}/{relpath}:L{match.start_line}"
            masked_text = "\n".join(masked)
            unit = SourceUnit(
                id=unit_id,
                lines=tuple(masked),
                token_count=len(tokenizer(masked_text)),
            )
            result.instances.append(
                CorpusInstance(
                    id=unit_id,
                    code_without=unit,
                    log_pos=match.start_line,
                    oracle=stmt,
                    project=project,
                    length_class=length_class_of(unit.token_count, token_limit),
                )
            )
    return result


def split_by_length(
    instances: Iterable[CorpusInstance],
) -> tuple[list[CorpusInstance], list[CorpusInstance]]:
    """Partition instances into (short, long) by their recorded length class."""
    short = [inst for inst in instances if inst.length_class == "short"]
    long = [inst for inst in instances if inst.length_class == "long"]
    return short, long


class BadPattern(enum.Enum):
    DUPLICATED_VARIABLE = "DuplicatedVariable"
    EMPTY_STRING = "EmptyString"
    UNPREDICTABLE_CHARACTER = "UnpredictableCharacter"
    WRONG_VERBOSITY_LEVEL = "WrongVerbosityLevel"
    EXPLICIT_CAST = "ExplicitCast"


@dataclass(frozen=True)
class BadPatternFinding:
    instance_id: str
    pattern: BadPattern
    evidence: str

    def to_record(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "pattern": self.pattern.value,
            "evidence": self.evidence,
        }


_ERROR_KEYWORDS = re.compile(r"fail|error|exception|crash", re.IGNORECASE)
# Parenthesized primitive or capitalized type name directly applied to a value.
_CAST_RE = re.compile(
    r"\(\s*(?:byte|short|int|long|float|double|boolean|char"
    r"|[A-Z][A-Za-z0-9_$]*(?:\s*\.\s*[A-Z][A-Za-z0-9_$]*)*)"
    r"(?:<[^<>]*>)?(?:\s*\[\s*\])*\s*\)\s*[\w(\"']"
)
_SPECIAL_RUN_RE = re.compile(r"[^\w\s]{3,}")


def lint_bad_patterns(
    stmt: LogStatement, instance_id: str = "", error_keywords: re.Pattern = _ERROR_KEYWORDS
) -> list[BadPatternFinding]:
    """Flag the five bad logging patterns in one oracle statement.

    WrongVerbosityLevel is a keyword heuristic and advisory by nature; the
    other four detectors are structural.
    """
    findings: list[BadPatternFinding] = []

    def add(pattern: BadPattern, evidence: str) -> None:
        findings.append(BadPatternFinding(instance_id, pattern, evidence))

    normalized = [normalize_ws(e) for e in stmt.dynamic_exprs]
    seen: set[str] = set()
    for expr in normalized:
        if expr in seen:
            add(BadPattern.DUPLICATED_VARIABLE, expr)
            break
        seen.add(expr)

    if stmt.static_text.strip() == "" and not stmt.dynamic_exprs:
        add(BadPattern.EMPTY_STRING, f'"{stmt.static_text}"')

    # Placeholders are not unpredictable; drop them before looking for runs
    # of special characters. Whitespace breaks a run.
    without_placeholders = stmt.static_text.replace("{}", " ")
    run = _SPECIAL_RUN_RE.search(without_placeholders)
    control = next(
        (ch for ch in stmt.static_text if unicodedata.category(ch) == "Cc"), None
    )
    if run is not None:
        add(BadPattern.UNPREDICTABLE_CHARACTER, run.group(0))
    elif control is not None:
        add(BadPattern.UNPREDICTABLE_CHARACTER, repr(control))

    if stmt.level <= LogLevel.INFO:
        keyword = error_keywords.search(stmt.static_text)
        if keyword is not None:
            add(BadPattern.WRONG_VERBOSITY_LEVEL, keyword.group(0))

    for expr in stmt.dynamic_exprs:
        cast = _CAST_RE.search(expr)
        if cast is not None:
            add(BadPattern.EXPLICIT_CAST, cast.group(0))
            break

    return findings


def lint_corpus(instances: Iterable[CorpusInstance]) -> list[BadPatternFinding]:
    findings: list[BadPatternFinding] = []
    for inst in instances:
        findings.extend(lint_bad_patterns(inst.oracle, instance_id=inst.id))
    return findings


def _unit_ngrams(unit: SourceUnit, n: int, tokenizer: Callable[[str], list[str]]) -> set[tuple[str, ...]]:
    tokens = tokenizer(unit.text)
    return {tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)}


def contamination_rate(
    test_units: Sequence[SourceUnit],
    train_units: Sequence[SourceUnit],
    n: int = 13,
    tokenizer: Callable[[str], list[str]] = code_tokens,
) -> float:
    """Fraction of test units sharing at least one n-gram with any train unit."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not test_units:
        return 0.0
    train_grams: set[tuple[str, ...]] = set()
    for unit in train_units:
        train_grams |= _unit_ngrams(unit, n, tokenizer)
    contaminated = sum(
        1 for unit in test_units if _unit_ngrams(unit, n, tokenizer) & train_grams
    )
    return contaminated / len(test_units)


def contaminated_ids(
    test_units: Sequence[SourceUnit],
    train_units: Sequence[SourceUnit],
    n: int = 13,
    tokenizer: Callable[[str], list[str]] = code_tokens,
) -> list[str]:
    """Ids of the test units counted by :func:`contamination_rate`."""
    train_grams: set[tuple[str, ...]] = set()
    for unit in train_units:
        train_grams |= _unit_ngrams(unit, n, tokenizer)
    return [
        unit.id for unit in test_units if _unit_ngrams(unit, n, tokenizer) & train_grams
    ]


def write_corpus(instances: Iterable[CorpusInstance], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(json.dumps(inst.to_record(), sort_keys=True) + "\n")


def read_corpus(path: Path, spec: LoggerCallSpec = DEFAULT_CALL_SPEC) -> list[CorpusInstance]:
    instances = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                instances.append(CorpusInstance.from_record(json.loads(line), spec))
    return instances
