"""Runtime evaluation: reinsert predictions, compile, run the covering test,
and diff emitted logs against the oracle logs.

The build/test specifics live in a declared adapter configuration; nothing
about the project's toolchain is inferred. Every evaluation runs in its own
workspace copy so the pristine project tree is never mutated.
"""

from __future__ import annotations

import hashlib
import json
import re
import shutil
import subprocess
import tempfile
import xml.etree.ElementTree as ET
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import metrics
from .corpus import extract_instances, insert_lines
from .logmodel import DEFAULT_CALL_SPEC, LoggerCallSpec
from .static_eval import PredictionRecord, UnknownInstance


class BuildFailed(RuntimeError):
    """The pristine project did not compile."""


class NoCoverageReport(RuntimeError):
    """A test run produced no coverage report at the declared path."""


class NoCoveredStatements(RuntimeError):
    """No (statement, test) pair was found while building instances."""


class WorkspaceCorrupt(RuntimeError):
    """A workspace copy is missing the file under evaluation."""


# Timestamp, level tag, thread, and logger name up to a " - " separator;
# every element optional so plain message lines pass through unchanged.
DEFAULT_HEADER_PATTERN = (
    r"^\s*"
    r"(?:\d{4}-\d{2}-\d{2}[ T]\d{2}:\d{2}:\d{2}(?:[.,]\d{1,6})?\s+)?"
    r"(?:(?:TRACE|DEBUG|INFO|WARN(?:ING)?|ERROR|FATAL)\s+)?"
    r"(?:\[[^\]]{0,64}\]\s+)?"
    r"(?:(?:TRACE|DEBUG|INFO|WARN(?:ING)?|ERROR|FATAL)\s+)?"
    r"(?:[A-Za-z_$][\w.$-]*\s+-\s+)?"
)


class HeaderStripper:
    """Removes log-line headers so only the message body is compared."""

    def __init__(self, pattern: str = DEFAULT_HEADER_PATTERN):
        self._re = re.compile(pattern)

    def strip_line(self, line: str) -> str:
        match = self._re.match(line)
        return line[match.end() :] if match else line

    def strip_body(self, text: str) -> list[str]:
        """Header-stripped, non-blank lines of a raw log file."""
        stripped = (self.strip_line(line).rstrip() for line in text.splitlines())
        return [line for line in stripped if line.strip()]


@dataclass(frozen=True)
class BuildAdapter:
    """Declared build/test commands for one project.

    ``test_cmd`` elements containing ``{test}`` are substituted with the test
    id. Paths are relative to the project root.
    """

    compile_cmd: tuple[str, ...]
    test_cmd: tuple[str, ...]
    coverage_report_path: str
    test_log_path: str
    tests: tuple[str, ...] = ()
    source_root: str = "src"
    timeout_s: float = 300.0
    header_pattern: str = DEFAULT_HEADER_PATTERN

    @classmethod
    def load(cls, path: Path) -> "BuildAdapter":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(
            compile_cmd=tuple(data["compile_cmd"]),
            test_cmd=tuple(data["test_cmd"]),
            coverage_report_path=data["coverage_report_path"],
            test_log_path=data["test_log_path"],
            tests=tuple(data.get("tests", ())),
            source_root=data.get("source_root", "src"),
            timeout_s=float(data.get("timeout_s", 300.0)),
            header_pattern=data.get("header_pattern", DEFAULT_HEADER_PATTERN),
        )

    def stripper(self) -> HeaderStripper:
        return HeaderStripper(self.header_pattern)

    def command_for(self, test_id: str) -> list[str]:
        return [part.replace("{test}", test_id) for part in self.test_cmd]


def read_line_coverage(xml_path: Path, source_root: str = "src") -> dict[str, set[int]]:
    """Covered line numbers per source file from a JaCoCo-schema XML report.

    Returns paths relative to the project root (``source_root`` prefixed);
    a line counts as covered when its covered-instruction count is positive.
    """
    root = ET.parse(xml_path).getroot()
    covered: dict[str, set[int]] = {}
    for package in root.iter("package"):
        pkg_name = package.get("name", "")
        for sourcefile in package.findall("sourcefile"):
            rel = sourcefile.get("name", "")
            if pkg_name:
                rel = f"{pkg_name}/{rel}"
            path = f"{source_root}/{rel}" if source_root else rel
            lines = covered.setdefault(path, set())
            for line in sourcefile.findall("line"):
                if int(line.get("ci", "0")) > 0:
                    lines.add(int(line.get("nr", "0")))
    return covered


@dataclass(frozen=True)
class DynamicInstance:
    """The dynamic-eval tuple: masked code, covering test, pinned oracle logs."""

    instance_id: str
    project: str
    source_path: str
    covering_test: str
    log_pos: int
    code_without: tuple[str, ...]
    oracle_text: str
    oracle_log_body: tuple[str, ...]

    @property
    def expects_logs(self) -> bool:
        return len(self.oracle_log_body) > 0

    def to_record(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "project": self.project,
            "source_path": self.source_path,
            "covering_test": self.covering_test,
            "log_pos": self.log_pos,
            "code_without": list(self.code_without),
            "oracle_text": self.oracle_text,
            "oracle_log_body": list(self.oracle_log_body),
            "expects_logs": self.expects_logs,
        }

    @classmethod
    def from_record(cls, record: dict) -> "DynamicInstance":
        return cls(
            instance_id=record["instance_id"],
            project=record["project"],
            source_path=record["source_path"],
            covering_test=record["covering_test"],
            log_pos=int(record["log_pos"]),
            code_without=tuple(record["code_without"]),
            oracle_text=record["oracle_text"],
            oracle_log_body=tuple(record["oracle_log_body"]),
        )


@dataclass(frozen=True)
class DynamicResult:
    """Outcome of evaluating one prediction in its workspace."""

    instance_id: str
    compiled: bool
    predicted_log_body: tuple[str, ...]
    lfs_cos: float
    lfs_bleu1: float
    lfs_bleu2: float
    lfs_bleu3: float
    lfs_bleu4: float
    lfs_rouge1: float
    lfs_rouge2: float
    lfs_rouge_l: float
    fp: bool
    fn: bool
    note: str = ""

    def to_record(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "compiled": self.compiled,
            "predicted_log_body": list(self.predicted_log_body),
            "lfs_cos": self.lfs_cos,
            "lfs_bleu1": self.lfs_bleu1,
            "lfs_bleu2": self.lfs_bleu2,
            "lfs_bleu3": self.lfs_bleu3,
            "lfs_bleu4": self.lfs_bleu4,
            "lfs_rouge1": self.lfs_rouge1,
            "lfs_rouge2": self.lfs_rouge2,
            "lfs_rouge_l": self.lfs_rouge_l,
            "fp": self.fp,
            "fn": self.fn,
            "note": self.note,
        }


def _run(cmd: Sequence[str], cwd: Path, timeout: float) -> subprocess.CompletedProcess:
    return subprocess.run(
        list(cmd), cwd=cwd, capture_output=True, text=True, timeout=timeout
    )


@dataclass
class DynamicBuildResult:
    instances: list[DynamicInstance]
    excluded: list[tuple[str, str]] = field(default_factory=list)


def _run_single_test(
    workspace: Path, adapter: BuildAdapter, test_id: str
) -> tuple[dict[str, set[int]], list[str], int]:
    """Run one test; return (coverage, stripped log body, exit code)."""
    report = workspace / adapter.coverage_report_path
    log_file = workspace / adapter.test_log_path
    for artifact in (report, log_file):
        if artifact.exists():
            artifact.unlink()
    proc = _run(adapter.command_for(test_id), workspace, adapter.timeout_s)
    body: list[str] = []
    if log_file.exists():
        body = adapter.stripper().strip_body(log_file.read_text(encoding="utf-8"))
    if proc.returncode != 0:
        return {}, body, proc.returncode
    if not report.exists():
        raise NoCoverageReport(f"{test_id}: no coverage report at {report}")
    coverage = read_line_coverage(report, adapter.source_root)
    return coverage, body, 0


def build_dynamic_instances(
    project_root: Path,
    adapter: BuildAdapter,
    spec: LoggerCallSpec = DEFAULT_CALL_SPEC,
    project: str | None = None,
) -> DynamicBuildResult:
    """Pair every log statement with the unit tests covering it.

    The project is compiled once and every declared test runs twice in a
    scratch copy; tests that fail or whose log bodies differ between runs
    (flaky) are excluded and reported. The pinned oracle body is the
    header-stripped log of the baseline run.
    """
    project_root = Path(project_root)
    project = project or project_root.name
    if not adapter.tests:
        raise NoCoveredStatements("adapter declares no tests")

    source_dir = project_root / adapter.source_root
    extraction = extract_instances(source_dir, project=project, spec=spec)
    if not extraction.instances:
        raise NoCoveredStatements(f"no log statements under {source_dir}")

    result = DynamicBuildResult(instances=[])
    with tempfile.TemporaryDirectory(prefix="logeval-build-") as tmp:
        workspace = Path(tmp) / "workspace"
        shutil.copytree(project_root, workspace)
        compile_proc = _run(adapter.compile_cmd, workspace, adapter.timeout_s)
        if compile_proc.returncode != 0:
            raise BuildFailed(
                f"pristine project failed to compile:\n{compile_proc.stdout}{compile_proc.stderr}"
            )
        for test_id in adapter.tests:
            try:
                coverage, body, code = _run_single_test(workspace, adapter, test_id)
                if code != 0:
                    result.excluded.append((test_id, f"baseline run exited {code}"))
                    continue
                _, second_body, second_code = _run_single_test(workspace, adapter, test_id)
            except subprocess.TimeoutExpired:
                result.excluded.append((test_id, "baseline run timed out"))
                continue
            if second_code != 0 or second_body != body:
                result.excluded.append((test_id, "nondeterministic log body (flaky)"))
                continue
            for inst in extraction.instances:
                relpath = inst.id.split(":L")[0].removeprefix(f"{project}/")
                source_path = f"{adapter.source_root}/{relpath}"
                covered = coverage.get(source_path, set())
                start, end = inst.oracle.span
                if not covered.intersection(range(start, end + 1)):
                    continue
                result.instances.append(
                    DynamicInstance(
                        instance_id=f"{source_path}:L{start}@{test_id}",
                        project=project,
                        source_path=source_path,
                        covering_test=test_id,
                        log_pos=inst.log_pos,
                        code_without=inst.code_without.lines,
                        oracle_text=inst.oracle_text,
                        oracle_log_body=tuple(body),
                    )
                )
    if not result.instances:
        raise NoCoveredStatements("no statement is covered by any declared test")
    result.instances.sort(key=lambda inst: inst.instance_id)
    return result


def _lfs_scores(predicted: Sequence[str], oracle: Sequence[str]) -> dict[str, float]:
    """Whole-document similarity between two log bodies.

    Two empty bodies are identical (all scores 1); one empty body scores 0.
    """
    cand = metrics.tokenize(" ".join(predicted))
    ref = metrics.tokenize(" ".join(oracle))
    names = ("cos", "bleu1", "bleu2", "bleu3", "bleu4", "rouge1", "rouge2", "rouge_l")
    if not cand and not ref:
        return {name: 1.0 for name in names}
    if not cand or not ref:
        return {name: 0.0 for name in names}
    return {
        "cos": metrics.tfidf_cosine(cand, ref),
        "bleu1": metrics.bleu(cand, ref, 1),
        "bleu2": metrics.bleu(cand, ref, 2),
        "bleu3": metrics.bleu(cand, ref, 3),
        "bleu4": metrics.bleu(cand, ref, 4),
        "rouge1": metrics.rouge_n(cand, ref, 1),
        "rouge2": metrics.rouge_n(cand, ref, 2),
        "rouge_l": metrics.rouge_l(cand, ref),
    }


def _result(
    instance: DynamicInstance,
    compiled: bool,
    body: Sequence[str],
    note: str = "",
) -> DynamicResult:
    scores = _lfs_scores(body, instance.oracle_log_body) if compiled else {
        name: 0.0
        for name in ("cos", "bleu1", "bleu2", "bleu3", "bleu4", "rouge1", "rouge2", "rouge_l")
    }
    return DynamicResult(
        instance_id=instance.instance_id,
        compiled=compiled,
        predicted_log_body=tuple(body) if compiled else (),
        lfs_cos=scores["cos"],
        lfs_bleu1=scores["bleu1"],
        lfs_bleu2=scores["bleu2"],
        lfs_bleu3=scores["bleu3"],
        lfs_bleu4=scores["bleu4"],
        lfs_rouge1=scores["rouge1"],
        lfs_rouge2=scores["rouge2"],
        lfs_rouge_l=scores["rouge_l"],
        fp=compiled and len(body) > 0 and not instance.expects_logs,
        fn=(len(body) == 0 if compiled else True) and instance.expects_logs,
        note=note,
    )


def evaluate_prediction(
    instance: DynamicInstance,
    pred: PredictionRecord,
    adapter: BuildAdapter,
    project_root: Path,
) -> DynamicResult:
    """Reinsert one prediction, compile, run the covering test, diff the logs.

    Dynamic evaluation accepts multi-statement predictions: all statements are
    inserted, in order, at the predicted position. A test failure or timeout
    after successful compilation still counts as compiled (compilability is
    what CSR measures); its log body is whatever was captured.
    """
    if pred.instance_id != instance.instance_id:
        raise UnknownInstance(pred.instance_id)
    project_root = Path(project_root)
    with tempfile.TemporaryDirectory(prefix="logeval-eval-") as tmp:
        workspace = Path(tmp) / "workspace"
        shutil.copytree(project_root, workspace)
        target = workspace / instance.source_path
        if not target.is_file():
            raise WorkspaceCorrupt(f"missing {instance.source_path} in workspace")
        insertion = "\n".join(pred.statements)
        lines = insert_lines(list(instance.code_without), pred.insert_pos, insertion)
        target.write_text("\n".join(lines), encoding="utf-8")

        try:
            compile_proc = _run(adapter.compile_cmd, workspace, adapter.timeout_s)
        except subprocess.TimeoutExpired:
            return _result(instance, compiled=False, body=(), note="compile timeout")
        if compile_proc.returncode != 0:
            detail = (compile_proc.stdout + compile_proc.stderr).strip().splitlines()
            note = detail[-1] if detail else "compile failed"
            return _result(instance, compiled=False, body=(), note=note)

        log_file = workspace / adapter.test_log_path
        report = workspace / adapter.coverage_report_path
        for artifact in (log_file, report):
            if artifact.exists():
                artifact.unlink()
        try:
            test_proc = _run(
                adapter.command_for(instance.covering_test), workspace, adapter.timeout_s
            )
            note = "" if test_proc.returncode == 0 else f"test exited {test_proc.returncode}"
        except subprocess.TimeoutExpired:
            return _result(instance, compiled=True, body=(), note="test timeout")
        body: list[str] = []
        if log_file.exists():
            body = adapter.stripper().strip_body(log_file.read_text(encoding="utf-8"))
        return _result(instance, compiled=True, body=body, note=note)


@dataclass(frozen=True)
class DynamicReport:
    """Aggregate dynamic metrics; csr/fplr/fnlr are percentages, LFS in [0,1]."""

    n_total: int
    n_compiled: int
    csr: float
    lfs_cos: float
    lfs_bleu1: float
    lfs_bleu2: float
    lfs_bleu3: float
    lfs_bleu4: float
    lfs_rouge1: float
    lfs_rouge2: float
    lfs_rouge_l: float
    fplr: float
    fnlr: float
    tool: str = ""

    def to_record(self) -> dict:
        return {
            "tool": self.tool,
            "n_total": self.n_total,
            "n_compiled": self.n_compiled,
            "csr": self.csr,
            "lfs_cos": self.lfs_cos,
            "lfs_bleu1": self.lfs_bleu1,
            "lfs_bleu2": self.lfs_bleu2,
            "lfs_bleu3": self.lfs_bleu3,
            "lfs_bleu4": self.lfs_bleu4,
            "lfs_rouge1": self.lfs_rouge1,
            "lfs_rouge2": self.lfs_rouge2,
            "lfs_rouge_l": self.lfs_rouge_l,
            "fplr": self.fplr,
            "fnlr": self.fnlr,
        }


def aggregate_dynamic(results: Sequence[DynamicResult], tool: str = "") -> DynamicReport:
    """CSR over all results, LFS means over compiled ones, FP/FN rates over all."""
    if not results:
        raise metrics.EmptyInput("no dynamic results to aggregate")
    total = len(results)
    compiled = [r for r in results if r.compiled]

    def mean(name: str) -> float:
        if not compiled:
            return 0.0
        return sum(getattr(r, name) for r in compiled) / len(compiled)

    return DynamicReport(
        n_total=total,
        n_compiled=len(compiled),
        csr=100.0 * len(compiled) / total,
        lfs_cos=mean("lfs_cos"),
        lfs_bleu1=mean("lfs_bleu1"),
        lfs_bleu2=mean("lfs_bleu2"),
        lfs_bleu3=mean("lfs_bleu3"),
        lfs_bleu4=mean("lfs_bleu4"),
        lfs_rouge1=mean("lfs_rouge1"),
        lfs_rouge2=mean("lfs_rouge2"),
        lfs_rouge_l=mean("lfs_rouge_l"),
        fplr=100.0 * sum(r.fp for r in results) / total,
        fnlr=100.0 * sum(r.fn for r in results) / total,
        tool=tool,
    )


def evaluate_dynamic(
    instances: Sequence[DynamicInstance],
    predictions: Iterable[PredictionRecord],
    adapter: BuildAdapter,
    project_root: Path,
    workers: int = 1,
    tool: str = "",
) -> tuple[list[DynamicResult], DynamicReport]:
    """Evaluate every prediction in its own workspace, then aggregate.

    Instances without a prediction are skipped (the rates are over the
    prediction set); predictions without an instance are an input error.
    """
    by_id: Mapping[str, DynamicInstance] = {i.instance_id: i for i in instances}
    pairs: list[tuple[DynamicInstance, PredictionRecord]] = []
    for pred in predictions:
        if pred.instance_id not in by_id:
            raise UnknownInstance(pred.instance_id)
        pairs.append((by_id[pred.instance_id], pred))
        tool = tool or pred.tool

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    lambda pair: evaluate_prediction(pair[0], pair[1], adapter, project_root),
                    pairs,
                )
            )
    else:
        results = [evaluate_prediction(i, p, adapter, project_root) for i, p in pairs]
    results.sort(key=lambda r: r.instance_id)
    return results, aggregate_dynamic(results, tool=tool)


def checksum_tree(root: Path) -> str:
    """Order-independent content hash of a directory tree (isolation checks)."""
    digest = hashlib.sha256()
    root = Path(root)
    for path in sorted(p for p in root.rglob("*") if p.is_file()):
        digest.update(path.relative_to(root).as_posix().encode())
        digest.update(b"\0")
        digest.update(path.read_bytes())
        digest.update(b"\0")
    return digest.hexdigest()


def write_dynamic_instances(instances: Iterable[DynamicInstance], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(json.dumps(inst.to_record(), sort_keys=True) + "\n")


def read_dynamic_instances(path: Path) -> list[DynamicInstance]:
    instances = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                instances.append(DynamicInstance.from_record(json.loads(line)))
    return instances
