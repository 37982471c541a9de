"""Command-line entry point: corpus building, lint, contamination checks,
static/dynamic evaluation, and report rendering.

Machine-readable outputs are deterministic: re-running any command on the
same inputs reproduces byte-identical files. Failures exit non-zero and the
last stderr line is a single machine-parseable ``error: CODE detail``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus as corpus_mod
from . import dynamic_eval, report
from . import metrics
from .logmodel import LogModelError, SourceUnit
from .static_eval import (
    DuplicatePrediction,
    MultiStatementPrediction,
    PredictionRecord,
    UnknownInstance,
    evaluate_static,
)


class CliError(Exception):
    """A failure with a machine-parseable code."""

    def __init__(self, code: str, detail: str):
        super().__init__(f"{code} {detail}")
        self.code = code
        self.detail = detail


class MalformedLine(CliError):
    def __init__(self, line_no: int, reason: str):
        super().__init__("MALFORMED_LINE", f"line={line_no} {reason}")
        self.line_no = line_no


class DuplicateInstance(CliError):
    def __init__(self, instance_id: str, line_no: int):
        super().__init__("DUPLICATE_INSTANCE", f"id={instance_id} line={line_no}")
        self.instance_id = instance_id


@dataclass
class RunConfig:
    """Validated per-invocation configuration."""

    mode: str
    corpus_path: Path | None = None
    predictions_path: Path | None = None
    adapter_path: Path | None = None
    output_dir: Path | None = None
    workers: int = 1
    token_limit: int = corpus_mod.SHORT_TOKEN_LIMIT

    def require(self, *fields: str) -> None:
        for name in fields:
            value = getattr(self, name)
            if value is None:
                raise CliError("MISSING_INPUT", f"{self.mode} requires --{name.replace('_path', '').replace('_dir', '')}")
            if name.endswith("_path") and not Path(value).exists():
                raise CliError("MISSING_INPUT", f"path does not exist: {value}")


def ingest_predictions(path: Path) -> list[PredictionRecord]:
    """Read line-delimited prediction records, validating as we go.

    Raises MalformedLine with the 1-based line number for structural problems
    and DuplicateInstance when an instance id repeats.
    """
    records: list[PredictionRecord] = []
    seen: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedLine(line_no, f"invalid JSON: {exc.msg}") from None
            if not isinstance(data, dict):
                raise MalformedLine(line_no, "record is not an object")
            instance_id = data.get("instance_id")
            if not isinstance(instance_id, str) or not instance_id:
                raise MalformedLine(line_no, "missing or empty instance_id")
            insert_pos = data.get("insert_pos")
            if not isinstance(insert_pos, int) or insert_pos < 1:
                raise MalformedLine(line_no, "insert_pos must be a positive integer")
            statements = data.get("statements")
            if (
                not isinstance(statements, list)
                or not statements
                or not all(isinstance(s, str) for s in statements)
            ):
                raise MalformedLine(line_no, "statements must be a non-empty string array")
            if instance_id in seen:
                raise DuplicateInstance(instance_id, line_no)
            seen[instance_id] = line_no
            records.append(
                PredictionRecord(
                    instance_id=instance_id,
                    insert_pos=insert_pos,
                    statements=tuple(statements),
                    tool=str(data.get("tool", "")),
                )
            )
    return records


def _load_units(path: Path) -> list[SourceUnit]:
    """Units for contamination: a source tree directory or a corpus file.

    Corpus instances contribute their original (oracle-reinserted) text.
    """
    path = Path(path)
    if path.is_dir():
        units = []
        for file in sorted(path.rglob("*")):
            if file.is_file() and file.suffix in corpus_mod.SOURCE_EXTENSIONS:
                units.append(
                    SourceUnit.from_text(
                        file.relative_to(path).as_posix(),
                        file.read_text(encoding="utf-8"),
                    )
                )
        return units
    instances = corpus_mod.read_corpus(path)
    return [SourceUnit.from_text(inst.id, inst.reinserted_text()) for inst in instances]


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _cmd_corpus_build(args: argparse.Namespace) -> int:
    out = _out_dir(args)
    instances = []
    skipped_files = 0
    skipped_statements = 0
    for tree in args.tree:
        tree = Path(tree)
        if not tree.is_dir():
            raise CliError("MISSING_INPUT", f"tree is not a directory: {tree}")
        result = corpus_mod.extract_instances(
            tree, project=args.project, token_limit=args.length_threshold
        )
        instances.extend(result.instances)
        skipped_files += len(result.skipped_files)
        skipped_statements += len(result.skipped_statements)
        for rel, reason in result.skipped_files:
            print(f"skipped file {tree.name}/{rel}: {reason}", file=sys.stderr)
        for rel, line, reason in result.skipped_statements:
            print(f"skipped statement {tree.name}/{rel}:{line}: {reason}", file=sys.stderr)
    corpus_path = out / "corpus.jsonl"
    corpus_mod.write_corpus(instances, corpus_path)
    short, long = corpus_mod.split_by_length(instances)
    print(
        f"corpus: {len(instances)} instances ({len(short)} short, {len(long)} long) "
        f"-> {corpus_path}"
    )
    if skipped_files or skipped_statements:
        print(f"skipped: {skipped_files} files, {skipped_statements} statements")

    if args.adapter:
        adapter = dynamic_eval.BuildAdapter.load(Path(args.adapter))
        if len(args.tree) != 1:
            raise CliError("BAD_ARGUMENT", "dynamic instance building takes exactly one --tree")
        build = dynamic_eval.build_dynamic_instances(
            Path(args.tree[0]), adapter, project=args.project
        )
        dyn_path = out / "dynamic_instances.jsonl"
        dynamic_eval.write_dynamic_instances(build.instances, dyn_path)
        print(f"dynamic instances: {len(build.instances)} -> {dyn_path}")
        for test_id, reason in build.excluded:
            print(f"excluded test {test_id}: {reason}", file=sys.stderr)
    return 0


def _cmd_corpus_lint(args: argparse.Namespace) -> int:
    config = RunConfig(mode="lint", corpus_path=Path(args.corpus))
    config.require("corpus_path")
    instances = corpus_mod.read_corpus(config.corpus_path)
    findings = corpus_mod.lint_corpus(instances)
    out = _out_dir(args)
    lint_path = out / "lint.jsonl"
    report.write_jsonl([f.to_record() for f in findings], lint_path)
    print(f"lint: {len(findings)} findings over {len(instances)} instances -> {lint_path}")
    return 0


def _cmd_corpus_contamination(args: argparse.Namespace) -> int:
    config = RunConfig(mode="contamination", corpus_path=Path(args.corpus))
    config.require("corpus_path")
    train_path = Path(args.train)
    if not train_path.exists():
        raise CliError("MISSING_INPUT", f"path does not exist: {train_path}")
    test_units = _load_units(config.corpus_path)
    train_units = _load_units(train_path)
    rate = corpus_mod.contamination_rate(test_units, train_units, n=args.ngram)
    flagged = corpus_mod.contaminated_ids(test_units, train_units, n=args.ngram)
    out = _out_dir(args)
    record = {
        "n": args.ngram,
        "test_units": len(test_units),
        "train_units": len(train_units),
        "rate": rate,
        "contaminated": flagged,
    }
    report.write_record(record, out / "contamination.json")
    print(f"contamination rate (n={args.ngram}): {rate:.4f} ({len(flagged)} units)")
    return 0


def _cmd_eval_static(args: argparse.Namespace) -> int:
    config = RunConfig(
        mode="static",
        corpus_path=Path(args.corpus),
        predictions_path=Path(args.predictions),
    )
    config.require("corpus_path", "predictions_path")
    instances = corpus_mod.read_corpus(config.corpus_path)
    predictions = ingest_predictions(config.predictions_path)
    try:
        scores, static_report = evaluate_static(predictions, instances)
    except UnknownInstance as exc:
        raise CliError("UNKNOWN_INSTANCE", f"id={exc.args[0]}") from None
    except DuplicatePrediction as exc:
        raise CliError("DUPLICATE_INSTANCE", f"id={exc.args[0]}") from None
    except MultiStatementPrediction as exc:
        raise CliError("MULTI_STATEMENT_STATIC", str(exc)) from None
    out = _out_dir(args)
    report.write_jsonl([s.to_record() for s in scores], out / "static_records.jsonl")
    record = static_report.to_record()
    report.write_record(record, out / "static_report.json")
    table = report.render_static_table(record)
    (out / "static_report.txt").write_text(table, encoding="utf-8")
    print(table, end="")
    return 0


def _cmd_eval_dynamic(args: argparse.Namespace) -> int:
    config = RunConfig(
        mode="dynamic",
        corpus_path=Path(args.corpus),
        predictions_path=Path(args.predictions),
        adapter_path=Path(args.adapter),
        workers=args.workers,
    )
    config.require("corpus_path", "predictions_path", "adapter_path")
    adapter = dynamic_eval.BuildAdapter.load(config.adapter_path)
    project_root = Path(args.project_root) if args.project_root else config.adapter_path.parent
    if not project_root.is_dir():
        raise CliError("MISSING_INPUT", f"project root is not a directory: {project_root}")
    instances = dynamic_eval.read_dynamic_instances(config.corpus_path)
    predictions = ingest_predictions(config.predictions_path)
    try:
        results, dyn_report = dynamic_eval.evaluate_dynamic(
            instances, predictions, adapter, project_root, workers=config.workers
        )
    except UnknownInstance as exc:
        raise CliError("UNKNOWN_INSTANCE", f"id={exc.args[0]}") from None
    except dynamic_eval.BuildFailed as exc:
        raise CliError("BUILD_FAILED", str(exc).splitlines()[0]) from None
    out = _out_dir(args)
    report.write_jsonl([r.to_record() for r in results], out / "dynamic_records.jsonl")
    record = dyn_report.to_record()
    report.write_record(record, out / "dynamic_report.json")
    table = report.render_dynamic_table(record)
    (out / "dynamic_report.txt").write_text(table, encoding="utf-8")
    print(table, end="")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    records_path = Path(args.records)
    if not records_path.exists():
        raise CliError("MISSING_INPUT", f"path does not exist: {records_path}")
    record = json.loads(records_path.read_text(encoding="utf-8"))
    try:
        print(report.render_report(record, fmt=args.format), end="")
    except ValueError as exc:
        raise CliError("BAD_ARGUMENT", str(exc)) from None
    return 0


def _env_path(name: str) -> str | None:
    return os.environ.get(name) or None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logeval",
        description="Evaluation harness for automatic log-statement generation tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    corpus_p = sub.add_parser("corpus", help="corpus construction and checks")
    corpus_sub = corpus_p.add_subparsers(dest="subcommand", required=True)

    build_p = corpus_sub.add_parser("build", help="extract masked instances from source trees")
    build_p.add_argument("--tree", action="append", required=True, help="source tree root (repeatable)")
    build_p.add_argument("--project", default=None, help="project name (default: tree dirname)")
    build_p.add_argument("--adapter", default=_env_path("LOGEVAL_ADAPTER"),
                         help="build adapter config; also builds dynamic instances")
    build_p.add_argument("--out", default=_env_path("LOGEVAL_OUT") or "out", help="output directory")
    build_p.add_argument("--length-threshold", type=int, default=corpus_mod.SHORT_TOKEN_LIMIT,
                         help="short/long token boundary (default 512)")
    build_p.set_defaults(func=_cmd_corpus_build)

    lint_p = corpus_sub.add_parser("lint", help="flag bad logging patterns in oracle statements")
    lint_p.add_argument("--corpus", default=_env_path("LOGEVAL_CORPUS"), required=_env_path("LOGEVAL_CORPUS") is None)
    lint_p.add_argument("--out", default=_env_path("LOGEVAL_OUT") or "out")
    lint_p.set_defaults(func=_cmd_corpus_lint)

    cont_p = corpus_sub.add_parser("contamination", help="n-gram overlap between test and train units")
    cont_p.add_argument("--corpus", default=_env_path("LOGEVAL_CORPUS"), required=_env_path("LOGEVAL_CORPUS") is None,
                        help="test units: corpus file or source tree")
    cont_p.add_argument("--train", required=True, help="training units: corpus file or source tree")
    cont_p.add_argument("--ngram", type=int, default=13)
    cont_p.add_argument("--out", default=_env_path("LOGEVAL_OUT") or "out")
    cont_p.set_defaults(func=_cmd_corpus_contamination)

    eval_p = sub.add_parser("eval", help="score predictions")
    eval_sub = eval_p.add_subparsers(dest="subcommand", required=True)

    static_p = eval_sub.add_parser("static", help="static metrics (PA/LA/MA/ALD/DEA/STS)")
    static_p.add_argument("--corpus", default=_env_path("LOGEVAL_CORPUS"), required=_env_path("LOGEVAL_CORPUS") is None)
    static_p.add_argument("--predictions", default=_env_path("LOGEVAL_PREDICTIONS"),
                          required=_env_path("LOGEVAL_PREDICTIONS") is None)
    static_p.add_argument("--out", default=_env_path("LOGEVAL_OUT") or "out")
    static_p.set_defaults(func=_cmd_eval_static)

    dynamic_p = eval_sub.add_parser("dynamic", help="runtime metrics (CSR/LFS/FPLR/FNLR)")
    dynamic_p.add_argument("--corpus", default=_env_path("LOGEVAL_CORPUS"), required=_env_path("LOGEVAL_CORPUS") is None,
                           help="dynamic instances file")
    dynamic_p.add_argument("--predictions", default=_env_path("LOGEVAL_PREDICTIONS"),
                           required=_env_path("LOGEVAL_PREDICTIONS") is None)
    dynamic_p.add_argument("--adapter", default=_env_path("LOGEVAL_ADAPTER"),
                           required=_env_path("LOGEVAL_ADAPTER") is None)
    dynamic_p.add_argument("--project-root", default=None,
                           help="pristine project root (default: adapter's directory)")
    dynamic_p.add_argument("--workers", type=int, default=1)
    dynamic_p.add_argument("--out", default=_env_path("LOGEVAL_OUT") or "out")
    dynamic_p.set_defaults(func=_cmd_eval_dynamic)

    report_p = sub.add_parser("report", help="re-render a persisted report")
    report_p.add_argument("--records", required=True, help="report JSON file")
    report_p.add_argument("--format", choices=("table", "records"), default="table")
    report_p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code not in (0, None):
            print("error: USAGE invalid arguments", file=sys.stderr)
            return 2
        return 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.code} {exc.detail}", file=sys.stderr)
        return 1
    except metrics.EmptyInput as exc:
        print(f"error: EMPTY_INPUT {exc}", file=sys.stderr)
        return 1
    except LogModelError as exc:
        print(f"error: PARSE {exc}", file=sys.stderr)
        return 1
    except dynamic_eval.NoCoverageReport as exc:
        print(f"error: NO_COVERAGE_REPORT {exc}", file=sys.stderr)
        return 1
    except dynamic_eval.NoCoveredStatements as exc:
        print(f"error: NO_COVERED_STATEMENTS {exc}", file=sys.stderr)
        return 1
    except dynamic_eval.BuildFailed as exc:
        print(f"error: BUILD_FAILED {str(exc).splitlines()[0]}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: MISSING_INPUT {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
