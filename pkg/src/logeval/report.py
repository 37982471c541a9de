"""Human-readable report tables and machine-readable record files.

Table layouts mirror the usual benchmark presentation: the static table
carries PA/LA/MA/ALD/DEA plus BLEU-4 and ROUGE-L static-text similarity,
the dynamic table carries CSR, the log-file similarity family, and the
false-positive/false-negative logging rates. Renderers take plain record
dicts so persisted reports re-render byte-identically.
"""

from __future__ import annotations

import json
from pathlib import Path

STATIC_COLUMNS = ("PA", "LA", "MA", "ALD", "DEA", "BLEU-4", "ROUGE-L")
DYNAMIC_COLUMNS = (
    "CSR",
    "COS",
    "BLEU-1",
    "BLEU-2",
    "BLEU-3",
    "BLEU-4",
    "ROUGE-1",
    "ROUGE-2",
    "ROUGE-L",
    "FPLR",
    "FNLR",
)


def _fmt_row(cells: list[str], widths: list[int]) -> str:
    return "  ".join(cell.rjust(width) for cell, width in zip(cells, widths)).rstrip()


def _static_cells(agg: dict) -> list[str]:
    return [
        f"{agg['pa']:.2f}",
        f"{agg['la']:.2f}",
        f"{agg['ma']:.2f}",
        f"{agg['ald']:.2f}",
        f"{agg['dea']:.2f}",
        f"{agg['bleu4']:.2f}",
        f"{agg['rouge_l']:.2f}",
    ]


def render_static_table(record: dict) -> str:
    """Static report table: overall, per-project (corpus order), per-length."""
    lines = ["STATIC EVALUATION"]
    tool = record.get("tool") or "-"
    lines.append(f"tool: {tool}    instances: {record['overall']['n']}")
    lines.append("")

    def section(title: str, label_header: str, rows: list[tuple[str, dict]]) -> None:
        lines.append(title)
        label_width = max(len(label_header), *(len(label) for label, _ in rows))
        widths = [max(len(c), 7) for c in STATIC_COLUMNS]
        lines.append(
            label_header.ljust(label_width) + "  " + _fmt_row(list(STATIC_COLUMNS), widths)
        )
        for label, agg in rows:
            lines.append(label.ljust(label_width) + "  " + _fmt_row(_static_cells(agg), widths))
        lines.append("")

    section("overall", "", [("", record["overall"])])
    by_project = record.get("by_project", [])
    if by_project:
        section("by project", "project", [(r["project"], r) for r in by_project])
    by_length = record.get("by_length", [])
    if by_length:
        section("by length", "length", [(r["length_class"], r) for r in by_length])
    return "\n".join(lines).rstrip() + "\n"


def render_dynamic_table(record: dict) -> str:
    """Dynamic report table: CSR, log-file similarity, FPLR/FNLR."""
    lines = ["DYNAMIC EVALUATION"]
    tool = record.get("tool") or "-"
    lines.append(
        f"tool: {tool}    instances: {record['n_total']}    compiled: {record['n_compiled']}"
    )
    lines.append("")
    cells = [
        f"{record['csr']:.1f}%",
        f"{record['lfs_cos']:.2f}",
        f"{record['lfs_bleu1']:.2f}",
        f"{record['lfs_bleu2']:.2f}",
        f"{record['lfs_bleu3']:.2f}",
        f"{record['lfs_bleu4']:.2f}",
        f"{record['lfs_rouge1']:.2f}",
        f"{record['lfs_rouge2']:.2f}",
        f"{record['lfs_rouge_l']:.2f}",
        f"{record['fplr']:.2f}%",
        f"{record['fnlr']:.2f}%",
    ]
    widths = [max(len(c), len(h)) for c, h in zip(cells, DYNAMIC_COLUMNS)]
    lines.append(_fmt_row(list(DYNAMIC_COLUMNS), widths))
    lines.append(_fmt_row(cells, widths))
    return "\n".join(lines) + "\n"


def render_report(record: dict, fmt: str = "table") -> str:
    """Render a persisted report record as ``table`` or ``records`` (JSON)."""
    if fmt == "records":
        return dump_record(record)
    if "overall" in record:
        return render_static_table(record)
    if "csr" in record:
        return render_dynamic_table(record)
    raise ValueError("record is neither a static nor a dynamic report")


def dump_record(record: dict) -> str:
    """Canonical JSON serialization: sorted keys, stable floats, newline end."""
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


def write_record(record: dict, path: Path) -> None:
    Path(path).write_text(dump_record(record), encoding="utf-8")


def write_jsonl(records: list[dict], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
