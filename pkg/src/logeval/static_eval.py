"""Static scoring of predicted log statements: position, level, message,
dynamic expressions, and static-text similarity, with per-project and
per-length-class aggregation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import metrics
from .corpus import CorpusInstance
from .logmodel import (
    DEFAULT_CALL_SPEC,
    LoggerCallSpec,
    LogModelError,
    LogStatement,
    level_distance,
    normalize_ws,
    parse_log_statement,
)

WORST_LEVEL_DISTANCE = 5


class UnknownInstance(KeyError):
    """A prediction references an instance id absent from the corpus."""


class DuplicatePrediction(ValueError):
    """More than one prediction for the same instance id."""


class MultiStatementPrediction(ValueError):
    """Static evaluation accepts exactly one statement per prediction."""


@dataclass(frozen=True)
class PredictionRecord:
    """One tool's output for one instance.

    ``statements`` is non-empty; static evaluation requires exactly one,
    dynamic evaluation accepts several.
    """

    instance_id: str
    insert_pos: int
    statements: tuple[str, ...]
    tool: str = ""

    def __post_init__(self) -> None:
        if not self.statements:
            raise ValueError("prediction must contain at least one statement")


@dataclass(frozen=True)
class InstanceScore:
    """Per-instance static scores; ``status`` is ok/unparseable/missing."""

    instance_id: str
    project: str
    length_class: str
    status: str
    position_ok: bool
    level_ok: bool
    level_distance: int
    message_ok: bool
    dea_ok: bool
    bleu4: float
    rouge_l: float

    def to_record(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "project": self.project,
            "length_class": self.length_class,
            "status": self.status,
            "position_ok": self.position_ok,
            "level_ok": self.level_ok,
            "level_distance": self.level_distance,
            "message_ok": self.message_ok,
            "dea_ok": self.dea_ok,
            "bleu4": self.bleu4,
            "rouge_l": self.rouge_l,
        }


def score_position(pred: PredictionRecord, instance: CorpusInstance) -> bool:
    """True iff the predicted insertion point equals the oracle position."""
    if pred.instance_id != instance.id:
        raise UnknownInstance(pred.instance_id)
    return pred.insert_pos == instance.log_pos


def _canonical_message(stmt: LogStatement) -> tuple[str, tuple[str, ...]]:
    return normalize_ws(stmt.static_text), tuple(normalize_ws(e) for e in stmt.dynamic_exprs)


def _similarity_pair(cand_text: str, ref_text: str) -> tuple[float, float]:
    """BLEU-4 and ROUGE-L over static-text tokens, with empty-side guards."""
    cand = metrics.tokenize(cand_text)
    ref = metrics.tokenize(ref_text)
    if not cand and not ref:
        return 1.0, 1.0
    if not cand or not ref:
        return 0.0, 0.0
    return metrics.bleu(cand, ref, max_n=4), metrics.rouge_l(cand, ref)


def _zero_score(instance: CorpusInstance, status: str, position_ok: bool = False) -> InstanceScore:
    return InstanceScore(
        instance_id=instance.id,
        project=instance.project,
        length_class=instance.length_class,
        status=status,
        position_ok=position_ok,
        level_ok=False,
        level_distance=WORST_LEVEL_DISTANCE,
        message_ok=False,
        dea_ok=False,
        bleu4=0.0,
        rouge_l=0.0,
    )


def score_instance(
    pred: PredictionRecord,
    instance: CorpusInstance,
    spec: LoggerCallSpec = DEFAULT_CALL_SPEC,
    ma_includes_level: bool = True,
) -> InstanceScore:
    """Score one prediction against its instance.

    Message accuracy compares the whole statement content (level, template,
    and dynamic expressions) after whitespace normalization, so a message
    match subsumes both the level match and the expression match. Set
    ``ma_includes_level=False`` to compare the message text alone.
    An unparseable prediction scores zero everywhere with the worst level
    distance; it is recorded, not raised.
    """
    if pred.instance_id != instance.id:
        raise UnknownInstance(pred.instance_id)
    if len(pred.statements) != 1:
        raise MultiStatementPrediction(
            f"{pred.instance_id}: static evaluation takes exactly one statement, "
            f"got {len(pred.statements)}"
        )
    position_ok = score_position(pred, instance)
    try:
        predicted = parse_log_statement(pred.statements[0], spec)
    except LogModelError:
        return _zero_score(instance, "unparseable", position_ok)

    oracle = instance.oracle
    level_ok = predicted.level == oracle.level
    distance = level_distance(predicted.level, oracle.level)
    pred_msg = _canonical_message(predicted)
    oracle_msg = _canonical_message(oracle)
    dea_ok = pred_msg[1] == oracle_msg[1]
    message_ok = pred_msg == oracle_msg and (level_ok or not ma_includes_level)
    bleu4, rouge = _similarity_pair(predicted.static_text, oracle.static_text)
    return InstanceScore(
        instance_id=instance.id,
        project=instance.project,
        length_class=instance.length_class,
        status="ok",
        position_ok=position_ok,
        level_ok=level_ok,
        level_distance=distance,
        message_ok=message_ok,
        dea_ok=dea_ok,
        bleu4=bleu4,
        rouge_l=rouge,
    )


@dataclass(frozen=True)
class StaticSlice:
    """Aggregated static metrics over one group of instances."""

    n: int
    pa: float
    la: float
    ma: float
    ald: float
    dea: float
    bleu4: float
    rouge_l: float

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "pa": self.pa,
            "la": self.la,
            "ma": self.ma,
            "ald": self.ald,
            "dea": self.dea,
            "bleu4": self.bleu4,
            "rouge_l": self.rouge_l,
        }


@dataclass(frozen=True)
class StaticReport:
    """Overall, per-project, and per-length-class static aggregates."""

    overall: StaticSlice
    by_project: dict[str, StaticSlice]
    by_length: dict[str, StaticSlice]
    tool: str = ""

    @property
    def n_total(self) -> int:
        return self.overall.n

    def to_record(self) -> dict:
        # by_project keeps corpus order (dict insertion order), so it is a list.
        return {
            "tool": self.tool,
            "overall": self.overall.to_record(),
            "by_project": [
                {"project": name, **agg.to_record()} for name, agg in self.by_project.items()
            ],
            "by_length": [
                {"length_class": name, **agg.to_record()}
                for name, agg in self.by_length.items()
                if name in ("short", "long")
            ],
        }


def _slice_of(scores: Sequence[InstanceScore]) -> StaticSlice:
    n = len(scores)
    return StaticSlice(
        n=n,
        pa=100.0 * sum(s.position_ok for s in scores) / n,
        la=100.0 * sum(s.level_ok for s in scores) / n,
        ma=100.0 * sum(s.message_ok for s in scores) / n,
        ald=sum(s.level_distance for s in scores) / n,
        dea=100.0 * sum(s.dea_ok for s in scores) / n,
        bleu4=sum(s.bleu4 for s in scores) / n,
        rouge_l=sum(s.rouge_l for s in scores) / n,
    )


def aggregate(scores: Sequence[InstanceScore], tool: str = "") -> StaticReport:
    """Fold per-instance scores into overall/per-project/per-length reports."""
    if not scores:
        raise metrics.EmptyInput("no scores to aggregate")
    projects: dict[str, list[InstanceScore]] = {}
    lengths: dict[str, list[InstanceScore]] = {}
    for score in scores:
        projects.setdefault(score.project, []).append(score)
        lengths.setdefault(score.length_class, []).append(score)
    return StaticReport(
        overall=_slice_of(scores),
        by_project={name: _slice_of(group) for name, group in projects.items()},
        by_length={
            name: _slice_of(lengths[name]) for name in ("short", "long") if name in lengths
        },
        tool=tool,
    )


def evaluate_static(
    predictions: Iterable[PredictionRecord],
    instances: Sequence[CorpusInstance],
    spec: LoggerCallSpec = DEFAULT_CALL_SPEC,
    ma_includes_level: bool = True,
) -> tuple[list[InstanceScore], StaticReport]:
    """Join predictions to instances, score each, and aggregate.

    Every instance counts toward the totals: an instance with no prediction
    is scored as a zero row with status "missing", mirroring how a tool that
    produced nothing would fare.
    """
    by_id: Mapping[str, CorpusInstance] = {inst.id: inst for inst in instances}
    preds: dict[str, PredictionRecord] = {}
    tool = ""
    for pred in predictions:
        if pred.instance_id not in by_id:
            raise UnknownInstance(pred.instance_id)
        if pred.instance_id in preds:
            raise DuplicatePrediction(pred.instance_id)
        preds[pred.instance_id] = pred
        tool = tool or pred.tool
    scores = []
    for inst in instances:
        pred = preds.get(inst.id)
        if pred is None:
            scores.append(_zero_score(inst, "missing"))
        else:
            scores.append(score_instance(pred, inst, spec, ma_includes_level))
    return scores, aggregate(scores, tool=tool)
