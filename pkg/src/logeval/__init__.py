"""Evaluation harness for automatic log-statement generation tools.

Builds masked evaluation instances from source corpora, scores predicted
log statements with static metrics (position, level, message, dynamic
expressions, static-text similarity), and scores runtime behavior by
reinserting predictions, compiling, running covering unit tests, and
diffing the emitted logs against pinned oracle logs.
"""

from .corpus import (
    BadPattern,
    BadPatternFinding,
    CorpusInstance,
    RepoQualification,
    contamination_rate,
    extract_instances,
    lint_bad_patterns,
    split_by_length,
)
from .dynamic_eval import (
    BuildAdapter,
    DynamicInstance,
    DynamicReport,
    DynamicResult,
    HeaderStripper,
    aggregate_dynamic,
    build_dynamic_instances,
    evaluate_dynamic,
    evaluate_prediction,
)
from .logmodel import (
    LogLevel,
    LoggerCallSpec,
    LogStatement,
    SourceUnit,
    level_distance,
    parse_log_statement,
)
from .metrics import bleu, rouge_l, rouge_n, tfidf_cosine, tokenize
from .static_eval import (
    InstanceScore,
    PredictionRecord,
    StaticReport,
    aggregate,
    evaluate_static,
    score_instance,
    score_position,
)

__version__ = "0.1.0"

__all__ = [
    "BadPattern",
    "BadPatternFinding",
    "BuildAdapter",
    "CorpusInstance",
    "DynamicInstance",
    "DynamicReport",
    "DynamicResult",
    "HeaderStripper",
    "InstanceScore",
    "LogLevel",
    "LoggerCallSpec",
    "LogStatement",
    "PredictionRecord",
    "RepoQualification",
    "SourceUnit",
    "StaticReport",
    "aggregate",
    "aggregate_dynamic",
    "bleu",
    "build_dynamic_instances",
    "contamination_rate",
    "evaluate_dynamic",
    "evaluate_prediction",
    "evaluate_static",
    "extract_instances",
    "level_distance",
    "lint_bad_patterns",
    "parse_log_statement",
    "rouge_l",
    "rouge_n",
    "score_instance",
    "score_position",
    "split_by_length",
    "tfidf_cosine",
    "tokenize",
]
