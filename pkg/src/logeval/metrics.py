"""Text-similarity kernels: sentence-level BLEU, ROUGE-N/L, TF-IDF cosine.

All metrics share one tokenizer (lowercase, word-and-placeholder tokens)
so that scores computed by different metrics are comparable. BLEU is the
unsmoothed sentence-level variant: any zero n-gram precision zeroes the
whole score.
"""

from __future__ import annotations

import math
import re
from collections import Counter


class EmptyInput(ValueError):
    """Raised when a metric receives an empty token sequence."""


_TOKEN_RE = re.compile(r"\{\}|[a-z0-9_]+")


def tokenize(text: str) -> list[str]:
    """Lowercase and split on whitespace/punctuation; `{}` stays one token."""
    return _TOKEN_RE.findall(text.lower())


def _ngram_counts(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def bleu(candidate: list[str], reference: list[str], max_n: int = 4) -> float:
    """Sentence-level BLEU without smoothing.

    Geometric mean of modified n-gram precisions for n=1..max_n times the
    brevity penalty. A candidate shorter than max_n tokens has no max_n-grams,
    so the score is 0 by the unsmoothed rule.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if not candidate or not reference:
        raise EmptyInput("bleu requires non-empty candidate and reference")
    log_sum = 0.0
    for n in range(1, max_n + 1):
        total = len(candidate) - n + 1
        if total <= 0:
            return 0.0
        cand_counts = _ngram_counts(candidate, n)
        ref_counts = _ngram_counts(reference, n)
        clipped = sum(min(c, ref_counts[g]) for g, c in cand_counts.items())
        if clipped == 0:
            return 0.0
        log_sum += math.log(clipped / total)
    c, r = len(candidate), len(reference)
    brevity = 1.0 if c > r else math.exp(1.0 - r / c)
    return brevity * math.exp(log_sum / max_n)


def rouge_n(candidate: list[str], reference: list[str], n: int) -> float:
    """F1 over n-gram overlap counts (clipped by per-sequence multiplicity)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not candidate or not reference:
        raise EmptyInput("rouge_n requires non-empty candidate and reference")
    cand_counts = _ngram_counts(candidate, n)
    ref_counts = _ngram_counts(reference, n)
    overlap = sum(min(c, ref_counts[g]) for g, c in cand_counts.items())
    n_cand = sum(cand_counts.values())
    n_ref = sum(ref_counts.values())
    if n_cand == 0 or n_ref == 0:
        return 0.0
    precision = overlap / n_cand
    recall = overlap / n_ref
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _lcs_length(a: list[str], b: list[str]) -> int:
    # One-row DP; O(len(a) * len(b)) time, O(len(b)) space.
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def rouge_l(candidate: list[str], reference: list[str]) -> float:
    """F1 derived from the longest common subsequence length."""
    if not candidate or not reference:
        raise EmptyInput("rouge_l requires non-empty candidate and reference")
    lcs = _lcs_length(candidate, reference)
    precision = lcs / len(candidate)
    recall = lcs / len(reference)
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def tfidf_cosine(doc_a: list[str], doc_b: list[str]) -> float:
    """Cosine between TF-IDF vectors fitted on the two-document corpus.

    Smoothed IDF: idf(t) = ln((1 + N) / (1 + df(t))) + 1 with N = 2, so shared
    vocabulary never produces a zero vector. Returns 0.0 when either document
    is empty (by contract, not an error).
    """
    if not doc_a or not doc_b:
        return 0.0
    counts_a = Counter(doc_a)
    counts_b = Counter(doc_b)
    vocab = set(counts_a) | set(counts_b)
    dot = 0.0
    norm_a = 0.0
    norm_b = 0.0
    for term in vocab:
        df = (term in counts_a) + (term in counts_b)
        idf = math.log(3.0 / (1 + df)) + 1.0
        wa = counts_a[term] * idf
        wb = counts_b[term] * idf
        dot += wa * wb
        norm_a += wa * wa
        norm_b += wb * wb
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (math.sqrt(norm_a) * math.sqrt(norm_b))
