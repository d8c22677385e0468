"""Dependency distance and part-of-speech proportions.

Dependency distance of a token at sentence position i with head h is
|i - h|; root tokens (h = 0) count as distance 0 and stay in the average.
Punctuation is included, as UD attaches it like any other token.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .document import Document, Sentence
from .errors import RequiresSyntaxError

UPOS_TAGS = (
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
)


@dataclass(frozen=True)
class SentenceDependencyStats:
    mean_distance: float
    prop_adjacent: float


@dataclass(frozen=True)
class DocumentDependencyStats:
    dependency_distance_mean: Optional[float] = None
    dependency_distance_std: Optional[float] = None
    prop_adjacent_mean: Optional[float] = None
    prop_adjacent_std: Optional[float] = None

    def as_record(self) -> dict:
        return asdict(self)


def _require_syntax(doc: Document, what: str) -> None:
    if doc.tokens and not doc.has_syntax:
        raise RequiresSyntaxError(f"{what} requires UPOS tags and heads on every token (doc {doc.id!r})")


def sentence_dependency_stats(s: Sentence, doc: Document) -> SentenceDependencyStats:
    toks = doc.sentence_tokens(s)
    if any(t.head is None for t in toks):
        raise RequiresSyntaxError(f"sentence {s} of doc {doc.id!r} lacks head annotations")
    dists = [abs(i - t.head) if t.head > 0 else 0 for i, t in enumerate(toks, start=1)]
    n = len(dists)
    return SentenceDependencyStats(sum(dists) / n, sum(1 for d in dists if d == 1) / n)


def document_dependency_stats(doc: Document) -> DocumentDependencyStats:
    """Mean and population std of per-sentence distance and adjacency."""
    _require_syntax(doc, "dependency distance")
    if not doc.sentences:
        return DocumentDependencyStats()
    per = [sentence_dependency_stats(s, doc) for s in doc.sentences]
    dist = np.array([p.mean_distance for p in per])
    adj = np.array([p.prop_adjacent for p in per])
    return DocumentDependencyStats(
        float(dist.mean()), float(dist.std()), float(adj.mean()), float(adj.std())
    )


def pos_proportions(doc: Document) -> dict[str, float]:
    """Share of each UPOS tag over all tokens, punctuation included."""
    if any(t.upos is None for t in doc.tokens):
        raise RequiresSyntaxError(f"POS proportions require UPOS tags (doc {doc.id!r})")
    n = len(doc.tokens)
    if n == 0:
        return {}
    counts = Counter(t.upos for t in doc.tokens)
    return {tag: c / n for tag, c in counts.items()}
