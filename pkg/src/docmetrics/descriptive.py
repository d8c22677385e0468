"""Counts and distributional summaries over word tokens."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .document import Document
from .syllables import rules_for, syllable_counter


@dataclass(frozen=True)
class SummaryStats:
    mean: Optional[float]
    median: Optional[float]
    std: Optional[float]

    @classmethod
    def of(cls, values: Sequence[float]) -> "SummaryStats":
        """Mean, median and population standard deviation; all None if empty."""
        if len(values) == 0:
            return cls(None, None, None)
        arr = np.asarray(values, dtype=float)
        return cls(float(arr.mean()), float(np.median(arr)), float(arr.std()))


@dataclass(frozen=True)
class DescriptiveStats:
    n_tokens: int
    n_unique_tokens: int
    n_characters: int
    proportion_unique_tokens: Optional[float]
    token_length: SummaryStats
    sentence_length: SummaryStats
    syllables: SummaryStats

    def as_record(self) -> dict:
        rec = {
            "n_tokens": self.n_tokens,
            "n_unique_tokens": self.n_unique_tokens,
            "n_characters": self.n_characters,
            "proportion_unique_tokens": self.proportion_unique_tokens,
        }
        for name, s in (
            ("token_length", self.token_length),
            ("sentence_length", self.sentence_length),
            ("syllables_per_token", self.syllables),
        ):
            rec[f"{name}_mean"] = s.mean
            rec[f"{name}_median"] = s.median
            rec[f"{name}_std"] = s.std
        return rec


def descriptive_stats(doc: Document) -> DescriptiveStats:
    """Token, uniqueness and character counts plus length distributions.

    Only word tokens are counted; uniqueness is case-insensitive and
    ``n_characters`` sums the lengths of word tokens (no punctuation or
    whitespace). Sentences without any word are left out of
    ``sentence_length``.
    """
    words = [t.text for t in doc.tokens if t.is_word]
    n = len(words)
    syllables = syllable_counter(rules_for(doc.lang))
    lengths = [len(w) for w in words]
    sent_lengths = []
    for toks in doc.iter_sentence_tokens():
        k = sum(1 for t in toks if t.is_word)
        if k:
            sent_lengths.append(k)
    n_unique = len({w.lower() for w in words})
    return DescriptiveStats(
        n_tokens=n,
        n_unique_tokens=n_unique,
        n_characters=sum(lengths),
        proportion_unique_tokens=n_unique / n if n else None,
        token_length=SummaryStats.of(lengths),
        sentence_length=SummaryStats.of(sent_lengths),
        syllables=SummaryStats.of([syllables(w) for w in words]),
    )
