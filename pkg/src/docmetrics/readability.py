"""Readability indices computed from word, sentence and syllable counts.

Formulas (W words, S sentences, C alphanumeric characters, Y syllables,
H words with >= 3 syllables, L words with > 6 alphanumeric characters)::

    gunning_fog                 = 0.4 * (W/S + 100 * H/W)
    smog                        = 1.043 * sqrt(30 * H/S) + 3.1291
    flesch_reading_ease         = 206.835 - 1.015 * W/S - 84.6 * Y/W
    flesch_kincaid_grade        = 0.39 * W/S + 11.8 * Y/W - 15.59
    automated_readability_index = 4.71 * C/W + 0.5 * W/S - 21.43
    coleman_liau_index          = 0.0588 * 100*C/W - 0.296 * 100*S/W - 15.8
    lix                         = W/S + 100 * L/W
    rix                         = L/S

SMOG was calibrated on 30-sentence samples. It is still reported for
shorter documents, where it is much less reliable.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

from .document import Document
from .syllables import rules_for, syllable_counter


@dataclass(frozen=True)
class ReadabilityCounts:
    n_words: int = 0
    n_sentences: int = 0
    n_characters: int = 0
    n_syllables: int = 0
    n_hard_words: int = 0
    n_long_words: int = 0


@dataclass(frozen=True)
class ReadabilityScores:
    gunning_fog: Optional[float] = None
    smog: Optional[float] = None
    flesch_reading_ease: Optional[float] = None
    flesch_kincaid_grade: Optional[float] = None
    automated_readability_index: Optional[float] = None
    coleman_liau_index: Optional[float] = None
    lix: Optional[float] = None
    rix: Optional[float] = None

    def as_record(self) -> dict:
        return asdict(self)


def readability_counts(doc: Document) -> ReadabilityCounts:
    """Aggregate the counts used by every index.

    Only sentences that contain at least one word are counted.
    """
    syllables = syllable_counter(rules_for(doc.lang))
    n_words = n_chars = n_syl = n_hard = n_long = 0
    for tok in doc.tokens:
        if not tok.is_word:
            continue
        n_words += 1
        text = tok.text
        alnum = len(text) if text.isalnum() else sum(1 for ch in text if ch.isalnum())
        n_chars += alnum
        syl = syllables(text)
        n_syl += syl
        if syl >= 3:
            n_hard += 1
        if alnum > 6:
            n_long += 1
    n_sent = sum(1 for toks in doc.iter_sentence_tokens() if any(t.is_word for t in toks))
    return ReadabilityCounts(n_words, n_sent, n_chars, n_syl, n_hard, n_long)


def compute_readability(c: ReadabilityCounts) -> ReadabilityScores:
    W, S = c.n_words, c.n_sentences
    if W == 0 or S == 0:
        return ReadabilityScores()
    C, Y, H, L = c.n_characters, c.n_syllables, c.n_hard_words, c.n_long_words
    wps = W / S
    spw = Y / W
    return ReadabilityScores(
        gunning_fog=0.4 * (wps + 100 * H / W),
        smog=1.043 * math.sqrt(H * 30 / S) + 3.1291,
        flesch_reading_ease=206.835 - 1.015 * wps - 84.6 * spw,
        flesch_kincaid_grade=0.39 * wps + 11.8 * spw - 15.59,
        automated_readability_index=4.71 * (C / W) + 0.5 * wps - 21.43,
        coleman_liau_index=0.0588 * (100 * C / W) - 0.296 * (100 * S / W) - 15.8,
        lix=wps + 100 * L / W,
        rix=L / S,
    )


def readability(doc: Document) -> ReadabilityScores:
    return compute_readability(readability_counts(doc))
