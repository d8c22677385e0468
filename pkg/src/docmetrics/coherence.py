"""Sentence-to-sentence semantic coherence from static word embeddings.

A sentence is represented by the unweighted mean of the vectors of its
in-vocabulary words. Sentences with no known word are dropped before
pairing, and pairs involving a zero vector are left out of the average.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO

import numpy as np

from .document import Document, Sentence
from .errors import ParseError


@dataclass(frozen=True)
class EmbeddingTable:
    dimension: int = 0
    entries: dict[str, np.ndarray] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, word: str) -> Optional[np.ndarray]:
        vec = self.entries.get(word)
        if vec is None:
            vec = self.entries.get(word.lower())
        return vec

    def scaled(self, factor: float) -> "EmbeddingTable":
        return EmbeddingTable(self.dimension, {w: v * factor for w, v in self.entries.items()})


@dataclass(frozen=True)
class CoherenceScores:
    first_order: Optional[float] = None
    second_order: Optional[float] = None

    def as_record(self) -> dict:
        return {
            "first_order_coherence": self.first_order,
            "second_order_coherence": self.second_order,
        }


def load_embeddings(stream: TextIO | Iterable[str]) -> EmbeddingTable:
    """Read the word2vec/GloVe text format.

    Each line is a word followed by its components. An optional first line
    of two integers ("N D") is a header; its D must match the vectors.
    Later duplicates overwrite earlier ones.
    """
    entries: dict[str, np.ndarray] = {}
    dim = 0
    first = True
    for lineno, line in enumerate(stream, start=1):
        parts = line.split()
        if not parts:
            continue
        if first:
            first = False
            if len(parts) == 2 and all(p.isdigit() for p in parts):
                dim = int(parts[1])
                continue
        word, comps = parts[0], parts[1:]
        try:
            vec = np.array([float(x) for x in comps], dtype=float)
        except ValueError:
            raise ParseError(f"non-numeric vector component for {word!r}", lineno) from None
        if not np.all(np.isfinite(vec)):
            raise ParseError(f"non-finite vector component for {word!r}", lineno)
        if dim == 0:
            if len(vec) == 0:
                raise ParseError(f"no vector components for {word!r}", lineno)
            dim = len(vec)
        elif len(vec) != dim:
            raise ParseError(f"expected {dim} components, got {len(vec)}", lineno)
        entries[word] = vec
    return EmbeddingTable(dim, entries)


def sentence_embedding(s: Sentence, doc: Document, table: EmbeddingTable) -> Optional[np.ndarray]:
    vecs = []
    for tok in doc.sentence_tokens(s):
        if tok.is_word:
            v = table.lookup(tok.text)
            if v is not None:
                vecs.append(v)
    if not vecs:
        return None
    return np.mean(vecs, axis=0)


def _order_coherence(embs: list[np.ndarray], norms: list[float], gap: int) -> Optional[float]:
    sims = [
        float(np.dot(embs[i], embs[i + gap])) / (norms[i] * norms[i + gap])
        for i in range(len(embs) - gap)
        if norms[i] > 0 and norms[i + gap] > 0
    ]
    if not sims:
        return None
    return min(1.0, max(-1.0, sum(sims) / len(sims)))


def coherence(doc: Document, table: EmbeddingTable) -> CoherenceScores:
    """First- and second-order coherence: mean cosine between sentences
    one resp. two positions apart."""
    embs = [e for s in doc.sentences if (e := sentence_embedding(s, doc, table)) is not None]
    norms = [float(np.linalg.norm(e)) for e in embs]
    return CoherenceScores(_order_coherence(embs, norms, 1), _order_coherence(embs, norms, 2))
