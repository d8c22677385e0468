"""
Semantic coherence
==================

Sentences are embedded as the mean of their word vectors; coherence is the
average cosine similarity between sentences one (first order) or two
(second order) positions apart.
"""
from pathlib import Path

from docmetrics import build_document, coherence, load_embeddings

with open(Path(__file__).parent / "data" / "vectors.txt", encoding="utf-8") as fh:
    table = load_embeddings(fh)
print(f"{len(table)} vectors of dimension {table.dimension}")

on_topic = build_document("pets", "The cat purrs. The dog barks. Every pet is loved.")
off_topic = build_document("mixed", "The cat purrs. The tax invoice was paid. The dog barks.")

for doc in (on_topic, off_topic):
    c = coherence(doc, table)
    print(f"{doc.id:6s} first order {c.first_order:.3f}  second order {c.second_order:.3f}")

# Sentences without any known word are skipped, and a one-sentence text
# has no pairs at all.
print(coherence(build_document("short", "The cat purrs."), table))
