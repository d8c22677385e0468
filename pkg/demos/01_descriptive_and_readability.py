"""
Descriptive statistics and readability
======================================

Build a document from raw text and look at its counts, length
distributions and the eight readability indices.
"""
from pprint import pprint

from docmetrics import build_document, descriptive_stats, readability, readability_counts

text = (
    "The cat sat on the mat. It was happy. "
    "Everybody understands readability, although nobody agrees on how to measure it."
)
doc = build_document("demo", text)

# Tokens keep their character offsets; punctuation is tokenized but only
# word tokens enter the statistics.
print([t.text for t in doc.tokens[:8]])
print(len(doc.sentences), "sentences")

stats = descriptive_stats(doc)
print(stats.n_tokens, "words,", stats.n_unique_tokens, "distinct (case-insensitive)")
print("sentence length mean/median/std:", stats.sentence_length)

# The indices are computed from a handful of counts, so the counts are
# exposed as well.
print(readability_counts(doc))
pprint(readability(doc).as_record())

# SMOG is meant for samples of 30 sentences; on a three-sentence text it is
# reported but should be read with care.
