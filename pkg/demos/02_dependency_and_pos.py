"""
Dependency distance and part-of-speech proportions
==================================================

Syntactic metrics need annotated input. Here the annotations come from a
small CoNLL-U file; any UD parser output works the same way.
"""
from pathlib import Path

from docmetrics import document_dependency_stats, parse_conllu, pos_proportions, sentence_dependency_stats

data = Path(__file__).parent / "data" / "sample.conllu"
with open(data, encoding="utf-8") as fh:
    docs = parse_conllu(fh)

for doc in docs:
    print(f"--- {doc.id}: {doc.text!r}")
    for s in doc.sentences:
        print("   sentence:", sentence_dependency_stats(s, doc))
    print("   document:", document_dependency_stats(doc))
    props = pos_proportions(doc)
    print("   POS:", {tag: round(p, 3) for tag, p in sorted(props.items())})

# The relative clause in the second document pushes "man" seven positions
# away from its head "left", which raises the mean distance well above the
# short first document.
