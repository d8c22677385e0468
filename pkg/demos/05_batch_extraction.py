"""
Batch extraction to CSV
=======================

Extract several metric groups for a whole corpus into flat records. Every
record of a run carries the same keys in the same order, so the output
loads directly into any dataframe library.
"""
import io
from pathlib import Path

from docmetrics import extract_dict, metric_names, read_jsonl, write_records

with open(Path(__file__).parent / "data" / "corpus.jsonl", encoding="utf-8") as fh:
    docs = read_jsonl(fh)

selection = "descriptive,readability"
records = extract_dict(docs, selection)
print(len(metric_names(selection)), "metrics per document")

buf = io.StringIO()
write_records(records, "csv", buf)
print(buf.getvalue())

# The same run from a shell:
#   docmetrics analyze --input demos/data/corpus.jsonl --metrics descriptive,readability \
#       --output metrics.csv --jobs 4
