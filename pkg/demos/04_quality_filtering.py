"""
Quality heuristics and corpus filtering
=======================================

Compute the repetition and heuristic quality signals for a few documents,
judge them against the default threshold profile, then run the same
filter through the command-line interface.
"""
import json
import tempfile
from pathlib import Path

from docmetrics import ThresholdConfig, quality, read_jsonl
from docmetrics.cli import cli_main

here = Path(__file__).parent
with open(here / "data" / "corpus.jsonl", encoding="utf-8") as fh:
    docs = read_jsonl(fh)

profile = ThresholdConfig.default()
for doc in docs:
    result = quality(doc, profile)
    failed = [name for name, ok in result.verdicts.items() if not ok]
    v = result.values
    print(f"{doc.id:12s} passed={result.passed!s:5s} dup_lines={v.duplicate_line_fraction:.2f} "
          f"top_2gram={v.top_ngram_chr_fraction[2]:.2f} failed={failed}")

# A custom profile only checks what it names. Bounds are inclusive and a
# null value (e.g. no lines at all) fails any bounded check.
config = """
[thresholds]
duplicate_line_fraction.max = 0.3
proportion_bullet_lines.max = 0.5

[contains]
"lorem ipsum" = false
"""
with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    (tmp / "strict.toml").write_text(config)
    code = cli_main([
        "filter", "--input", str(here / "data" / "corpus.jsonl"),
        "--config", str(tmp / "strict.toml"),
        "--passed", str(tmp / "passed.jsonl"), "--failed", str(tmp / "failed.jsonl"),
        "--report", str(tmp / "report.json"),
    ])
    print("exit code", code)
    print(json.loads((tmp / "report.json").read_text()))
    print("kept:", [json.loads(line)["id"] for line in (tmp / "passed.jsonl").read_text().splitlines()])
