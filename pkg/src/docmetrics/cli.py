"""Command-line interface: ``docmetrics analyze`` and ``docmetrics filter``.

Exit codes: 0 success, 1 runtime or I/O error, 2 argument or configuration
error. Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Iterator, Optional, Sequence

from .coherence import load_embeddings
from .conllu import parse_conllu
from .document import Document
from .errors import ConfigError, DocMetricsError
from .extract import (
    SYNTAX_COMPONENTS,
    Resources,
    check_resources,
    extract_metrics,
    iter_jsonl,
    metric_names,
    parse_selection,
    read_text_input,
    write_records,
)
from .quality import ThresholdConfig, quality

log = logging.getLogger("docmetrics")

_CHUNKSIZE = 64


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="docmetrics", description="Document-level text metrics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_args(p):
        p.add_argument("--input", required=True, help="input file (or directory of .txt files)")
        p.add_argument("--format", choices=("text", "jsonl", "conllu"), default="jsonl")
        p.add_argument("--lang", default="en")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--lenient", action="store_true", help="skip malformed JSONL lines")

    a = sub.add_parser("analyze", help="compute metrics for every document")
    add_input_args(a)
    a.add_argument("--metrics", default="descriptive,readability,quality",
                   help="comma-separated groups: descriptive, readability, dependency, "
                        "pos, coherence, quality, or all")
    a.add_argument("--output", default="-")
    a.add_argument("--output-format", choices=("csv", "jsonl"), default="csv")
    a.add_argument("--embeddings", help="word vectors in word2vec/GloVe text format")
    a.add_argument("--config", help="quality thresholds (TOML); default profile if omitted")

    f = sub.add_parser("filter", help="split documents by quality thresholds")
    add_input_args(f)
    f.add_argument("--config", required=True, help="quality thresholds (TOML)")
    f.add_argument("--passed", required=True, help="JSONL output for passing documents")
    f.add_argument("--failed", help="JSONL output for failing documents")
    f.add_argument("--report", help="JSON summary of per-metric failure counts")
    return parser


def _read_documents(args) -> list[tuple[str, Document]]:
    """(original JSONL line, Document) pairs in input order."""
    if args.format == "jsonl":
        skipped: list[int] = []
        with open(args.input, encoding="utf-8") as fh:
            pairs = list(iter_jsonl(fh, args.lang, args.lenient, skipped))
        if skipped:
            print(f"skipped {len(skipped)} malformed line(s)", file=sys.stderr)
        return pairs
    if args.format == "conllu":
        with open(args.input, encoding="utf-8") as fh:
            docs = parse_conllu(fh, args.lang)
    else:
        docs = read_text_input(args.input, args.lang)
    return [(json.dumps({"id": d.id, "text": d.text}, ensure_ascii=False), d) for d in docs]


@contextmanager
def _open_out(path: str) -> Iterator:
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


_worker_state: dict = {}


def _init_worker(state: dict) -> None:
    _worker_state.update(state)


def _analyze_one(doc: Document) -> dict:
    return extract_metrics(doc, _worker_state["selection"], _worker_state["resources"])


def _filter_one(doc: Document) -> tuple[bool, list[str]]:
    result = quality(doc, _worker_state["config"])
    return result.passed, [k for k, ok in result.verdicts.items() if not ok]


def _map(fn, docs: Sequence[Document], jobs: int, state: dict) -> list:
    if jobs <= 1 or len(docs) < 2:
        _init_worker(state)
        return [fn(d) for d in docs]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(state,)) as ex:
        return list(ex.map(fn, docs, chunksize=_CHUNKSIZE))


def _analyze(args) -> int:
    selection = parse_selection(args.metrics)
    if args.format != "conllu" and SYNTAX_COMPONENTS & set(selection):
        raise ConfigError("dependency/pos metrics need --format conllu input")
    embeddings = None
    if args.embeddings:
        with open(args.embeddings, encoding="utf-8") as fh:
            embeddings = load_embeddings(fh)
    thresholds = ThresholdConfig.from_file(args.config) if args.config else None
    resources = Resources(embeddings=embeddings, thresholds=thresholds)
    check_resources(selection, resources)
    docs = [d for _, d in _read_documents(args)]
    records = _map(_analyze_one, docs, args.jobs, {"selection": selection, "resources": resources})
    with _open_out(args.output) as out:
        write_records(records, args.output_format, out, ["id", *metric_names(selection, resources)])
    return 0


def _filter(args) -> int:
    cfg = ThresholdConfig.from_file(args.config)
    pairs = _read_documents(args)
    outcomes = _map(_filter_one, [d for _, d in pairs], args.jobs, {"config": cfg})
    fail_counts = {name: 0 for name in [*cfg.bounds, *(f"contains_{p}" for p in cfg.contains)]}
    n_passed = 0
    with _open_out(args.passed) as passed_out, (
        open(args.failed, "w", encoding="utf-8", newline="") if args.failed else _null()
    ) as failed_out:
        for (raw, _), (ok, failed_metrics) in zip(pairs, outcomes):
            if ok:
                n_passed += 1
                passed_out.write(raw + "\n")
            else:
                if failed_out is not None:
                    failed_out.write(raw + "\n")
                for name in failed_metrics:
                    fail_counts[name] += 1
    if args.report:
        report = {
            "total": len(pairs),
            "passed": n_passed,
            "failed": len(pairs) - n_passed,
            "fail_counts": fail_counts,
        }
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    return 0


@contextmanager
def _null():
    yield None


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return _analyze(args) if args.command == "analyze" else _filter(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (DocMetricsError, OSError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())
