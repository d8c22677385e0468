"""Joint extraction of metrics into flat records, and record I/O."""
from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from .coherence import EmbeddingTable, coherence
from .descriptive import descriptive_stats
from .document import Document, build_document
from .errors import ConfigError, ParseError, RequiresSyntaxError
from .quality import ThresholdConfig, apply_thresholds, quality_metric_names, quality_values
from .readability import ReadabilityScores, readability
from .syntax import UPOS_TAGS, DocumentDependencyStats, document_dependency_stats, pos_proportions

log = logging.getLogger(__name__)

COMPONENTS = ("descriptive", "readability", "dependency", "pos", "coherence", "quality")
SYNTAX_COMPONENTS = frozenset({"dependency", "pos"})

_DESCRIPTIVE_KEYS = [
    "n_tokens",
    "n_unique_tokens",
    "n_characters",
    "proportion_unique_tokens",
    *(
        f"{name}_{stat}"
        for name in ("token_length", "sentence_length", "syllables_per_token")
        for stat in ("mean", "median", "std")
    ),
]


@dataclass(frozen=True)
class Resources:
    embeddings: Optional[EmbeddingTable] = None
    thresholds: Optional[ThresholdConfig] = None

    @property
    def quality_config(self) -> ThresholdConfig:
        return self.thresholds if self.thresholds is not None else ThresholdConfig.default()


def parse_selection(spec: str | Iterable[str]) -> tuple[str, ...]:
    """Normalize a selection ("descriptive,quality" or an iterable) to
    canonical component order. ``all`` selects everything."""
    names = [s.strip() for s in spec.split(",")] if isinstance(spec, str) else list(spec)
    names = [n for n in names if n]
    if "all" in names:
        return COMPONENTS
    unknown = [n for n in names if n not in COMPONENTS]
    if unknown:
        raise ConfigError(f"unknown metric group(s): {', '.join(unknown)}")
    if not names:
        raise ConfigError("empty metric selection")
    return tuple(c for c in COMPONENTS if c in names)


def check_resources(selection: Sequence[str], resources: Resources) -> None:
    if "coherence" in selection and resources.embeddings is None:
        raise ConfigError("coherence requires an embedding table")


def metric_names(selection: Sequence[str], resources: Resources = Resources()) -> list[str]:
    """Ordered record keys (after ``id``) produced for a selection."""
    keys: list[str] = []
    for comp in parse_selection(selection):
        if comp == "descriptive":
            keys += _DESCRIPTIVE_KEYS
        elif comp == "readability":
            keys += list(ReadabilityScores().as_record())
        elif comp == "dependency":
            keys += list(DocumentDependencyStats().as_record())
        elif comp == "pos":
            keys += [f"pos_prop_{tag}" for tag in UPOS_TAGS]
        elif comp == "coherence":
            keys += ["first_order_coherence", "second_order_coherence"]
        elif comp == "quality":
            keys += quality_metric_names(resources.quality_config)
            keys.append("passed_quality_check")
    return keys


def _syntax_part(doc: Document, comp: str) -> dict:
    if not doc.has_syntax and not doc.has_any_annotation:
        raise ConfigError(f"{comp} metrics need a syntactically annotated document (doc {doc.id!r})")
    try:
        if comp == "dependency":
            return document_dependency_stats(doc).as_record()
        props = pos_proportions(doc)
    except RequiresSyntaxError as e:
        log.warning("%s; reporting nulls", e)
        return {}
    unknown = sorted(set(props) - set(UPOS_TAGS))
    if unknown:
        log.warning("doc %r: tags outside UPOS ignored: %s", doc.id, ", ".join(unknown))
    return {f"pos_prop_{tag}": props.get(tag, 0.0) for tag in UPOS_TAGS}


def extract_metrics(
    doc: Document, selection: Sequence[str] | str, resources: Resources = Resources()
) -> dict:
    """Compute the selected metric groups for one document as a flat dict.

    The record starts with ``id`` and always carries the full key set of
    the selection; values a document cannot provide are None.
    """
    selection = parse_selection(selection)
    check_resources(selection, resources)
    out: dict = {}
    for comp in selection:
        if comp == "descriptive":
            out.update(descriptive_stats(doc).as_record())
        elif comp == "readability":
            out.update(readability(doc).as_record())
        elif comp in SYNTAX_COMPONENTS:
            out.update(_syntax_part(doc, comp))
        elif comp == "coherence":
            out.update(coherence(doc, resources.embeddings).as_record())
        elif comp == "quality":
            cfg = resources.quality_config
            result = apply_thresholds(quality_values(doc, cfg), cfg)
            out.update(result.values.as_record())
            out["passed_quality_check"] = result.passed
    record = {"id": doc.id}
    for key in metric_names(selection, resources):
        record[key] = out.get(key)
    return record


def extract_dict(
    docs: Iterable[Document], selection: Sequence[str] | str, resources: Resources = Resources()
) -> list[dict]:
    return [extract_metrics(d, selection, resources) for d in docs]


def iter_jsonl(
    stream: TextIO | Iterable[str], lang: str = "en", lenient: bool = False, skipped: Optional[list] = None
) -> Iterator[tuple[str, Document]]:
    """Yield ``(raw_line, Document)`` for each JSON object line.

    Blank lines are ignored. With ``lenient`` malformed lines are skipped
    and their line numbers appended to ``skipped``; otherwise they raise
    ParseError.
    """
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            if not isinstance(obj, dict):
                raise ParseError("expected a JSON object", lineno)
            text = obj.get("text")
            if not isinstance(text, str):
                raise ParseError("missing string field 'text'", lineno)
            doc_id = obj.get("id", lineno)
            doc_id = doc_id if isinstance(doc_id, str) else json.dumps(doc_id)
        except (json.JSONDecodeError, ParseError) as e:
            if not lenient:
                if isinstance(e, ParseError):
                    raise
                raise ParseError(f"invalid JSON: {e.msg}", lineno) from None
            log.warning("skipping line %d: %s", lineno, e)
            if skipped is not None:
                skipped.append(lineno)
            continue
        yield line, build_document(doc_id, text, lang)


def read_jsonl(stream: TextIO | Iterable[str], lang: str = "en", lenient: bool = False) -> list[Document]:
    """Documents from JSONL with a required "text" and optional "id" field.

    A missing id defaults to the 1-based line number.
    """
    return [doc for _, doc in iter_jsonl(stream, lang, lenient)]


def read_text_input(path: str | Path, lang: str = "en") -> list[Document]:
    """One document per ``.txt`` file; a directory is read in name order."""
    path = Path(path)
    files = sorted(p for p in path.iterdir() if p.suffix == ".txt") if path.is_dir() else [path]
    return [build_document(p.stem, p.read_text(encoding="utf-8"), lang) for p in files]


def format_csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        s = f"{value:.6f}".rstrip("0").rstrip(".")
        return "0" if s in ("-0", "") else s
    return str(value)


def write_records(
    records: Sequence[dict], format: str, sink: TextIO, fieldnames: Optional[Sequence[str]] = None
) -> None:
    """Write records as CSV (header + rows) or JSONL.

    CSV floats are rounded to 6 decimals with trailing zeros dropped and
    nulls become empty cells; JSONL keeps full precision and JSON null.
    ``fieldnames`` sets the CSV header when there are no records.
    """
    if format == "jsonl":
        for rec in records:
            sink.write(json.dumps(rec, ensure_ascii=False) + "\n")
        return
    if format != "csv":
        raise ConfigError(f"unknown output format {format!r}")
    if fieldnames is None:
        fieldnames = list(records[0]) if records else []
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(fieldnames)
    for rec in records:
        if list(rec) != list(fieldnames):
            raise ValueError(f"record {rec.get('id')!r} does not match the header keys")
        writer.writerow([format_csv_value(rec[k]) for k in fieldnames])
