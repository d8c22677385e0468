"""Heuristic quality signals, repetition metrics and threshold filtering.

Character fractions for n-grams count the characters of the (lowercased)
word tokens involved; whitespace between tokens is not counted. Lines are
split on "\\n"; paragraphs on blank lines. Only non-empty lines and
paragraphs enter the line-based fractions.
"""
from __future__ import annotations

import math
import re
import sys
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from operator import itemgetter
from importlib import resources
from os import PathLike
from typing import Mapping, Optional, Sequence

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .document import Document
from .errors import ConfigError

TOP_NGRAM_RANGE = (2, 3, 4)
DUP_NGRAM_RANGE = (5, 6, 7, 8, 9, 10)
BULLETS = ("-", "*", "•", "‣", "◦")
ELLIPSES = ("...", "…")
DEFAULT_PROBES = ("lorem ipsum", "{")
DEFAULT_SYMBOLS = ("#", "...")
# a symbol key that stands for several surface forms
SYMBOL_ALIASES = {"...": ELLIPSES}

_PARAGRAPH_SPLIT = re.compile(r"\n\s*\n")


def _load_stop_words() -> frozenset[str]:
    text = resources.files("docmetrics").joinpath("data/stopwords_en.txt").read_text("utf-8")
    return frozenset(w for w in text.split() if w)


STOP_WORDS = _load_stop_words()


@dataclass(frozen=True)
class Bounds:
    min: Optional[float] = None
    max: Optional[float] = None

    def admits(self, value) -> bool:
        if self.min is None and self.max is None:
            return True
        if value is None:
            return False
        if self.min is not None and value < self.min:
            return False
        if self.max is not None and value > self.max:
            return False
        return True


@dataclass(frozen=True)
class ThresholdConfig:
    """Bounds per quality metric plus the probe, symbol and stop-word lists.

    ``bounds`` keys are flat metric names as they appear in extracted
    records (e.g. ``top_ngram_chr_fraction_2``). ``contains`` maps a probe
    string to the value it must have.
    """

    bounds: Mapping[str, Bounds] = field(default_factory=dict)
    contains: Mapping[str, bool] = field(default_factory=dict)
    probes: tuple[str, ...] = DEFAULT_PROBES
    symbols: tuple[str, ...] = DEFAULT_SYMBOLS
    stop_words: frozenset[str] = STOP_WORDS

    def __post_init__(self):
        for name, b in self.bounds.items():
            if b.min is not None and b.max is not None and b.min > b.max:
                raise ConfigError(f"{name}: min {b.min} exceeds max {b.max}")
        missing = [p for p in self.contains if p not in self.probes]
        if missing:
            object.__setattr__(self, "probes", tuple(self.probes) + tuple(missing))
        known = set(quality_metric_names(self))
        unknown = sorted(set(self.bounds) - known)
        if unknown:
            raise ConfigError(f"unknown quality metric(s): {', '.join(unknown)}")

    @classmethod
    def from_mapping(cls, data: Mapping) -> "ThresholdConfig":
        data = dict(data)
        kwargs = {}
        for key in ("probes", "symbols"):
            if key in data:
                kwargs[key] = tuple(_str_list(data.pop(key), key))
        if "stop_words" in data:
            kwargs["stop_words"] = frozenset(
                w.lower() for w in _str_list(data.pop("stop_words"), "stop_words")
            )
        bounds = {}
        for name, spec in data.pop("thresholds", {}).items():
            if not isinstance(spec, Mapping) or set(spec) - {"min", "max"}:
                raise ConfigError(f"{name}: expected a table with 'min' and/or 'max'")
            bounds[name] = Bounds(_number(spec.get("min"), name), _number(spec.get("max"), name))
        contains = {}
        for probe, required in data.pop("contains", {}).items():
            if not isinstance(required, bool):
                raise ConfigError(f"contains {probe!r}: expected true or false")
            contains[probe] = required
        if data:
            raise ConfigError(f"unknown configuration key(s): {', '.join(sorted(data))}")
        return cls(bounds=bounds, contains=contains, **kwargs)

    @classmethod
    def from_file(cls, path: str | PathLike) -> "ThresholdConfig":
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"{path}: {e}") from None
        return cls.from_mapping(data)

    @classmethod
    def default(cls) -> "ThresholdConfig":
        """The shipped profile (``data/default_thresholds.toml``)."""
        return _default_config()

    def relaxed(self, name: str, min=..., max=...) -> "ThresholdConfig":
        """Copy with one metric's bounds replaced (``None`` removes a bound)."""
        old = self.bounds.get(name, Bounds())
        new = Bounds(old.min if min is ... else min, old.max if max is ... else max)
        return ThresholdConfig(
            {**self.bounds, name: new}, self.contains, self.probes, self.symbols, self.stop_words
        )


@lru_cache(maxsize=1)
def _default_config() -> ThresholdConfig:
    text = resources.files("docmetrics").joinpath("data/default_thresholds.toml").read_text("utf-8")
    return ThresholdConfig.from_mapping(tomllib.loads(text))


def _str_list(value, key: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ConfigError(f"{key}: expected a list of strings")
    return value


def _number(value, name: str) -> Optional[float]:
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)) or math.isnan(value):
        raise ConfigError(f"{name}: bound must be a number, got {value!r}")
    return value


def quality_metric_names(cfg: ThresholdConfig) -> list[str]:
    return [
        "n_stop_words",
        "alpha_ratio",
        "mean_word_length",
        "doc_length",
        "proportion_ellipsis_lines",
        "proportion_bullet_lines",
        *(f"symbol_to_word_ratio_{s}" for s in cfg.symbols),
        *(f"contains_{p}" for p in cfg.probes),
        "duplicate_line_fraction",
        "duplicate_line_chr_fraction",
        "duplicate_paragraph_fraction",
        "duplicate_paragraph_chr_fraction",
        *(f"top_ngram_chr_fraction_{n}" for n in TOP_NGRAM_RANGE),
        *(f"duplicate_ngram_chr_fraction_{n}" for n in DUP_NGRAM_RANGE),
    ]


@dataclass(frozen=True)
class QualityValues:
    n_stop_words: int = 0
    alpha_ratio: Optional[float] = None
    mean_word_length: Optional[float] = None
    doc_length: int = 0
    proportion_ellipsis_lines: Optional[float] = None
    proportion_bullet_lines: Optional[float] = None
    symbol_to_word_ratio: dict[str, Optional[float]] = field(default_factory=dict)
    contains: dict[str, bool] = field(default_factory=dict)
    duplicate_line_fraction: Optional[float] = None
    duplicate_paragraph_fraction: Optional[float] = None
    duplicate_line_chr_fraction: Optional[float] = None
    duplicate_paragraph_chr_fraction: Optional[float] = None
    top_ngram_chr_fraction: dict[int, float] = field(default_factory=dict)
    duplicate_ngram_chr_fraction: dict[int, float] = field(default_factory=dict)

    def as_record(self) -> dict:
        rec = {
            "n_stop_words": self.n_stop_words,
            "alpha_ratio": self.alpha_ratio,
            "mean_word_length": self.mean_word_length,
            "doc_length": self.doc_length,
            "proportion_ellipsis_lines": self.proportion_ellipsis_lines,
            "proportion_bullet_lines": self.proportion_bullet_lines,
        }
        rec.update({f"symbol_to_word_ratio_{s}": v for s, v in self.symbol_to_word_ratio.items()})
        rec.update({f"contains_{p}": v for p, v in self.contains.items()})
        rec["duplicate_line_fraction"] = self.duplicate_line_fraction
        rec["duplicate_line_chr_fraction"] = self.duplicate_line_chr_fraction
        rec["duplicate_paragraph_fraction"] = self.duplicate_paragraph_fraction
        rec["duplicate_paragraph_chr_fraction"] = self.duplicate_paragraph_chr_fraction
        rec.update({f"top_ngram_chr_fraction_{n}": v for n, v in self.top_ngram_chr_fraction.items()})
        rec.update(
            {f"duplicate_ngram_chr_fraction_{n}": v for n, v in self.duplicate_ngram_chr_fraction.items()}
        )
        return rec


@dataclass(frozen=True)
class QualityResult:
    values: QualityValues
    verdicts: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())


def _ratio(num, den) -> Optional[float]:
    return num / den if den else None


def _nonempty_lines(text: str) -> list[str]:
    return [s for s in (line.rstrip() for line in text.split("\n")) if s]


def heuristic_quality(doc: Document, cfg: ThresholdConfig = ThresholdConfig()) -> dict:
    """Stop-word, alphabetic, line-shape, symbol and probe heuristics.

    Returns the corresponding subset of QualityValues fields as a dict.
    """
    words = [t.text for t in doc.tokens if t.is_word]
    n = len(words)
    lines = [line.strip() for line in _nonempty_lines(doc.text)]
    symbols = {}
    for s in cfg.symbols:
        occurrences = sum(doc.text.count(form) for form in SYMBOL_ALIASES.get(s, (s,)))
        symbols[s] = _ratio(occurrences, n)
    lowered = doc.text.lower()
    return dict(
        n_stop_words=sum(1 for w in words if w.lower() in cfg.stop_words),
        alpha_ratio=_ratio(sum(1 for w in words if w.isalpha() or any(ch.isalpha() for ch in w)), n),
        mean_word_length=_ratio(sum(len(w) for w in words), n),
        doc_length=n,
        proportion_ellipsis_lines=_ratio(sum(1 for s in lines if s.endswith(ELLIPSES)), len(lines)),
        proportion_bullet_lines=_ratio(sum(1 for s in lines if s.startswith(BULLETS)), len(lines)),
        symbol_to_word_ratio=symbols,
        contains={p: p.lower() in lowered for p in cfg.probes},
    )


def _duplicate_fractions(chunks: Sequence[str]) -> tuple[Optional[float], Optional[float]]:
    seen: set[str] = set()
    dup = dup_chars = total_chars = 0
    for chunk in chunks:
        total_chars += len(chunk)
        if chunk in seen:
            dup += 1
            dup_chars += len(chunk)
        else:
            seen.add(chunk)
    return _ratio(dup, len(chunks)), _ratio(dup_chars, total_chars)


def duplicate_line_fractions(doc: Document) -> tuple[Optional[float], Optional[float]]:
    """(fraction of lines, fraction of line characters) repeating an earlier line."""
    return _duplicate_fractions(_nonempty_lines(doc.text))


def duplicate_paragraph_fractions(doc: Document) -> tuple[Optional[float], Optional[float]]:
    paragraphs = [p.strip() for p in _PARAGRAPH_SPLIT.split(doc.text)]
    return _duplicate_fractions([p for p in paragraphs if p])


def _lower_words(doc: Document) -> list[str]:
    return [t.text.lower() for t in doc.tokens if t.is_word]


def _ngrams(words: Sequence[str], n: int):
    return zip(*(words[i:] for i in range(n)))


def _top_ngram(words: Sequence[str], lengths: Sequence[int], total: int, n: int) -> float:
    if len(words) < n:
        return 0.0
    # max() keeps the first maximum, and Counter preserves first-seen order
    gram, count = max(Counter(_ngrams(words, n)).items(), key=itemgetter(1))
    return min(1.0, count * sum(len(w) for w in gram) / total)


def _covered_chars(repeated_starts: Sequence[int], lengths: Sequence[int], n: int) -> int:
    covered = 0
    covered_to = 0  # positions below this index are already counted
    for i in repeated_starts:
        for j in range(max(i, covered_to), i + n):
            covered += lengths[j]
        covered_to = i + n
    return covered


def top_ngram_chr_fraction(doc: Document | Sequence[str], n: int) -> float:
    """Character share of the most frequent word n-gram (first seen wins ties).

    Accepts a Document or an already lowercased word sequence.
    """
    words = _lower_words(doc) if isinstance(doc, Document) else doc
    lengths = [len(w) for w in words]
    return _top_ngram(words, lengths, sum(lengths), n)


def duplicate_ngram_chr_fraction(doc: Document | Sequence[str], n: int) -> float:
    """Character share of word positions covered by any repeated n-gram."""
    words = _lower_words(doc) if isinstance(doc, Document) else doc
    if len(words) < n:
        return 0.0
    grams = list(_ngrams(words, n))
    counts = Counter(grams)
    lengths = [len(w) for w in words]
    repeated = [i for i, g in enumerate(grams) if counts[g] >= 2]
    return _covered_chars(repeated, lengths, n) / sum(lengths)


def _duplicate_ngram_profile(words: Sequence[str], lengths: Sequence[int], total: int) -> dict[int, float]:
    """duplicate_ngram_chr_fraction for every n in DUP_NGRAM_RANGE at once.

    An (n+1)-gram can only repeat where the n-grams at i and i+1 both
    repeat, so each larger n only recounts those candidate starts.
    """
    out = {}
    candidates = None
    repeated: set[int] = set()
    for n in DUP_NGRAM_RANGE:
        if len(words) < n:
            out[n] = 0.0
            continue
        if candidates is None:
            starts = range(len(words) - n + 1)
        else:
            starts = [i for i in candidates if i + 1 in repeated and i + n <= len(words)]
        grams = {i: tuple(words[i : i + n]) for i in starts}
        counts = Counter(grams.values())
        rep = [i for i, g in grams.items() if counts[g] >= 2]
        out[n] = _covered_chars(rep, lengths, n) / total
        repeated = set(rep)
        candidates = rep
    return out


def quality_values(doc: Document, cfg: ThresholdConfig = ThresholdConfig()) -> QualityValues:
    line_frac, line_chr = duplicate_line_fractions(doc)
    par_frac, par_chr = duplicate_paragraph_fractions(doc)
    words = _lower_words(doc)
    lengths = [len(w) for w in words]
    total = sum(lengths)
    return QualityValues(
        **heuristic_quality(doc, cfg),
        duplicate_line_fraction=line_frac,
        duplicate_paragraph_fraction=par_frac,
        duplicate_line_chr_fraction=line_chr,
        duplicate_paragraph_chr_fraction=par_chr,
        top_ngram_chr_fraction={n: _top_ngram(words, lengths, total, n) for n in TOP_NGRAM_RANGE},
        duplicate_ngram_chr_fraction=_duplicate_ngram_profile(words, lengths, total),
    )


def apply_thresholds(values: QualityValues, cfg: ThresholdConfig) -> QualityResult:
    """Check every configured metric; unconfigured metrics are not judged."""
    record = values.as_record()
    verdicts = {}
    for name, bounds in cfg.bounds.items():
        verdicts[name] = bounds.admits(record.get(name))
    for probe, required in cfg.contains.items():
        verdicts[f"contains_{probe}"] = values.contains.get(probe) == required
    return QualityResult(values, verdicts)


def quality(doc: Document, cfg: Optional[ThresholdConfig] = None) -> QualityResult:
    """Compute all quality values and judge them (default profile if no cfg)."""
    cfg = ThresholdConfig.default() if cfg is None else cfg
    return apply_thresholds(quality_values(doc, cfg), cfg)
