"""Document-level text metrics: descriptive statistics, readability,
dependency distance, POS proportions, embedding coherence and corpus
quality heuristics."""
from .coherence import CoherenceScores, EmbeddingTable, coherence, load_embeddings, sentence_embedding
from .conllu import parse_conllu, write_conllu
from .descriptive import DescriptiveStats, SummaryStats, descriptive_stats
from .document import Document, Sentence, Token, build_document, segment_sentences, tokenize
from .errors import ConfigError, DocMetricsError, ParseError, RequiresSyntaxError
from .extract import (
    COMPONENTS,
    Resources,
    extract_dict,
    extract_metrics,
    metric_names,
    read_jsonl,
    write_records,
)
from .quality import (
    Bounds,
    QualityResult,
    QualityValues,
    ThresholdConfig,
    apply_thresholds,
    duplicate_line_fractions,
    duplicate_ngram_chr_fraction,
    duplicate_paragraph_fractions,
    heuristic_quality,
    quality,
    quality_values,
    top_ngram_chr_fraction,
)
from .readability import (
    ReadabilityCounts,
    ReadabilityScores,
    compute_readability,
    readability,
    readability_counts,
)
from .syllables import SyllableRuleSet, count_syllables
from .syntax import (
    DocumentDependencyStats,
    SentenceDependencyStats,
    document_dependency_stats,
    pos_proportions,
    sentence_dependency_stats,
)

__version__ = "0.1.0"
