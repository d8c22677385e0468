
import pytest
from hypothesis import given, settings, strategies as st

from docmetrics import (
    Bounds,
    ConfigError,
    QualityValues,
    ThresholdConfig,
    apply_thresholds,
    build_document,
    duplicate_line_fractions,
    duplicate_ngram_chr_fraction,
    duplicate_paragraph_fractions,
    heuristic_quality,
    quality,
    quality_values,
    top_ngram_chr_fraction,
)
from oracles import (
    brute_duplicate_chunks,
    brute_duplicate_ngram,
    brute_top_ngram,
    oracle_lines,
    oracle_paragraphs,
    random_repetitive_text,
)


def doc(text):
    return build_document("q", text)


def test_alpha_ratio():
    assert heuristic_quality(doc("abc 123 a1"))["alpha_ratio"] == pytest.approx(2 / 3)


def test_ellipsis_lines():
    assert heuristic_quality(doc("Hi...\nok"))["proportion_ellipsis_lines"] == 0.5
    assert heuristic_quality(doc("Hi…\nok\n\n"))["proportion_ellipsis_lines"] == 0.5


def test_bullet_lines():
    h = heuristic_quality(doc("- one\n  • two\nthree\n*four"))
    assert h["proportion_bullet_lines"] == 0.75


def test_contains_is_case_insensitive():
    h = heuristic_quality(doc("Lorem Ipsum dolor"))
    assert h["contains"] == {"lorem ipsum": True, "{": False}


def test_stop_words_and_lengths():
    h = heuristic_quality(doc("The cat sat on the mat"))
    assert h["n_stop_words"] == 3
    assert h["doc_length"] == 6
    assert h["mean_word_length"] == pytest.approx(17 / 6)


def test_custom_stop_words():
    cfg = ThresholdConfig(stop_words=frozenset({"cat"}))
    assert heuristic_quality(doc("The cat sat"), cfg)["n_stop_words"] == 1


def test_symbol_ratios():
    h = heuristic_quality(doc("#tag #other word... more… x"))
    # words: tag other word more x
    assert h["symbol_to_word_ratio"] == {"#": 2 / 5, "...": 2 / 5}


def test_zero_denominators_are_null():
    h = heuristic_quality(doc("  \n"))
    assert h["alpha_ratio"] is None and h["mean_word_length"] is None
    assert h["proportion_ellipsis_lines"] is None
    assert h["symbol_to_word_ratio"]["#"] is None
    assert duplicate_line_fractions(doc("")) == (None, None)


@pytest.mark.parametrize(
    "text, expected",
    [("a\na\nb", (1 / 3, 1 / 3)), ("a\nb\nc", (0, 0)), ("xy\nxy\nz", (1 / 3, 2 / 5)), ("a \na\n\n", (0.5, 0.5))],
)
def test_duplicate_lines(text, expected):
    assert duplicate_line_fractions(doc(text)) == pytest.approx(expected)


def test_duplicate_paragraphs():
    text = "p one\nline\n\np two\n \np one\nline"
    frac, chr_frac = duplicate_paragraph_fractions(doc(text))
    assert frac == pytest.approx(1 / 3)
    assert chr_frac == pytest.approx(10 / 25)


@pytest.mark.parametrize(
    "words, n, expected",
    [("a b a b c", 2, 0.8), ("a", 2, 0.0), ("x x x", 2, 1.0), ("a b c d", 2, 0.5)],
)
def test_top_ngram(words, n, expected):
    assert top_ngram_chr_fraction(doc(words), n) == pytest.approx(expected)


def test_top_ngram_tie_break_first_occurrence():
    # "aa b" and "b c" both occur once... "aa b" comes first and is longer
    assert top_ngram_chr_fraction(doc("aa b c"), 2) == pytest.approx(3 / 4)


@pytest.mark.parametrize(
    "words, expected",
    [("a b c d e a b c d e", 1.0), ("a b c d e f g h i j", 0.0), ("a b c d e f a b c d e g", 10 / 12), ("a b", 0.0)],
)
def test_duplicate_ngram(words, expected):
    assert duplicate_ngram_chr_fraction(doc(words), 5) == pytest.approx(expected)


def test_ngram_case_folding():
    assert duplicate_ngram_chr_fraction(doc("A B C D E a b c d e"), 5) == 1.0


@settings(max_examples=300)
@given(st.randoms(use_true_random=False))
def test_repetition_metrics_match_oracles(rng):
    text, words = random_repetitive_text(rng)
    d = doc(text)
    assert [t.text.lower() for t in d.words] == words
    for n in (2, 3, 4):
        assert top_ngram_chr_fraction(d, n) == brute_top_ngram(words, n)
    for n in range(5, 11):
        assert duplicate_ngram_chr_fraction(d, n) == brute_duplicate_ngram(words, n)
    v = quality_values(d)
    assert v.top_ngram_chr_fraction == {n: brute_top_ngram(words, n) for n in (2, 3, 4)}
    assert v.duplicate_ngram_chr_fraction == {n: brute_duplicate_ngram(words, n) for n in range(5, 11)}
    assert duplicate_line_fractions(d) == brute_duplicate_chunks(oracle_lines(text))
    assert duplicate_paragraph_fractions(d) == brute_duplicate_chunks(oracle_paragraphs(text))


@given(st.text(min_size=1).filter(str.strip))
def test_self_concatenation_duplicates_paragraphs(text):
    frac, _ = duplicate_paragraph_fractions(doc(text + "\n\n" + text))
    assert frac >= 0.5


# thresholds

def values(**kw):
    return QualityValues(**kw)


def test_threshold_examples():
    assert apply_thresholds(values(alpha_ratio=0.9), ThresholdConfig({"alpha_ratio": Bounds(min=0.7)})).passed
    r = apply_thresholds(values(duplicate_line_fraction=0.5), ThresholdConfig({"duplicate_line_fraction": Bounds(max=0.3)}))
    assert r.verdicts == {"duplicate_line_fraction": False} and not r.passed
    assert apply_thresholds(values(), ThresholdConfig()).passed


def test_null_fails_bounded_check():
    r = apply_thresholds(values(alpha_ratio=None), ThresholdConfig({"alpha_ratio": Bounds(min=0.1)}))
    assert not r.passed
    r = apply_thresholds(values(alpha_ratio=None), ThresholdConfig({"alpha_ratio": Bounds()}))
    assert r.passed


def test_contains_requirement():
    cfg = ThresholdConfig(contains={"lorem ipsum": False, "hello": True})
    assert "hello" in cfg.probes
    r = quality(doc("Hello lorem IPSUM"), cfg)
    assert r.verdicts == {"contains_lorem ipsum": False, "contains_hello": True}


def test_invalid_configs():
    with pytest.raises(ConfigError):
        ThresholdConfig({"alpha_ratio": Bounds(min=0.9, max=0.1)})
    with pytest.raises(ConfigError):
        ThresholdConfig({"no_such_metric": Bounds(max=1)})
    with pytest.raises(ConfigError):
        ThresholdConfig.from_mapping({"thresholds": {"alpha_ratio": {"min": "high"}}})
    with pytest.raises(ConfigError):
        ThresholdConfig.from_mapping({"contains": {"x": 1}})
    with pytest.raises(ConfigError):
        ThresholdConfig.from_mapping({"bogus": 1})


def test_config_file(tmp_path):
    p = tmp_path / "t.toml"
    p.write_text(
        'symbols = ["#"]\nstop_words = ["Foo"]\n[thresholds]\nalpha_ratio.min = 0.5\n'
        'doc_length = { min = 1, max = 3 }\n[contains]\n"{" = false\n'
    )
    cfg = ThresholdConfig.from_file(p)
    assert cfg.bounds == {"alpha_ratio": Bounds(0.5, None), "doc_length": Bounds(1, 3)}
    assert cfg.symbols == ("#",) and cfg.stop_words == {"foo"}
    r = quality(doc("foo bar baz qux"), cfg)
    assert r.verdicts == {"alpha_ratio": True, "doc_length": False, "contains_{": True}
    bad = tmp_path / "bad.toml"
    bad.write_text("alpha_ratio = [")
    with pytest.raises(ConfigError):
        ThresholdConfig.from_file(bad)


def test_default_profile():
    cfg = ThresholdConfig.default()
    assert cfg.bounds["alpha_ratio"] == Bounds(min=0.7)
    assert cfg.bounds["doc_length"] == Bounds(50, 100000)
    assert cfg.contains == {"lorem ipsum": False}
    short = "The quick brown fox jumps over the lazy dog while the farmer watches."
    text = "\n".join(
        f"Sentence number {w} talks about a different topic than the others in this text." for w in
        ["one", "two", "three", "four", "five", "six"]
    )
    assert quality(doc(short)).verdicts["doc_length"] is False
    assert not quality(doc(text)).passed  # near-duplicate lines share long n-grams


NAMES = ["alpha_ratio", "doc_length", "duplicate_line_fraction", "mean_word_length"]


@given(
    st.dictionaries(st.sampled_from(NAMES), st.tuples(st.none() | st.floats(0, 100), st.none() | st.floats(0, 100))),
    st.sampled_from(NAMES),
    st.floats(0, 50),
    st.text(max_size=80),
)
def test_relaxing_never_flips_pass_to_fail(spec, name, slack, text):
    bounds = {k: Bounds(min(a, b), max(a, b)) if a is not None and b is not None else Bounds(a, b) for k, (a, b) in spec.items()}
    cfg = ThresholdConfig(bounds)
    v = quality_values(doc(text), cfg)
    before = apply_thresholds(v, cfg).passed
    old = cfg.bounds.get(name, Bounds())
    looser = cfg.relaxed(
        name,
        min=None if old.min is None else old.min - slack,
        max=None if old.max is None else old.max + slack,
    )
    if before:
        assert apply_thresholds(v, looser).passed
    assert apply_thresholds(v, cfg.relaxed(name, min=None, max=None)).verdicts[name]
