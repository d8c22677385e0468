import pytest
from hypothesis import given, strategies as st

from docmetrics import build_document, segment_sentences, tokenize


def spans(text):
    return [(t.text, t.start, t.end) for t in tokenize(text)]


def n_sentences(text):
    return len(segment_sentences(tokenize(text), text))


def test_empty():
    assert tokenize("") == []
    assert segment_sentences([], "") == []


def test_simple_spans():
    assert spans("The cat.") == [("The", 0, 3), ("cat", 4, 7), (".", 7, 8)]


@pytest.mark.parametrize("word", ["state-of-the-art", "don't", "rock’n’roll", "x1-y2"])
def test_internal_joiners_stay_in_one_token(word):
    assert [t.text for t in tokenize(word)] == [word]


def test_edge_joiners_split():
    assert [t.text for t in tokenize("-well- 'quoted'")] == ["-", "well", "-", "'", "quoted", "'"]


def test_punctuation_is_single_characters():
    toks = tokenize("wait...!?")
    assert [t.text for t in toks] == ["wait", ".", ".", ".", "!", "?"]
    assert [t.is_word for t in toks] == [True] + [False] * 5


def test_underscore_is_not_alphanumeric():
    assert [t.text for t in tokenize("a_b")] == ["a", "_", "b"]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("The cat sat. It slept.", 2),
        ("no terminator here", 1),
        ("Hi! Go?", 2),
        ("A. B.", 2),
        ("Wait... what? Yes!!", 2),  # lowercase continuation after "..."
        ("He said \"Stop.\" Then left.", 2),
        ("Version 2. 3 apples.", 2),  # digits are not lowercase
        ("...", 1),
    ],
)
def test_sentence_counts(text, expected):
    assert n_sentences(text) == expected


def test_closing_quote_stays_with_sentence():
    text = 'He said "Stop." Then left.'
    toks = tokenize(text)
    first = segment_sentences(toks, text)[0]
    assert toks[first.stop - 1].text == '"'


@pytest.mark.parametrize(
    "text, n_tok, n_sent", [("", 0, 0), ("Hi there.", 3, 1), ("A. B.", 4, 2)]
)
def test_build_document(text, n_tok, n_sent):
    doc = build_document("d1", text)
    assert len(doc.tokens) == n_tok
    assert len(doc.sentences) == n_sent
    assert doc.has_syntax is False
    doc.validate()


@given(st.text())
def test_tokens_reconstruct_text(text):
    doc = build_document("h", text)
    doc.validate()
    rebuilt, pos = [], 0
    for t in doc.tokens:
        gap = text[pos : t.start]
        assert gap.strip() == "" or not gap  # only whitespace between tokens
        rebuilt.append(gap)
        rebuilt.append(t.text)
        pos = t.end
    rebuilt.append(text[pos:])
    assert "".join(rebuilt) == text
    assert text[pos:].strip() == ""


@given(st.text())
def test_is_word_matches_alnum(text):
    for t in tokenize(text):
        assert t.is_word == any(c.isalnum() for c in t.text)
        t.text.encode("utf-8")  # offsets always fall on code point boundaries
