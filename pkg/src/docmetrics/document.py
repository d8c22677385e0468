"""Document model and rule-based tokenization / sentence segmentation.

Tokens are maximal runs of alphanumeric characters, optionally joined by
internal apostrophes or hyphens ("don't", "state-of-the-art"). Every other
non-whitespace character is a token of its own. Offsets are Python string
indices (code points), end exclusive.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional, Sequence

# group 1 matches words; [^\W_] is exactly the set of str.isalnum() characters
TOKEN_RE = re.compile(r"([^\W_]+(?:['’\-][^\W_]+)*)|\S")

SENTENCE_TERMINATORS = frozenset(".!?")
# closing quotes/brackets directly after a terminator stay with its sentence
_CLOSERS = frozenset("\"'”’»)]}")


def _is_word(text: str) -> bool:
    return any(ch.isalnum() for ch in text)


class Token(NamedTuple):
    text: str
    start: int
    end: int
    upos: Optional[str] = None
    head: Optional[int] = None
    deprel: Optional[str] = None
    is_word: bool = False

    @classmethod
    def make(cls, text: str, start: int, **annotations) -> "Token":
        return cls(text, start, start + len(text), is_word=_is_word(text), **annotations)


@dataclass(frozen=True, slots=True)
class Sentence:
    start: int
    stop: int

    @property
    def token_range(self) -> range:
        return range(self.start, self.stop)

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class Document:
    """Immutable document: text, tokens, sentences and optional syntax.

    ``has_syntax`` is derived from the tokens unless given explicitly
    (raw-text documents always carry ``has_syntax=False``).
    """

    id: str
    text: str
    tokens: tuple[Token, ...] = ()
    sentences: tuple[Sentence, ...] = ()
    lang: str = "en"
    has_syntax: Optional[bool] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "sentences", tuple(self.sentences))
        if self.has_syntax is None:
            object.__setattr__(
                self,
                "has_syntax",
                all(t.upos is not None and t.head is not None for t in self.tokens),
            )

    @property
    def words(self) -> list[Token]:
        return [t for t in self.tokens if t.is_word]

    def sentence_tokens(self, sentence: Sentence) -> tuple[Token, ...]:
        return self.tokens[sentence.start : sentence.stop]

    def iter_sentence_tokens(self) -> Iterator[tuple[Token, ...]]:
        for s in self.sentences:
            yield self.tokens[s.start : s.stop]

    @property
    def has_any_annotation(self) -> bool:
        return any(t.upos is not None or t.head is not None for t in self.tokens)

    def validate(self) -> None:
        """Check the structural invariants; raise ValueError on violation."""
        prev_end = 0
        for tok in self.tokens:
            if not (prev_end <= tok.start < tok.end <= len(self.text)):
                raise ValueError(f"token {tok!r} out of order or out of bounds")
            if self.text[tok.start : tok.end] != tok.text:
                raise ValueError(f"token {tok!r} does not match document text")
            if tok.is_word != _is_word(tok.text):
                raise ValueError(f"token {tok!r} has inconsistent is_word")
            prev_end = tok.end
        pos = 0
        for s in self.sentences:
            if s.start != pos or s.stop <= s.start:
                raise ValueError(f"sentence {s!r} breaks the token partition")
            for i, tok in enumerate(self.tokens[s.start : s.stop], start=1):
                if tok.head is not None and (
                    tok.head < 0 or tok.head > len(s) or tok.head == i
                ):
                    raise ValueError(f"token {tok!r} has an invalid head")
            pos = s.stop
        if pos != len(self.tokens):
            raise ValueError("sentences do not cover all tokens")


def tokenize(text: str, lang: str = "en") -> list[Token]:
    """Split ``text`` into word and single-character punctuation tokens.

    The same generic rule set is used for every ``lang``.
    """
    new = tuple.__new__
    return [
        new(Token, (m.group(), m.start(), m.end(), None, None, None, m.lastindex is not None))
        for m in TOKEN_RE.finditer(text)
    ]


def segment_sentences(tokens: Sequence[Token], text: str = "") -> list[Sentence]:
    """Group tokens into sentences.

    A sentence ends after a run of ``.``, ``!`` or ``?`` tokens (plus any
    closing quotes or brackets right after it), unless the next word token
    starts with a lowercase letter. There is no abbreviation lexicon, so
    "Dr. Smith" splits while "e.g. this" does not.
    """
    n = len(tokens)
    sentences: list[Sentence] = []
    start = 0
    i = 0
    while i < n:
        if tokens[i].text not in SENTENCE_TERMINATORS:
            i += 1
            continue
        j = i + 1
        while j < n and tokens[j].text in SENTENCE_TERMINATORS:
            j += 1
        while j < n and tokens[j].text in _CLOSERS:
            j += 1
        k = j
        while k < n and not tokens[k].is_word:
            k += 1
        if k == n or not tokens[k].text[0].islower():
            if j < n:
                sentences.append(Sentence(start, j))
                start = j
        i = j
    if start < n:
        sentences.append(Sentence(start, n))
    return sentences


def build_document(id: str, text: str, lang: str = "en") -> Document:
    """Tokenize and segment raw text into a Document without syntax."""
    tokens = tokenize(text, lang)
    return Document(
        id=id,
        text=text,
        tokens=tuple(tokens),
        sentences=tuple(segment_sentences(tokens, text)),
        lang=lang,
        has_syntax=False,
    )
