"""Reading (and writing) CoNLL-U dependency annotations."""
from __future__ import annotations

import re
from typing import Iterable, TextIO

from .document import Document, Sentence, Token
from .errors import ParseError

ID, FORM, LEMMA, UPOS, XPOS, FEATS, HEAD, DEPREL, DEPS, MISC = range(10)

_INT_RE = re.compile(r"[0-9]+")


class _Word:
    __slots__ = ("form", "upos", "head", "deprel", "space_after")

    def __init__(self, form, upos, head, deprel, space_after):
        self.form = form
        self.upos = upos
        self.head = head
        self.deprel = deprel
        self.space_after = space_after


def _field(value: str) -> str | None:
    return None if value == "_" else value


def _parse_token_line(line: str, lineno: int) -> _Word | None:
    cols = line.split("\t")
    if len(cols) != 10:
        raise ParseError(f"expected 10 tab-separated columns, got {len(cols)}", lineno)
    tid = cols[ID]
    if "-" in tid or "." in tid:
        return None  # multiword-token range or empty node
    if not _INT_RE.fullmatch(tid):
        raise ParseError(f"invalid token ID {tid!r}", lineno)
    head_s = cols[HEAD]
    if head_s == "_":
        head = None
    elif _INT_RE.fullmatch(head_s):
        head = int(head_s)
    else:
        raise ParseError(f"HEAD must be an integer, got {head_s!r}", lineno)
    space_after = "SpaceAfter=No" not in cols[MISC].split("|")
    return _Word(cols[FORM], _field(cols[UPOS]), head, _field(cols[DEPREL]), space_after)


class _DocBuilder:
    def __init__(self, doc_id: str):
        self.id = doc_id
        self.sentences: list[tuple[list[_Word], str | None, int]] = []

    def build(self, lang: str) -> Document:
        parts: list[str] = []
        offset = 0
        tokens: list[Token] = []
        sentences: list[Sentence] = []
        for words, sent_text, first_line in self.sentences:
            if parts:
                parts.append(" ")
                offset += 1
            for k, w in enumerate(words, start=1):
                if w.head is not None and (w.head > len(words) or w.head == k):
                    raise ParseError(f"HEAD {w.head} out of range for token {k}", first_line)
            aligned = _align(words, sent_text) if sent_text is not None else None
            if aligned is None:
                sent_text, aligned = _reconstruct(words)
            begin = len(tokens)
            for w, start in zip(words, aligned):
                tokens.append(
                    Token.make(w.form, offset + start, upos=w.upos, head=w.head, deprel=w.deprel)
                )
            sentences.append(Sentence(begin, len(tokens)))
            parts.append(sent_text)
            offset += len(sent_text)
        return Document(self.id, "".join(parts), tuple(tokens), tuple(sentences), lang)


def _align(words: list[_Word], text: str) -> list[int] | None:
    starts = []
    pos = 0
    for w in words:
        at = text.find(w.form, pos)
        if at < 0 or text[pos:at].strip():
            return None
        starts.append(at)
        pos = at + len(w.form)
    return starts


def _reconstruct(words: list[_Word]) -> tuple[str, list[int]]:
    out: list[str] = []
    starts = []
    pos = 0
    for k, w in enumerate(words):
        starts.append(pos)
        out.append(w.form)
        pos += len(w.form)
        if w.space_after and k < len(words) - 1:
            out.append(" ")
            pos += 1
    return "".join(out), starts


def parse_conllu(stream: TextIO | Iterable[str], lang: str = "en") -> list[Document]:
    """Parse CoNLL-U into Documents, one per ``# newdoc`` block.

    Without ``# newdoc`` markers the whole stream is one document. Document
    text comes from ``# text`` comments when they align with the forms,
    otherwise it is rebuilt from FORM and ``SpaceAfter=No``. Sentences are
    joined with a single space.
    """
    builders: list[_DocBuilder] = []
    current: _DocBuilder | None = None
    words: list[_Word] = []
    sent_text: str | None = None
    sent_line = 0

    def flush():
        nonlocal words, sent_text, current
        if words:
            if current is None:
                current = _DocBuilder(str(len(builders) + 1))
                builders.append(current)
            current.sentences.append((words, sent_text, sent_line))
        words = []
        sent_text = None

    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("newdoc"):
                flush()
                _, _, doc_id = body.partition("=")
                current = _DocBuilder(doc_id.strip() or str(len(builders) + 1))
                builders.append(current)
            elif body.startswith("text") and body[4:].lstrip().startswith("="):
                sent_text = body[4:].lstrip()[1:].strip()
            continue
        if not words:
            sent_line = lineno
        word = _parse_token_line(line, lineno)
        if word is not None:
            words.append(word)
    flush()
    return [b.build(lang) for b in builders if b.sentences]


def write_conllu(docs: Iterable[Document]) -> str:
    """Serialize Documents to CoNLL-U (used for round-trip checks)."""
    out: list[str] = []
    for doc in docs:
        out.append(f"# newdoc id = {doc.id}")
        for s in doc.sentences:
            toks = doc.sentence_tokens(s)
            for k, t in enumerate(toks, start=1):
                last = k == len(toks)
                misc = "_" if last or doc.text[t.end : t.end + 1] == " " else "SpaceAfter=No"
                out.append(
                    "\t".join(
                        [
                            str(k),
                            t.text,
                            "_",
                            t.upos or "_",
                            "_",
                            "_",
                            "_" if t.head is None else str(t.head),
                            t.deprel or "_",
                            "_",
                            misc,
                        ]
                    )
                )
            out.append("")
    return "\n".join(out) + ("\n" if out else "")
