"""Vowel-group syllable counting."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable


@dataclass(frozen=True)
class SyllableRuleSet:
    vowels: str = "aeiouy"
    silent_e: bool = True
    le_exception: bool = True


ENGLISH = SyllableRuleSet()

_RULES = {"en": ENGLISH}


def rules_for(lang: str) -> SyllableRuleSet:
    # only English rules ship; other languages fall back to them
    return _RULES.get(lang, ENGLISH)


@lru_cache(maxsize=16)
def _group_re(vowels: str) -> re.Pattern:
    return re.compile(f"[{re.escape(vowels)}]+")


def count_syllables(word: str, rules: SyllableRuleSet = ENGLISH) -> int:
    """Count syllables as maximal vowel groups, minus a trailing silent "e".

    The silent "e" is only dropped when it follows a consonant, at least two
    groups were found, and the word does not end in consonant + "le".

    >>> [count_syllables(w) for w in ("cat", "table", "make", "happy")]
    [1, 2, 1, 2]
    """
    if not any(ch.isalpha() for ch in word):
        raise ValueError(f"cannot count syllables of {word!r}: no alphabetic character")
    return _count(word.lower(), rules)


@lru_cache(maxsize=65536)
def _count(w: str, rules: SyllableRuleSet) -> int:
    n = len(_group_re(rules.vowels).findall(w))
    if (
        rules.silent_e
        and n >= 2
        and len(w) >= 2
        and w[-1] == "e"
        and w[-2].isalpha()
        and w[-2] not in rules.vowels
    ):
        ends_le = (
            rules.le_exception
            and len(w) >= 3
            and w[-2] == "l"
            and w[-3].isalpha()
            and w[-3] not in rules.vowels
        )
        if not ends_le:
            n -= 1
    return max(n, 1)


def word_syllables(word: str, rules: SyllableRuleSet = ENGLISH) -> int:
    """Like count_syllables, but words without letters ("2024") count as 1."""
    if not any(ch.isalpha() for ch in word):
        return 1
    return _count(word.lower(), rules)


_MEMO_LIMIT = 200_000
_memos: dict[SyllableRuleSet, dict[str, int]] = {}


def syllable_counter(rules: SyllableRuleSet = ENGLISH) -> Callable[[str], int]:
    """Memoized ``word_syllables`` bound to one rule set, for hot loops."""
    memo = _memos.setdefault(rules, {})

    def count(word: str) -> int:
        n = memo.get(word)
        if n is None:
            if len(memo) >= _MEMO_LIMIT:
                memo.clear()
            n = memo[word] = word_syllables(word, rules)
        return n

    return count
