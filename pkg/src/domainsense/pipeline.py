"""Sentence front end: tokenizing, tagging, content/general separation,
and offline spelling suggestions.

Everything here is a pure function over an immutable lexicon view; the
only state is the lexicon passed in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptySentenceError
from .lexicon import Lexicon

__all__ = [
    "Token",
    "TaggedToken",
    "SpellSuggestion",
    "tokenize",
    "tag",
    "separate_content",
    "suggest_spellings",
    "damerau_levenshtein",
]

# Tags are the coarse rule-tagger inventory; DTR is the determiner label
# used throughout the printed traces.
CONTENT = "content"
GENERAL = "general"
PUNCT = "punct"

_PUNCT_CHARS = frozenset(".,?!;:\"'")
_DETERMINERS = frozenset({"the", "a", "an"})
# Suffix rules cannot see irregular past forms; the common ones are pinned.
_IRREGULAR_VERBS = {"went": "VBD", "was": "VBD", "is": "VB"}


@dataclass(frozen=True)
class Token:
    surface: str
    position: int
    is_punct: bool


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str
    kind: str

    @property
    def surface(self) -> str:
        return self.token.surface

    @property
    def word(self) -> str:
        return self.token.surface.lower()


@dataclass(frozen=True)
class SpellSuggestion:
    original: str
    candidates: tuple[tuple[str, int], ...]


def tokenize(sentence: str) -> list[Token]:
    """Split a sentence into word and punctuation tokens.

    Words split on whitespace; leading and trailing punctuation marks
    (. , ? ! ; : " ') become their own tokens. Hyphens and apostrophes
    inside a word stay put.
    """
    if sentence is None or not sentence.strip():
        raise EmptySentenceError("sentence is empty")
    pieces: list[tuple[str, bool]] = []
    for chunk in sentence.split():
        lead: list[str] = []
        trail: list[str] = []
        core = chunk
        while core and core[0] in _PUNCT_CHARS:
            lead.append(core[0])
            core = core[1:]
        while core and core[-1] in _PUNCT_CHARS:
            trail.append(core[-1])
            core = core[:-1]
        pieces.extend((p, True) for p in lead)
        if core:
            pieces.append((core, False))
        pieces.extend((p, True) for p in reversed(trail))
    return [Token(surface, i, is_punct) for i, (surface, is_punct) in enumerate(pieces)]


def content_word_tag(word: str) -> str:
    """Tag for a word already known to be a content word: the irregular
    list first, then suffix rules, then NN."""
    if word in _IRREGULAR_VERBS:
        return _IRREGULAR_VERBS[word]
    if word.endswith("ing"):
        return "VBG"
    if word.endswith("ed"):
        return "VBD"
    if word.endswith("s") and not word.endswith("ss"):
        return "NNS"
    return "NN"


def tag(tokens: list[Token], lex: Lexicon) -> list[TaggedToken]:
    """Assign a coarse tag and a content/general/punct kind to each token.

    Rule order: punctuation, then general-word lookup (the/a/an are DTR,
    the rest IN), then the irregular-verb list, then suffix rules
    (-ing VBG, -ed VBD, -s NNS unless -ss), and NN as the default.
    """
    tagged = []
    for token in tokens:
        if token.is_punct:
            tagged.append(TaggedToken(token, "PUNCT", PUNCT))
            continue
        word = token.surface.lower()
        if lex.is_general(word):
            label = "DTR" if word in _DETERMINERS else "IN"
            tagged.append(TaggedToken(token, label, GENERAL))
            continue
        tagged.append(TaggedToken(token, content_word_tag(word), CONTENT))
    return tagged


def separate_content(tagged: list[TaggedToken]) -> list[str]:
    """Lowercased surfaces of the content tokens, in sentence order."""
    return [t.word for t in tagged if t.kind == CONTENT]


def damerau_levenshtein(a: str, b: str) -> int:
    """Edit distance counting insert, delete, substitute, and the
    transposition of two adjacent characters as one operation each."""
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    prev2: list[int] = []
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        row = [i] + [0] * m
        for j in range(1, m + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            best = min(prev[j] + 1, row[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                best = min(best, prev2[j - 2] + 1)
            row[j] = best
        prev2, prev = prev, row
    return prev[m]


def suggest_spellings(word: str, lex: Lexicon, max_dist: int = 2, k: int = 3) -> SpellSuggestion:
    """Rank meaning-lexicon words near ``word`` by edit distance.

    Candidates within ``max_dist`` are ordered by (distance, word) and cut
    to the top ``k``. Matching is case-insensitive; an exact hit comes back
    at distance 0. Function words are never offered as corrections.
    """
    needle = word.strip().lower()
    scored = []
    for entry in lex.meaning_words():
        dist = damerau_levenshtein(needle, entry)
        if dist <= max_dist:
            scored.append((dist, entry))
    scored.sort()
    return SpellSuggestion(word, tuple((w, d) for d, w in scored[:k]))
