"""Domain voting: candidate collection, tallying, and winner selection.

Each content word contributes one vote per domain it belongs to; the
domain with the highest total wins. Ties are broken toward the lowest
field id and the full tie list is kept so callers can escalate to a
human instead of trusting the tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoContentWordsError
from .lexicon import Lexicon
from .pipeline import CONTENT, TaggedToken, content_word_tag, separate_content, tag, tokenize

__all__ = [
    "CategorySet",
    "VoteTally",
    "Disambiguation",
    "build_categories",
    "tally_votes",
    "select_domain",
    "disambiguate_sentence",
]

_POS_SENSE = {"NN": "noun", "NNS": "noun", "VB": "verb", "VBD": "verb", "VBG": "verb"}


@dataclass
class CategorySet:
    """The three views of a sentence's content words.

    word_senses pairs each word with its coarse part of speech,
    domain_candidates pairs each with its candidate (field_id, name)
    rows, and distinct_fields lists every candidate field id once, in
    first-appearance order.
    """

    word_senses: list[tuple[str, str]] = field(default_factory=list)
    domain_candidates: list[tuple[str, list[tuple[int, str]]]] = field(default_factory=list)
    distinct_fields: list[int] = field(default_factory=list)


@dataclass
class VoteTally:
    counts: dict[int, int] = field(default_factory=dict)
    trace: list[tuple[str, int]] = field(default_factory=list)


@dataclass
class Disambiguation:
    sentence: str
    winner: int | None
    winner_name: str | None
    max_count: int
    tied: list[int]
    tally: VoteTally
    categories: CategorySet
    unknown_words: list[str]
    tagged: list[TaggedToken]

    @property
    def content_words(self) -> list[str]:
        return [w for w, _ in self.categories.word_senses]


def build_categories(
    content_words: list[str],
    lex: Lexicon,
    tagged: list[TaggedToken] | None = None,
) -> CategorySet:
    """Pair content words with their part of speech and candidate domains."""
    if tagged is not None:
        senses = [_POS_SENSE.get(t.tag, "noun") for t in tagged if t.kind == CONTENT]
    else:
        senses = [_POS_SENSE.get(content_word_tag(w.lower()), "noun") for w in content_words]
    cats = CategorySet()
    seen: set[int] = set()
    for word, sense in zip(content_words, senses):
        word = word.lower()
        domains = lex.lookup_domains(word)
        cats.word_senses.append((word, sense))
        cats.domain_candidates.append((word, domains))
        for field_id, _ in domains:
            if field_id not in seen:
                seen.add(field_id)
                cats.distinct_fields.append(field_id)
    return cats


def tally_votes(cats: CategorySet) -> VoteTally:
    """Count one vote per (content word occurrence, candidate domain)."""
    tally = VoteTally()
    for word, domains in cats.domain_candidates:
        for field_id, _ in domains:
            tally.counts[field_id] = tally.counts.get(field_id, 0) + 1
            tally.trace.append((word, field_id))
    return tally


def select_domain(tally: VoteTally) -> tuple[int | None, int, list[int]]:
    """Pick the maximum-count field. Returns (winner, max_count, tied).

    The tie list holds every field at the maximum, ascending; the winner
    is its lowest id, or None when there are no votes at all.
    """
    if not tally.counts:
        return None, 0, []
    max_count = max(tally.counts.values())
    tied = sorted(f for f, c in tally.counts.items() if c == max_count)
    return tied[0], max_count, tied


def disambiguate_sentence(sentence: str, lex: Lexicon) -> Disambiguation:
    """Run the whole pipeline: tokenize, tag, separate, vote, select."""
    tokens = tokenize(sentence)
    tagged = tag(tokens, lex)
    content = separate_content(tagged)
    if not content:
        raise NoContentWordsError(f"no content words in {sentence!r}")
    cats = build_categories(content, lex, tagged)
    tally = tally_votes(cats)
    winner, max_count, tied = select_domain(tally)
    unknown: list[str] = []
    for word, domains in cats.domain_candidates:
        if not domains and word not in unknown:
            unknown.append(word)
    return Disambiguation(
        sentence=sentence,
        winner=winner,
        winner_name=lex.field_name(winner) if winner is not None else None,
        max_count=max_count,
        tied=tied,
        tally=tally,
        categories=cats,
        unknown_words=unknown,
        tagged=tagged,
    )
