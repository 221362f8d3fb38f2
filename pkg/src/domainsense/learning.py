"""Lexicon updates driven by disambiguation results.

Three flows share one primitive, add_meaning: the automatic flow writes
the winning domain back for every content word, the corrective flow
writes a human-chosen domain instead, and the hybrid flow auto-accepts
unique winners while escalating ties and zero-vote sentences to a
confirmation provider. Updates only ever add rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .disambiguator import Disambiguation, disambiguate_sentence
from .errors import NotACorrectionError, NoWinnerError, UnknownFieldError
from .lexicon import Lexicon

__all__ = [
    "MODES",
    "Correction",
    "LexiconDelta",
    "unsupervised_update",
    "supervised_correct",
    "hybrid_step",
]

MODES = ("unsupervised", "supervised", "hybrid")

# Confirmation provider: (sentence, predicted field id or None, tie list)
# -> chosen field id, or None to accept the prediction unchanged.
ConfirmationProvider = Callable[[str, "int | None", "list[int]"], "int | None"]


@dataclass(frozen=True)
class Correction:
    sentence: str
    predicted_field: int | None
    confirmed: bool
    chosen_field: int | None = None


@dataclass(frozen=True)
class LexiconDelta:
    added: tuple[tuple[str, int], ...]

    def __bool__(self) -> bool:
        return bool(self.added)


def _apply_to_content_words(result: Disambiguation, lex: Lexicon, field_id: int) -> LexiconDelta:
    name = lex.field_name(field_id)
    added = []
    for word in result.content_words:
        if lex.add_meaning(word, name):
            added.append((word, field_id))
    return LexiconDelta(tuple(added))


def unsupervised_update(result: Disambiguation, lex: Lexicon) -> LexiconDelta:
    """Write the winning domain back for every content word of the sentence."""
    if result.winner is None:
        raise NoWinnerError(f"no winner to apply for {result.sentence!r}")
    return _apply_to_content_words(result, lex, result.winner)


def supervised_correct(result: Disambiguation, corr: Correction, lex: Lexicon) -> LexiconDelta:
    """Write a human-chosen domain back for every content word."""
    if corr.confirmed:
        raise NotACorrectionError("confirmed results go through unsupervised_update")
    if corr.chosen_field is None or lex.field_by_id(corr.chosen_field) is None:
        raise UnknownFieldError(f"chosen field {corr.chosen_field!r} does not resolve")
    return _apply_to_content_words(result, lex, corr.chosen_field)


def hybrid_step(
    sentence: str,
    lex: Lexicon,
    confirm: ConfirmationProvider,
) -> tuple[Disambiguation, LexiconDelta, bool]:
    """Disambiguate, auto-accept a unique winner, escalate everything else.

    Returns the pre-update disambiguation, the applied delta, and whether
    the confirmation provider was consulted. The provider may answer None
    to accept the prediction; on a zero-vote sentence that answer leaves
    nothing to apply and NoWinnerError propagates.
    """
    result = disambiguate_sentence(sentence, lex)
    if result.winner is not None and len(result.tied) == 1:
        return result, unsupervised_update(result, lex), False
    choice = confirm(sentence, result.winner, list(result.tied))
    if choice is None:
        return result, unsupervised_update(result, lex), True
    corr = Correction(
        sentence=sentence,
        predicted_field=result.winner,
        confirmed=False,
        chosen_field=choice,
    )
    return result, supervised_correct(result, corr, lex), True
