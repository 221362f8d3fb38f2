"""domainsense: semantic-domain disambiguation with a self-updating lexicon.

Pipeline: tokenize a sentence, split content words from function words,
look up each content word's candidate domains, tally one vote per
(word, domain) pair, and report the maximum-count domain. Human feedback
and automatic write-back grow the lexicon over time; an evaluation
harness replays gold corpora under each learning mode.
"""

from .disambiguator import (
    CategorySet,
    Disambiguation,
    VoteTally,
    build_categories,
    disambiguate_sentence,
    select_domain,
    tally_votes,
)
from .errors import (
    DomainsenseError,
    EmptySentenceError,
    EmptyWordError,
    IntegrityError,
    MalformedFileError,
    NoContentWordsError,
    NotACorrectionError,
    NoWinnerError,
    TargetMismatchError,
    UnknownFieldError,
)
from .evaluation import (
    EvalRow,
    EvalTotals,
    GoldSentence,
    aggregate,
    bundled_corpus_path,
    load_corpus,
    run_mode,
    score_sentence,
)
from .learning import (
    MODES,
    Correction,
    LexiconDelta,
    hybrid_step,
    supervised_correct,
    unsupervised_update,
)
from .lexicon import Field, GeneralWord, Lexicon, Meaning, create_seed_lexicon
from .pipeline import (
    SpellSuggestion,
    TaggedToken,
    Token,
    damerau_levenshtein,
    separate_content,
    suggest_spellings,
    tag,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "CategorySet",
    "Correction",
    "Disambiguation",
    "DomainsenseError",
    "EmptySentenceError",
    "EmptyWordError",
    "EvalRow",
    "EvalTotals",
    "Field",
    "GeneralWord",
    "GoldSentence",
    "IntegrityError",
    "Lexicon",
    "LexiconDelta",
    "MODES",
    "MalformedFileError",
    "Meaning",
    "NoContentWordsError",
    "NotACorrectionError",
    "NoWinnerError",
    "SpellSuggestion",
    "TaggedToken",
    "TargetMismatchError",
    "Token",
    "UnknownFieldError",
    "VoteTally",
    "aggregate",
    "build_categories",
    "bundled_corpus_path",
    "create_seed_lexicon",
    "damerau_levenshtein",
    "disambiguate_sentence",
    "hybrid_step",
    "load_corpus",
    "run_mode",
    "score_sentence",
    "select_domain",
    "separate_content",
    "suggest_spellings",
    "supervised_correct",
    "tag",
    "tally_votes",
    "tokenize",
    "unsupervised_update",
]
