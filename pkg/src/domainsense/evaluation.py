"""Accuracy evaluation over a gold-annotated corpus.

A corpus row binds a target word in a sentence to its gold domain. For
each sentence the engine predicts one winning domain, every target is
scored against it before any learning happens, and then the chosen
mode's update is applied so the lexicon evolves across the run.

Per-sentence accuracy divides correct predictions by *disambiguated*
predictions, not by targets; rows with nothing disambiguated score 0 and
carry a flag instead.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources
from pathlib import Path

from .disambiguator import disambiguate_sentence
from .errors import MalformedFileError, TargetMismatchError, UnknownFieldError
from .learning import MODES, Correction, hybrid_step, supervised_correct, unsupervised_update
from .lexicon import Lexicon

__all__ = [
    "GoldSentence",
    "EvalRow",
    "EvalTotals",
    "score_sentence",
    "aggregate",
    "run_mode",
    "load_corpus",
    "bundled_corpus_path",
    "write_report",
    "write_comparison",
]

_CORPUS_HEADER = ("sentence_id", "sentence_text", "target_word", "gold_field_name")


@dataclass(frozen=True)
class GoldSentence:
    id: int
    text: str
    targets: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class EvalRow:
    sentence_id: int
    targets: int
    disambiguated: int
    correct: int
    accuracy_pct: float
    flagged: bool


@dataclass(frozen=True)
class EvalTotals:
    targets: int
    disambiguated: int
    correct: int
    overall_accuracy_pct: float
    flagged: bool


def _pct(correct: int, disambiguated: int) -> float:
    if disambiguated == 0:
        return 0.0
    ratio = Decimal(correct * 100) / Decimal(disambiguated)
    return float(ratio.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def score_sentence(predictions: list[tuple[str, str | None]], gold: GoldSentence) -> EvalRow:
    """Score one sentence's target predictions against its gold labels.

    Predictions must cover exactly the gold target words; each is correct
    when its predicted field name equals the gold name case-insensitively.
    """
    remaining = [(w.lower(), f) for w, f in predictions]
    disambiguated = sum(1 for _, f in remaining if f is not None)
    correct = 0
    for word, gold_field in gold.targets:
        word = word.lower()
        match = next((i for i, (w, _) in enumerate(remaining) if w == word), None)
        if match is None:
            raise TargetMismatchError(f"sentence {gold.id}: no prediction for target {word!r}")
        _, predicted = remaining.pop(match)
        if predicted is not None and predicted.lower() == gold_field.lower():
            correct += 1
    if remaining:
        extras = [w for w, _ in remaining]
        raise TargetMismatchError(f"sentence {gold.id}: predictions for non-targets {extras}")
    return EvalRow(
        sentence_id=gold.id,
        targets=len(gold.targets),
        disambiguated=disambiguated,
        correct=correct,
        accuracy_pct=_pct(correct, disambiguated),
        flagged=disambiguated == 0,
    )


def aggregate(rows: list[EvalRow]) -> EvalTotals:
    """Column sums plus the overall accuracy over all rows."""
    if not rows:
        raise ValueError("no rows to aggregate")
    targets = sum(r.targets for r in rows)
    disambiguated = sum(r.disambiguated for r in rows)
    correct = sum(r.correct for r in rows)
    return EvalTotals(
        targets=targets,
        disambiguated=disambiguated,
        correct=correct,
        overall_accuracy_pct=_pct(correct, disambiguated),
        flagged=disambiguated == 0,
    )


def _gold_choice(gold: GoldSentence, lex: Lexicon) -> int:
    """The simulated user's answer: the most common gold field of the
    sentence's targets, earliest target first on ties."""
    tally = Counter(f.lower() for _, f in gold.targets)
    best = max(tally.values())
    for _, field_name in gold.targets:
        if tally[field_name.lower()] == best:
            field = lex.field_by_name(field_name)
            if field is None:
                raise UnknownFieldError(f"gold field {field_name!r} is not in the lexicon")
            return field.field_id
    raise AssertionError("unreachable: targets are non-empty")


def run_mode(
    corpus: list[GoldSentence],
    seed: Lexicon,
    mode: str,
) -> tuple[list[EvalRow], EvalTotals, Lexicon]:
    """Replay the corpus under one learning mode.

    The seed lexicon is copied, never mutated. Every sentence is scored
    with the lexicon as it stood *before* that sentence's update.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not corpus:
        raise ValueError("corpus is empty")
    lex = seed.copy()
    rows: list[EvalRow] = []
    for gold in corpus:
        if mode == "hybrid":
            choice = _gold_choice(gold, lex)
            result, _, _ = hybrid_step(gold.text, lex, lambda _s, _w, _t, c=choice: c)
        else:
            result = disambiguate_sentence(gold.text, lex)
        _check_targets_present(gold, result.content_words)
        predictions = [(word, result.winner_name) for word, _ in gold.targets]
        rows.append(score_sentence(predictions, gold))
        if mode == "unsupervised":
            if result.winner is not None:
                unsupervised_update(result, lex)
        elif mode == "supervised":
            choice = _gold_choice(gold, lex)
            if result.winner == choice:
                unsupervised_update(result, lex)
            else:
                corr = Correction(gold.text, result.winner, confirmed=False, chosen_field=choice)
                supervised_correct(result, corr, lex)
    return rows, aggregate(rows), lex


def _check_targets_present(gold: GoldSentence, content_words: list[str]) -> None:
    present = set(content_words)
    for word, _ in gold.targets:
        if word.lower() not in present:
            raise TargetMismatchError(
                f"sentence {gold.id}: target {word!r} is not a content word of {gold.text!r}"
            )


# ----------------------------------------------------------------------
# Corpus and report files
# ----------------------------------------------------------------------


def load_corpus(path: str | Path) -> list[GoldSentence]:
    """Parse a corpus TSV: one line per target, grouped by sentence id."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MalformedFileError(str(path), 0, "file is missing") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedFileError(str(path), 0, "file is empty")
    if tuple(lines[0].split("\t")) != _CORPUS_HEADER:
        raise MalformedFileError(str(path), 1, f"bad header, expected {_CORPUS_HEADER!r}")
    texts: dict[int, str] = {}
    targets: dict[int, list[tuple[str, str]]] = {}
    order: list[int] = []
    for line_no, line in enumerate(lines[1:], start=2):
        cols = line.split("\t")
        if len(cols) != 4:
            raise MalformedFileError(str(path), line_no, f"expected 4 columns, got {len(cols)}")
        raw_id, sentence_text, target_word, gold_field = cols
        try:
            sentence_id = int(raw_id)
        except ValueError:
            raise MalformedFileError(str(path), line_no, "sentence_id is not an integer") from None
        if not sentence_text.strip():
            raise MalformedFileError(str(path), line_no, "sentence_text is empty")
        if not target_word.strip() or not gold_field.strip():
            raise MalformedFileError(str(path), line_no, "target_word/gold_field_name is empty")
        if sentence_id in texts:
            if texts[sentence_id] != sentence_text:
                raise MalformedFileError(
                    str(path), line_no, f"sentence {sentence_id} has two different texts"
                )
        else:
            texts[sentence_id] = sentence_text
            targets[sentence_id] = []
            order.append(sentence_id)
        targets[sentence_id].append((target_word.strip().lower(), gold_field.strip()))
    return [GoldSentence(i, texts[i], tuple(targets[i])) for i in order]


def bundled_corpus_path() -> Path:
    """Filesystem path of the 15-sentence corpus shipped with the package."""
    return Path(str(resources.files("domainsense").joinpath("data/desk_corpus.tsv")))


def write_report(path: str | Path, rows: list[EvalRow], totals: EvalTotals) -> None:
    """Write one mode's per-sentence report plus a totals line."""
    lines = ["sentence_id\ttargets\tdisambiguated\tcorrect\taccuracy_pct"]
    for r in rows:
        lines.append(f"{r.sentence_id}\t{r.targets}\t{r.disambiguated}\t{r.correct}\t{r.accuracy_pct:.2f}")
    lines.append(
        f"total\t{totals.targets}\t{totals.disambiguated}\t{totals.correct}\t{totals.overall_accuracy_pct:.2f}"
    )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_comparison(path: str | Path, reports: dict[str, tuple[list[EvalRow], EvalTotals]]) -> None:
    """Write the side-by-side accuracy table for all three modes."""
    missing = [m for m in MODES if m not in reports]
    if missing:
        raise ValueError(f"comparison needs all modes, missing {missing}")
    header = "sentence_id\t" + "\t".join(f"{m}_accuracy_pct" for m in MODES)
    lines = [header]
    row_lists = {m: reports[m][0] for m in MODES}
    length = len(row_lists[MODES[0]])
    if any(len(rs) != length for rs in row_lists.values()):
        raise ValueError("mode reports cover different sentence counts")
    for i in range(length):
        sentence_id = row_lists[MODES[0]][i].sentence_id
        cells = "\t".join(f"{row_lists[m][i].accuracy_pct:.2f}" for m in MODES)
        lines.append(f"{sentence_id}\t{cells}")
    totals = "\t".join(f"{reports[m][1].overall_accuracy_pct:.2f}" for m in MODES)
    lines.append(f"total\t{totals}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
