"""Command line interface.

Subcommands: disambiguate, eval, lexicon (init/add/list), serve. In text
mode, disambiguate prints the pipeline trace step by step; --format
structured emits one JSON object instead.

Exit codes: 0 ok, 2 user/input error, 3 environment error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import evaluation
from .disambiguator import Disambiguation, disambiguate_sentence
from .errors import (
    DomainsenseError,
    EmptySentenceError,
    IntegrityError,
    MalformedFileError,
    NoContentWordsError,
    UnknownFieldError,
)
from .learning import MODES, Correction, supervised_correct, unsupervised_update
from .lexicon import Lexicon, create_seed_lexicon
from .pipeline import suggest_spellings, tokenize

OK = 0
USER_ERROR = 2
ENV_ERROR = 3


def _is_interactive() -> bool:
    return sys.stdin.isatty() and sys.stdout.isatty()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domainsense", description=__doc__)
    parser.add_argument("--lexicon", default="lexicon", metavar="DIR", help="lexicon directory")
    parser.add_argument("--mode", choices=MODES, default="unsupervised", help="learning mode")
    parser.add_argument("--no-spellcheck", action="store_true", help="skip the spelling gate")
    parser.add_argument("--format", choices=("text", "structured"), default="text", dest="output_format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("disambiguate", help="disambiguate one sentence")
    p.add_argument("sentence")
    p.set_defaults(func=cmd_disambiguate)

    p = sub.add_parser("eval", help="replay a gold corpus and report accuracy")
    p.add_argument("--corpus", default=None, help="corpus TSV (default: bundled corpus)")
    p.add_argument("--mode", dest="eval_mode", default="all",
                   choices=MODES + ("all",), help="mode(s) to run")
    p.add_argument("--out", default=".", help="directory for report TSVs")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("lexicon", help="manage the lexicon directory")
    p.add_argument("action", choices=("init", "add", "list"))
    p.add_argument("word", nargs="?")
    p.add_argument("field", nargs="?")
    p.set_defaults(func=cmd_lexicon)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def _load_lexicon(args: argparse.Namespace) -> Lexicon:
    return Lexicon.load(args.lexicon)


def _print_trace(result: Disambiguation, lex: Lexicon) -> None:
    print(f"Sentence: {result.sentence}")
    print("Step 1: Separating All Words")
    for tagged in result.tagged:
        if not tagged.token.is_punct:
            print(f"Word: {tagged.surface}")
    print("Step 2: Finding Matching Domain")
    for word, field_id in result.tally.trace:
        print(f"Match – {word}: {word} clustered under – {lex.field_name(field_id)}")
    print("Step 3: Checking for Best Probable Field")
    ranked = sorted(result.tally.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    for field_id, count in ranked:
        print(f"Field {field_id} found {count} times")
    if result.winner is not None:
        print(f"Max Value: {result.max_count} For field ID: {result.winner}")
        print(f"The Domain is {result.winner_name}")
    else:
        print("No matching domain found")


def _print_delta(delta) -> None:
    print("Words to be updated:")
    for word, _ in delta.added:
        print(word)
    print("The new elements with selected domains have been updated...")


def _ask_field(lex: Lexicon) -> int:
    for field in lex.fields:
        print(f"{field.field_id} {field.name}")
    print("Your choice is: ", end="", flush=True)
    answer = input().strip()
    field = lex.field_by_name(answer)
    if field is None and answer.isdigit():
        field = lex.field_by_id(int(answer))
    if field is None:
        raise UnknownFieldError(f"unknown field {answer!r}")
    print(f"Your choice is: {field.name}")
    return field.field_id


def _spellcheck_gate(sentence: str, lex: Lexicon) -> str:
    """Offer corrections for out-of-vocabulary words, then let the user
    rewrite the sentence word by word. Non-interactive runs pass through."""
    vocabulary = lex.vocabulary()
    tokens = tokenize(sentence)
    unknown = []
    for token in tokens:
        if token.is_punct or token.surface.lower() in vocabulary:
            continue
        suggestion = suggest_spellings(token.surface, lex)
        if suggestion.candidates:
            unknown.append((token.position, token.surface, suggestion))
    if not unknown:
        return sentence
    print("Probable Spelling Matches found...")
    for _, surface, suggestion in unknown:
        options = " ".join(w for w, _ in suggestion.candidates)
        print(f"{surface}: {options}")
    print("Do you wish to change the input(y/n): ", end="", flush=True)
    if input().strip().lower() != "y":
        return sentence
    replacements = {}
    for position, surface, suggestion in unknown:
        options = " ".join(w for w, _ in suggestion.candidates)
        print(f"Replace {surface} with ({options}) or press enter to keep: ", end="", flush=True)
        choice = input().strip().lower()
        if choice and any(choice == w for w, _ in suggestion.candidates):
            replacements[position] = choice
    if not replacements:
        return sentence
    chunks: list[str] = []
    open_chunk = False  # last chunk is a leading punctuation run
    for token in tokens:
        surface = replacements.get(token.position, token.surface)
        if token.is_punct and chunks:
            chunks[-1] += surface
        elif token.is_punct:
            chunks.append(surface)
            open_chunk = True
        elif open_chunk:
            chunks[-1] += surface
            open_chunk = False
        else:
            chunks.append(surface)
    return " ".join(chunks)


def cmd_disambiguate(args: argparse.Namespace) -> int:
    try:
        lex = _load_lexicon(args)
    except (DomainsenseError, OSError) as exc:
        print(f"error: cannot load lexicon: {exc}", file=sys.stderr)
        return ENV_ERROR

    interactive = _is_interactive() and args.output_format == "text"
    sentence = args.sentence
    try:
        if interactive and not args.no_spellcheck:
            sentence = _spellcheck_gate(sentence, lex)
        delta = None
        if args.mode == "hybrid":
            result = disambiguate_sentence(sentence, lex)
            if args.output_format == "text":
                _print_trace(result, lex)
            if result.winner is not None and len(result.tied) == 1:
                delta = unsupervised_update(result, lex)
            else:
                # tie or zero votes: escalate to the operator when there is one
                chosen = None
                if interactive:
                    print("Step 4: Checking for Correctness")
                    print("Is this the type of the sentence at input? Y/N")
                    if input().strip().lower() not in ("", "y", "yes"):
                        print("Step 5: Supervised Learning")
                        chosen = _ask_field(lex)
                if chosen is not None:
                    corr = Correction(sentence, result.winner, confirmed=False, chosen_field=chosen)
                    delta = supervised_correct(result, corr, lex)
                    print(f"So the new field of this sentence is set to: {lex.field_name(chosen)}")
                elif result.winner is not None:
                    delta = unsupervised_update(result, lex)
        else:
            result = disambiguate_sentence(sentence, lex)
            if args.output_format == "text":
                _print_trace(result, lex)
            if args.mode == "unsupervised":
                if result.winner is not None:
                    delta = unsupervised_update(result, lex)
            else:  # supervised
                confirmed = True
                if args.output_format == "text":
                    print("Step 4: Checking for Correctness")
                    print("Is this the type of the sentence at input? Y/N")
                if interactive:
                    confirmed = input().strip().lower() in ("", "y", "yes")
                if confirmed:
                    if result.winner is not None:
                        delta = unsupervised_update(result, lex)
                else:
                    print("Step 5: Supervised Learning")
                    chosen = _ask_field(lex)
                    corr = Correction(sentence, result.winner, confirmed=False, chosen_field=chosen)
                    delta = supervised_correct(result, corr, lex)
                    print(f"So the new field of this sentence is set to: {lex.field_name(chosen)}")
        if delta is not None:
            lex.save(args.lexicon)
            if args.output_format == "text":
                _print_delta(delta)
        if args.output_format == "structured":
            print(json.dumps(_structured_result(result, lex, delta)))
        return OK
    except (EmptySentenceError, NoContentWordsError, UnknownFieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR


def _structured_result(result: Disambiguation, lex: Lexicon, delta) -> dict:
    return {
        "sentence": result.sentence,
        "tokens": [
            {"surface": t.surface, "tag": t.tag, "kind": t.kind} for t in result.tagged
        ],
        "matches": [
            {"word": w, "field_id": f, "field_name": lex.field_name(f)}
            for w, f in result.tally.trace
        ],
        "counts": [
            {"field_id": f, "field_name": lex.field_name(f), "count": c}
            for f, c in sorted(result.tally.counts.items(), key=lambda kv: (-kv[1], kv[0]))
        ],
        "winner": result.winner_name,
        "winner_field_id": result.winner,
        "max_count": result.max_count,
        "tied": result.tied,
        "unknown_words": result.unknown_words,
        "applied_delta": [
            {"word": w, "field_id": f} for w, f in (delta.added if delta else ())
        ],
    }


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        lex = _load_lexicon(args)
    except (DomainsenseError, OSError) as exc:
        print(f"error: cannot load lexicon: {exc}", file=sys.stderr)
        return ENV_ERROR
    corpus_path = Path(args.corpus) if args.corpus else evaluation.bundled_corpus_path()
    try:
        corpus = evaluation.load_corpus(corpus_path)
    except MalformedFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    modes = MODES if args.eval_mode == "all" else (args.eval_mode,)
    reports = {}
    try:
        for mode in modes:
            rows, totals, _ = evaluation.run_mode(corpus, lex, mode)
            reports[mode] = (rows, totals)
            evaluation.write_report(out_dir / f"eval_{mode}.tsv", rows, totals)
            print(
                f"{mode}: {totals.correct}/{totals.disambiguated} correct "
                f"= {totals.overall_accuracy_pct:.2f}%"
            )
    except DomainsenseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR
    if len(modes) == len(MODES):
        evaluation.write_comparison(out_dir / "eval_comparison.tsv", reports)
    return OK


def cmd_lexicon(args: argparse.Namespace) -> int:
    path = Path(args.lexicon)
    if args.action == "init":
        if (path / "fields.tsv").exists():
            print(f"error: {path} already holds a lexicon", file=sys.stderr)
            return USER_ERROR
        create_seed_lexicon().save(path)
        print(f"initialized lexicon at {path}")
        return OK
    try:
        lex = Lexicon.load(path)
    except MalformedFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ENV_ERROR
    except IntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR
    if args.action == "list":
        counts = {f.field_id: 0 for f in lex.fields}
        for meaning in lex.meanings:
            counts[meaning.field_id] += 1
        for field in lex.fields:
            print(f"{field.field_id}\t{field.name}\t{counts[field.field_id]} meanings")
        print(
            f"{len(lex.fields)} fields, {len(lex.meanings)} meanings, "
            f"{len(lex.general_words)} general words"
        )
        return OK
    # add
    if not args.word or not args.field:
        print("error: lexicon add needs WORD and FIELD arguments", file=sys.stderr)
        return USER_ERROR
    try:
        added = lex.add_meaning(args.word, args.field)
    except DomainsenseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR
    if added:
        lex.save(path)
        print(f"added {args.word.lower()} -> {lex.field_by_name(args.field).name}")
    else:
        print(f"no change: {args.word.lower()} already maps to {lex.field_by_name(args.field).name}")
    return OK


def cmd_serve(args: argparse.Namespace) -> int:
    try:
        Lexicon.load(args.lexicon)
    except (DomainsenseError, OSError) as exc:
        print(f"error: cannot load lexicon: {exc}", file=sys.stderr)
        return ENV_ERROR
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.lexicon), host=args.host, port=args.port, log_level="warning")
    return OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
