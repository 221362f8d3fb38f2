from __future__ import annotations

import pytest

from domainsense import (
    Correction,
    Lexicon,
    NoContentWordsError,
    NotACorrectionError,
    NoWinnerError,
    UnknownFieldError,
    create_seed_lexicon,
    disambiguate_sentence,
    hybrid_step,
    supervised_correct,
    unsupervised_update,
)


def make_lexicon(meanings: dict[str, list[str]]):
    """Seed fields and general words with a hand-picked meanings table."""
    lex = Lexicon()
    seed = create_seed_lexicon()
    for field in seed.fields:
        lex.add_field(field.name, field_id=field.field_id)
    for general in seed.general_words:
        lex.add_general(general.surface, row_id=general.id)
    for word, fields in meanings.items():
        for field_name in fields:
            lex.add_meaning(word, field_name)
    return lex


def make_sparse_lexicon():
    return make_lexicon({"play": ["Free_time"]})


def test_unsupervised_update_idempotent_case(seed):
    result = disambiguate_sentence("The play of the imagination.", seed)
    assert result.winner_name == "Free_time"
    delta = unsupervised_update(result, seed)
    assert delta.added == ()


def test_unsupervised_update_adds_missing_rows():
    # play maps only to Entertainment, drama is unknown
    sparse = make_lexicon({"play": ["Entertainment"]})
    result = disambiguate_sentence("Play the drama.", sparse)
    assert result.winner_name == "Entertainment"
    before = {(m.word, m.field_id) for m in sparse.meanings}
    delta = unsupervised_update(result, sparse)
    after = {(m.word, m.field_id) for m in sparse.meanings}
    assert delta.added == (("drama", 13),)
    assert set(delta.added) == after - before


def test_unsupervised_update_requires_winner(seed):
    result = disambiguate_sentence("The zither and the oboe.", seed)
    assert result.winner is None
    with pytest.raises(NoWinnerError):
        unsupervised_update(result, seed)


def test_supervised_correct_rewires_winner():
    lex = make_sparse_lexicon()
    result = disambiguate_sentence("Play the stock market.", lex)
    assert result.winner_name == "Free_time"
    corr = Correction(
        sentence=result.sentence,
        predicted_field=result.winner,
        confirmed=False,
        chosen_field=lex.field_by_name("Commerce").field_id,
    )
    delta = supervised_correct(result, corr, lex)
    assert ("play", 11) in delta.added
    assert ("stock", 11) in delta.added
    assert ("market", 11) in delta.added
    rerun = disambiguate_sentence("Play the stock market.", lex)
    assert rerun.winner_name == "Commerce"


def test_supervised_correct_idempotent():
    lex = make_sparse_lexicon()
    result = disambiguate_sentence("Play the stock market.", lex)
    corr = Correction(result.sentence, result.winner, confirmed=False, chosen_field=11)
    supervised_correct(result, corr, lex)
    once = lex.copy()
    result2 = disambiguate_sentence("Play the stock market.", lex)
    delta2 = supervised_correct(result2, corr, lex)
    assert delta2.added == ()
    assert lex == once


def test_supervised_correct_on_already_right_lexicon(seed):
    result = disambiguate_sentence("Play the stock market.", seed)
    assert result.winner_name == "Commerce"
    corr = Correction(result.sentence, result.winner, confirmed=False, chosen_field=11)
    delta = supervised_correct(result, corr, seed)
    assert delta.added == ()


def test_supervised_correct_rejects_confirmed(seed):
    result = disambiguate_sentence("Play the drama.", seed)
    corr = Correction(result.sentence, result.winner, confirmed=True)
    with pytest.raises(NotACorrectionError):
        supervised_correct(result, corr, seed)


def test_supervised_correct_unknown_field(seed):
    result = disambiguate_sentence("Play the drama.", seed)
    corr = Correction(result.sentence, result.winner, confirmed=False, chosen_field=999)
    with pytest.raises(UnknownFieldError):
        supervised_correct(result, corr, seed)


def test_monotone_learning():
    lex = make_sparse_lexicon()
    result = disambiguate_sentence("Play the stock market.", lex)
    before = result.tally.counts.get(11, 0)
    corr = Correction(result.sentence, result.winner, confirmed=False, chosen_field=11)
    supervised_correct(result, corr, lex)
    for word in result.content_words:
        assert 11 in {f for f, _ in lex.lookup_domains(word)}
    rerun = disambiguate_sentence("Play the stock market.", lex)
    assert rerun.tally.counts.get(11, 0) >= before


def test_updates_are_conservative(seed):
    before = {(m.word, m.field_id) for m in seed.meanings}
    result = disambiguate_sentence("Play the drama.", seed)
    unsupervised_update(result, seed)
    corr = Correction(result.sentence, result.winner, confirmed=False, chosen_field=2)
    supervised_correct(result, corr, seed)
    after = {(m.word, m.field_id) for m in seed.meanings}
    assert before <= after


# ----------------------------------------------------------------------
# Hybrid flow
# ----------------------------------------------------------------------


def fail_if_asked(sentence, winner, tied):
    raise AssertionError("confirmation provider should not have been consulted")


def test_hybrid_auto_accepts_unique_winner(seed):
    reference = seed.copy()
    result, delta, asked = hybrid_step("The play of the imagination.", seed, fail_if_asked)
    assert not asked
    assert result.winner_name == "Free_time"
    ref_result = disambiguate_sentence("The play of the imagination.", reference)
    unsupervised_update(ref_result, reference)
    assert seed == reference


def test_hybrid_escalates_ties(seed):
    # racing vs market: Sports and Commerce tie at one vote each
    calls = []

    def choose_commerce(sentence, winner, tied):
        calls.append((winner, tuple(tied)))
        return 11

    result, delta, asked = hybrid_step("The racing market.", seed, choose_commerce)
    assert asked
    assert calls and calls[0][1] == (2, 11)
    assert ("racing", 11) in delta.added


def test_hybrid_learns_unknown_words(seed):
    def choose_commerce(sentence, winner, tied):
        assert winner is None
        assert tied == []
        return 11

    result, delta, asked = hybrid_step("The zither and the oboe.", seed, choose_commerce)
    assert asked
    assert set(delta.added) == {("zither", 11), ("oboe", 11)}


def test_hybrid_propagates_no_winner_when_provider_declines(seed):
    with pytest.raises(NoWinnerError):
        hybrid_step("The zither and the oboe.", seed, lambda s, w, t: None)


def test_hybrid_provider_can_accept_tied_prediction(seed):
    reference = seed.copy()
    result, delta, asked = hybrid_step("The racing market.", seed, lambda s, w, t: None)
    assert asked
    ref_result = disambiguate_sentence("The racing market.", reference)
    unsupervised_update(ref_result, reference)
    assert seed == reference


def test_hybrid_errors_pass_through(seed):
    with pytest.raises(NoContentWordsError):
        hybrid_step("of the for", seed, fail_if_asked)
