from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domainsense import (
    EmptyWordError,
    IntegrityError,
    Lexicon,
    MalformedFileError,
    UnknownFieldError,
    create_seed_lexicon,
)

WORDS = st.text(alphabet="abcdefghij", min_size=1, max_size=6)
FIELD_NAMES = st.sampled_from(["Sports", "Commerce", "Nature", "Factotum", "Economy"])


def test_seed_field_ids_are_stable(seed):
    assert seed.field_by_name("Sports").field_id == 2
    assert seed.field_by_name("Factotum").field_id == 5
    assert seed.field_by_name("Commerce").field_id == 11
    assert seed.field_by_name("Nature").field_id == 16
    assert [f.field_id for f in seed.fields] == list(range(1, 17))


def test_seed_meaning_ids_are_stable(seed):
    racing = [m for m in seed.meanings if m.word == "racing"]
    assert len(racing) == 1
    assert racing[0].field_id == 2
    assert racing[0].id == 442


def test_seed_bank_domains(seed):
    assert [name for _, name in seed.lookup_domains("bank")] == ["Factotum", "Economy", "Nature"]


def test_lookup_is_case_insensitive_and_sorted(seed):
    assert seed.lookup_domains("Bank") == seed.lookup_domains("bank")
    ids = [i for i, _ in seed.lookup_domains("play")]
    assert ids == sorted(ids)


def test_lookup_unknown_word_is_empty(seed):
    assert seed.lookup_domains("xylophone") == []


def test_is_general(seed):
    assert seed.is_general("the")
    assert seed.is_general("OF")
    assert not seed.is_general("fisherman")


def test_add_meaning_duplicate_is_noop(seed):
    before = seed.copy()
    assert seed.add_meaning("drama", "Entertainment") is False
    assert seed == before


def test_add_meaning_new_row(seed):
    count = len(seed.meanings)
    assert seed.add_meaning("opera", "Entertainment") is True
    assert len(seed.meanings) == count + 1
    assert seed.has_meaning("opera", 13)


def test_add_meaning_unknown_field(seed):
    with pytest.raises(UnknownFieldError):
        seed.add_meaning("opera", "Cooking")


def test_add_meaning_empty_word(seed):
    with pytest.raises(EmptyWordError):
        seed.add_meaning("   ", "Sports")


def test_add_meaning_case_folds(seed):
    assert seed.add_meaning("  OPERA ", "entertainment") is True
    assert seed.has_meaning("opera", 13)


@given(word=WORDS, field=FIELD_NAMES)
def test_add_meaning_idempotent(word, field):
    lex = create_seed_lexicon()
    lex.add_meaning(word, field)
    once = lex.copy()
    assert lex.add_meaning(word, field) is False
    assert lex == once


def test_round_trip_seed(tmp_path, seed):
    seed.save(tmp_path / "lex")
    assert Lexicon.load(tmp_path / "lex") == seed


def test_save_is_bit_exact(tmp_path, seed):
    seed.save(tmp_path / "a")
    seed.copy().save(tmp_path / "b")
    for name in ("fields.tsv", "general.tsv", "meanings.tsv", "counters.tsv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


@settings(max_examples=50)
@given(pairs=st.lists(st.tuples(WORDS, FIELD_NAMES), max_size=8))
def test_round_trip_after_updates(tmp_path_factory, pairs):
    lex = create_seed_lexicon()
    for word, field in pairs:
        lex.add_meaning(word, field)
    target = tmp_path_factory.mktemp("lex")
    lex.save(target)
    assert Lexicon.load(target) == lex


def test_load_rejects_dangling_field_reference(tmp_path, seed):
    seed.save(tmp_path / "lex")
    meanings = tmp_path / "lex" / "meanings.tsv"
    meanings.write_text(meanings.read_text() + "900\tghost\t99\n")
    with pytest.raises(IntegrityError):
        Lexicon.load(tmp_path / "lex")


def test_load_rejects_duplicate_word_field_pair(tmp_path, seed):
    seed.save(tmp_path / "lex")
    meanings = tmp_path / "lex" / "meanings.tsv"
    meanings.write_text(meanings.read_text() + "900\tracing\t2\n")
    with pytest.raises(IntegrityError):
        Lexicon.load(tmp_path / "lex")


def test_load_rejects_duplicate_field_name(tmp_path, seed):
    seed.save(tmp_path / "lex")
    fields = tmp_path / "lex" / "fields.tsv"
    fields.write_text(fields.read_text() + "99\tsports\n")
    with pytest.raises(IntegrityError):
        Lexicon.load(tmp_path / "lex")


def test_load_rejects_stale_counter(tmp_path, seed):
    seed.save(tmp_path / "lex")
    counters = tmp_path / "lex" / "counters.tsv"
    counters.write_text("table\tnext_id\nfields\t17\ngeneral\t96\nmeanings\t5\n")
    with pytest.raises(IntegrityError):
        Lexicon.load(tmp_path / "lex")


def test_load_reports_malformed_line_number(tmp_path, seed):
    seed.save(tmp_path / "lex")
    meanings = tmp_path / "lex" / "meanings.tsv"
    meanings.write_text(meanings.read_text() + "not-an-int\tword\t2\n")
    with pytest.raises(MalformedFileError) as exc:
        Lexicon.load(tmp_path / "lex")
    assert exc.value.line_no == len(meanings.read_text().splitlines())


def test_load_missing_file(tmp_path):
    with pytest.raises(MalformedFileError):
        Lexicon.load(tmp_path / "nowhere")


def test_referential_integrity_full_scan(seed):
    field_ids = {f.field_id for f in seed.fields}
    assert all(m.field_id in field_ids for m in seed.meanings)


def test_fresh_ids_are_monotonic(seed):
    seed.add_meaning("opera", "Entertainment")
    first = max(m.id for m in seed.meanings)
    seed.add_meaning("violin", "Entertainment")
    second = max(m.id for m in seed.meanings)
    assert second == first + 1
