"""Three-table lexicon: fields, general words, and word-to-field meanings.

The lexicon is the system's entire knowledge. It lives in memory and
persists as a directory of four TSV files (fields.tsv, general.tsv,
meanings.tsv, counters.tsv) so that runs are hermetic and diffs stay
readable. All word storage and matching is lowercase.
"""

from __future__ import annotations

import copy as _copy
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyWordError, IntegrityError, MalformedFileError, UnknownFieldError

__all__ = [
    "Field",
    "GeneralWord",
    "Meaning",
    "Lexicon",
    "create_seed_lexicon",
]


@dataclass(frozen=True)
class Field:
    field_id: int
    name: str


@dataclass(frozen=True)
class GeneralWord:
    id: int
    surface: str


@dataclass(frozen=True)
class Meaning:
    id: int
    word: str
    field_id: int


# Seed ids are contractual: persisted lexicons and tests depend on them.
_SEED_FIELDS = [
    (1, "Computer"),
    (2, "Sports"),
    (3, "Medical"),
    (4, "Engineering"),
    (5, "Factotum"),
    (6, "History"),
    (7, "Geography"),
    (8, "Games"),
    (9, "Law"),
    (10, "Biomedical"),
    (11, "Commerce"),
    (12, "Free_time"),
    (13, "Entertainment"),
    (14, "Profession"),
    (15, "Economy"),
    (16, "Nature"),
]

_SEED_GENERAL = [
    (70, "is"),
    (71, "the"),
    (72, "was"),
    (73, "that"),
    (74, "on"),
    (75, "of"),
    (76, "for"),
    (77, "where"),
    (78, "how"),
    (79, "when"),
    # closed-class extension so function words in ordinary sentences
    # never leak into the vote
    (80, "a"),
    (81, "an"),
    (82, "to"),
    (83, "in"),
    (84, "at"),
    (85, "by"),
    (86, "with"),
    (87, "and"),
    (88, "or"),
    (89, "it"),
    (90, "he"),
    (91, "she"),
    (92, "they"),
    (93, "we"),
    (94, "you"),
    (95, "i"),
]

_SEED_MEANINGS = [
    (441, "diving", 2),
    (442, "racing", 2),
    (443, "athletics", 2),
    (444, "wrestling", 2),
    (445, "boxing", 2),
    (446, "fencing", 2),
    (447, "archery", 2),
    (448, "fishing", 2),
    (449, "hunting", 2),
    (450, "bowling", 2),
    (451, "play", 11),
    (452, "play", 12),
    (453, "play", 13),
    (454, "stock", 11),
    (455, "market", 11),
    (456, "imagination", 12),
    (457, "drama", 13),
    (458, "fisherman", 14),
    (459, "went", 5),
    (460, "bank", 5),
    (461, "bank", 15),
    (462, "bank", 16),
]

_FILE_SCHEMAS = {
    "fields.tsv": ("field_id", "name"),
    "general.tsv": ("id", "word"),
    "meanings.tsv": ("id", "word", "field_id"),
    "counters.tsv": ("table", "next_id"),
}

_TABLES = ("fields", "general", "meanings")


class Lexicon:
    """Mutable three-table lexicon with referential integrity.

    Mutations only ever add rows; there is no deletion API. Fresh ids come
    from per-table counters that are persisted alongside the rows.

    Not internally synchronized: concurrent reads are safe, but any
    mutation (add_*, save) needs exclusive access. The service layer
    serializes writers; library callers own their locking.
    """

    def __init__(self) -> None:
        self._fields: dict[int, Field] = {}
        self._field_ids_by_name: dict[str, int] = {}
        self._general: dict[str, GeneralWord] = {}
        self._meanings: dict[tuple[str, int], Meaning] = {}
        self._fields_by_word: dict[str, set[int]] = {}
        self.next_ids: dict[str, int] = {t: 1 for t in _TABLES}

    # ------------------------------------------------------------------
    # Read access
    # ------------------------------------------------------------------

    @property
    def fields(self) -> list[Field]:
        return sorted(self._fields.values(), key=lambda f: f.field_id)

    @property
    def general_words(self) -> list[GeneralWord]:
        return sorted(self._general.values(), key=lambda g: g.id)

    @property
    def meanings(self) -> list[Meaning]:
        return sorted(self._meanings.values(), key=lambda m: m.id)

    def field_by_id(self, field_id: int) -> Field | None:
        return self._fields.get(field_id)

    def field_by_name(self, name: str) -> Field | None:
        field_id = self._field_ids_by_name.get(name.strip().lower())
        return self._fields.get(field_id) if field_id is not None else None

    def field_name(self, field_id: int) -> str:
        field = self._fields.get(field_id)
        if field is None:
            raise UnknownFieldError(f"no field with id {field_id}")
        return field.name

    def lookup_domains(self, word: str) -> list[tuple[int, str]]:
        """All (field_id, field_name) rows for a word, ascending by id."""
        ids = self._fields_by_word.get(word.strip().lower(), set())
        return [(i, self._fields[i].name) for i in sorted(ids)]

    def is_general(self, word: str) -> bool:
        return word.strip().lower() in self._general

    def meaning_words(self) -> set[str]:
        """Distinct words that carry at least one meaning row."""
        return set(self._fields_by_word)

    def vocabulary(self) -> set[str]:
        """Every word the lexicon knows: meaning words plus general words."""
        return self.meaning_words() | set(self._general)

    def has_meaning(self, word: str, field_id: int) -> bool:
        return (word.strip().lower(), field_id) in self._meanings

    # ------------------------------------------------------------------
    # Mutation
    # ------------------------------------------------------------------

    def add_field(self, name: str, field_id: int | None = None) -> Field:
        name = name.strip()
        if not name:
            raise IntegrityError("field name is empty")
        key = name.lower()
        if key in self._field_ids_by_name:
            raise IntegrityError(f"duplicate field name {name!r}")
        if field_id is None:
            field_id = self.next_ids["fields"]
        if field_id < 1:
            raise IntegrityError(f"field id {field_id} is not positive")
        if field_id in self._fields:
            raise IntegrityError(f"duplicate field id {field_id}")
        field = Field(field_id, name)
        self._fields[field_id] = field
        self._field_ids_by_name[key] = field_id
        self.next_ids["fields"] = max(self.next_ids["fields"], field_id + 1)
        return field

    def add_general(self, word: str, row_id: int | None = None) -> GeneralWord:
        word = word.strip().lower()
        if not word:
            raise IntegrityError("general word is empty")
        if any(c.isspace() for c in word):
            raise IntegrityError(f"general word {word!r} contains whitespace")
        if word in self._general:
            raise IntegrityError(f"duplicate general word {word!r}")
        if row_id is None:
            row_id = self.next_ids["general"]
        if row_id < 1 or any(g.id == row_id for g in self._general.values()):
            raise IntegrityError(f"bad general word id {row_id}")
        entry = GeneralWord(row_id, word)
        self._general[word] = entry
        self.next_ids["general"] = max(self.next_ids["general"], row_id + 1)
        return entry

    def add_meaning(self, word: str, field_name: str) -> bool:
        """Add a (word, field) meaning row. Returns True iff a row was added.

        Idempotent: re-adding an existing pair leaves the lexicon unchanged
        and returns False.
        """
        field = self.field_by_name(field_name)
        if field is None:
            raise UnknownFieldError(f"unknown field {field_name!r}")
        word = word.strip().lower()
        if not word:
            raise EmptyWordError("word is empty after normalization")
        key = (word, field.field_id)
        if key in self._meanings:
            return False
        row_id = self.next_ids["meanings"]
        self._meanings[key] = Meaning(row_id, word, field.field_id)
        self._fields_by_word.setdefault(word, set()).add(field.field_id)
        self.next_ids["meanings"] = row_id + 1
        return True

    def _insert_meaning(self, row_id: int, word: str, field_id: int) -> None:
        # load path: ids come from the file, invariants checked by caller
        key = (word, field_id)
        if key in self._meanings:
            raise IntegrityError(f"duplicate meaning pair {key}")
        if field_id not in self._fields:
            raise IntegrityError(f"meaning {word!r} references missing field {field_id}")
        if row_id < 1 or any(m.id == row_id for m in self._meanings.values()):
            raise IntegrityError(f"bad meaning id {row_id}")
        self._meanings[key] = Meaning(row_id, word, field_id)
        self._fields_by_word.setdefault(word, set()).add(field_id)
        self.next_ids["meanings"] = max(self.next_ids["meanings"], row_id + 1)

    def copy(self) -> "Lexicon":
        return _copy.deepcopy(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return (
            self._fields == other._fields
            and self._general == other._general
            and self._meanings == other._meanings
            and self.next_ids == other.next_ids
        )

    def __repr__(self) -> str:
        return (
            f"Lexicon(fields={len(self._fields)}, general={len(self._general)}, "
            f"meanings={len(self._meanings)})"
        )

    # ------------------------------------------------------------------
    # Persistence
    # ------------------------------------------------------------------

    def save(self, path: str | Path) -> None:
        """Write the four TSV files under ``path``, creating it if needed.

        Rows are sorted ascending by id so saves are bit-exact for equal
        lexicons.
        """
        root = Path(path)
        root.mkdir(parents=True, exist_ok=True)
        _write_tsv(
            root / "fields.tsv",
            _FILE_SCHEMAS["fields.tsv"],
            [(f.field_id, f.name) for f in self.fields],
        )
        _write_tsv(
            root / "general.tsv",
            _FILE_SCHEMAS["general.tsv"],
            [(g.id, g.surface) for g in self.general_words],
        )
        _write_tsv(
            root / "meanings.tsv",
            _FILE_SCHEMAS["meanings.tsv"],
            [(m.id, m.word, m.field_id) for m in self.meanings],
        )
        _write_tsv(
            root / "counters.tsv",
            _FILE_SCHEMAS["counters.tsv"],
            [(t, self.next_ids[t]) for t in _TABLES],
        )

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        """Read a lexicon directory, validating every invariant.

        Raises MalformedFileError for parse problems and IntegrityError for
        rows that parse but break referential integrity or uniqueness.
        """
        root = Path(path)
        lex = cls()

        for field_id, name in _read_tsv(root / "fields.tsv", int_cols=(0,)):
            lex.add_field(name, field_id=field_id)

        for row_id, word in _read_tsv(root / "general.tsv", int_cols=(0,)):
            if word != word.strip().lower():
                raise IntegrityError(f"general word {word!r} is not lowercase")
            lex.add_general(word, row_id=row_id)

        for row_id, word, field_id in _read_tsv(root / "meanings.tsv", int_cols=(0, 2)):
            if not word:
                raise IntegrityError("meaning row has empty word")
            if word != word.lower():
                raise IntegrityError(f"meaning word {word!r} is not lowercase")
            lex._insert_meaning(row_id, word, field_id)

        counters = dict(_read_tsv(root / "counters.tsv", int_cols=(1,)))
        if set(counters) != set(_TABLES):
            raise IntegrityError(f"counters name tables {sorted(counters)}, expected {sorted(_TABLES)}")
        for table, next_id in counters.items():
            if next_id < lex.next_ids[table]:
                raise IntegrityError(f"counter for {table} ({next_id}) is behind the highest row id")
            lex.next_ids[table] = next_id
        return lex


def _write_tsv(path: Path, header: tuple[str, ...], rows: list[tuple]) -> None:
    lines = ["\t".join(header)]
    lines += ["\t".join(str(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _read_tsv(path: Path, int_cols: tuple[int, ...]) -> list[tuple]:
    name = path.name
    expected = _FILE_SCHEMAS[name]
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MalformedFileError(str(path), 0, "file is missing") from None
    rows: list[tuple] = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedFileError(str(path), 0, "file is empty")
    header = tuple(lines[0].split("\t"))
    if header != expected:
        raise MalformedFileError(str(path), 1, f"bad header {header!r}, expected {expected!r}")
    for line_no, line in enumerate(lines[1:], start=2):
        cols = line.split("\t")
        if len(cols) != len(expected):
            raise MalformedFileError(str(path), line_no, f"expected {len(expected)} columns, got {len(cols)}")
        parsed: list = list(cols)
        for idx in int_cols:
            try:
                parsed[idx] = int(cols[idx])
            except ValueError:
                raise MalformedFileError(str(path), line_no, f"column {expected[idx]!r} is not an integer") from None
        rows.append(tuple(parsed))
    return rows


def create_seed_lexicon() -> Lexicon:
    """Build the self-consistent starter lexicon.

    Sixteen domains, the function-word list, the ten sports terms, and the
    worked polysemous words (play, stock, market, imagination, drama,
    fisherman, went, bank) with their domain sets.
    """
    lex = Lexicon()
    for field_id, name in _SEED_FIELDS:
        lex.add_field(name, field_id=field_id)
    for row_id, word in _SEED_GENERAL:
        lex.add_general(word, row_id=row_id)
    for row_id, word, field_id in _SEED_MEANINGS:
        lex._insert_meaning(row_id, word, field_id)
    return lex
