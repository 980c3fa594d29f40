"""Sentiment lexicon loading: NRC-style multi-category and Bing-style polarity.

Both loaders read plain UTF-8 TSV files so that the user-supplied copies of
the licensed lexicons can be used directly. The repository itself ships only
a small synthetic demo pair (``demo_nrc.tsv`` / ``demo_bing.tsv``) for tests
and examples; it is not the NRC or Bing data.

NRC format:  word<TAB>category<TAB>flag      (flag 0 or 1; only 1 is loaded)
Bing format: word<TAB>polarity               (optional "word<TAB>sentiment" header)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .corpus import _read_utf8
from .errors import (
    ConflictingEntryError,
    EmptyLexiconError,
    MalformedRowError,
    UnknownCategoryError,
    UnknownPolarityError,
)


class SentimentCategory(enum.Enum):
    """The closed set of NRC categories: two polarities plus eight emotions."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    ANGER = "anger"
    FEAR = "fear"
    ANTICIPATION = "anticipation"
    TRUST = "trust"
    SURPRISE = "surprise"
    SADNESS = "sadness"
    JOY = "joy"
    DISGUST = "disgust"


CATEGORY_ORDER: tuple[SentimentCategory, ...] = tuple(SentimentCategory)


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class NrcLexicon:
    """Immutable word -> set-of-categories map. Absent words map to the empty set."""

    entries: dict[str, frozenset[SentimentCategory]] = field(default_factory=dict)

    def lookup(self, word: str) -> frozenset[SentimentCategory]:
        return self.entries.get(word, frozenset())

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def to_rows(self) -> list[tuple[str, str, int]]:
        """Flag=1 TSV rows in deterministic order; reloading them round-trips."""
        rows = []
        for word in sorted(self.entries):
            for cat in sorted(self.entries[word], key=lambda c: c.value):
                rows.append((word, cat.value, 1))
        return rows


@dataclass(frozen=True)
class BingLexicon:
    """Immutable word -> polarity map."""

    entries: dict[str, Polarity] = field(default_factory=dict)

    def lookup(self, word: str) -> Polarity | None:
        return self.entries.get(word)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def load_nrc(path: str | Path) -> NrcLexicon:
    """Load an NRC-format TSV. Only flag=1 rows are ingested.

    Raises MalformedRowError, UnknownCategoryError or EmptyLexiconError.
    Blank lines are skipped (the published distribution begins with one).
    """
    text = _read_utf8(path)
    entries: dict[str, set[SentimentCategory]] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedRowError(path, line_no, f"expected 3 tab-separated fields, got {len(fields)}")
        word, label, flag = fields[0].strip().lower(), fields[1].strip(), fields[2].strip()
        if not word:
            raise MalformedRowError(path, line_no, "empty word")
        if flag not in ("0", "1"):
            raise MalformedRowError(path, line_no, f"flag must be 0 or 1, got {flag!r}")
        try:
            category = SentimentCategory(label)
        except ValueError:
            raise UnknownCategoryError(path, line_no, label) from None
        if flag == "1":
            entries.setdefault(word, set()).add(category)
    if not entries:
        raise EmptyLexiconError(path)
    return NrcLexicon({word: frozenset(cats) for word, cats in entries.items()})


def load_bing(path: str | Path) -> BingLexicon:
    """Load a Bing-format TSV. A literal "word<TAB>sentiment" header is skipped.

    Duplicate rows with the same polarity are idempotent; a word appearing
    with both polarities raises ConflictingEntryError.
    """
    text = _read_utf8(path)
    entries: dict[str, Polarity] = {}
    first_seen: dict[str, int] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedRowError(path, line_no, f"expected 2 tab-separated fields, got {len(fields)}")
        word, label = fields[0].strip().lower(), fields[1].strip()
        if line_no == 1 and word == "word" and label.lower() == "sentiment":
            continue
        if not word:
            raise MalformedRowError(path, line_no, "empty word")
        try:
            polarity = Polarity(label)
        except ValueError:
            raise UnknownPolarityError(path, line_no, label) from None
        if word in entries and entries[word] is not polarity:
            raise ConflictingEntryError(path, word, first_seen[word], line_no)
        if word not in entries:
            entries[word] = polarity
            first_seen[word] = line_no
    return BingLexicon(entries)


def demo_nrc_path() -> Path:
    """Path of the packaged synthetic demo lexicon (not the NRC data)."""
    return Path(str(resources.files("lexsent").joinpath("data/demo_nrc.tsv")))


def demo_bing_path() -> Path:
    """Path of the packaged synthetic demo polarity lexicon (not the Bing data)."""
    return Path(str(resources.files("lexsent").joinpath("data/demo_bing.tsv")))
