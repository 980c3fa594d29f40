"""Document loading, paragraph indexing, tokenization and stop word removal.

A document is read as a sequence of 1-indexed paragraphs, turned into a
tidy (line, word) token table, and filtered against a stop word list.
Everything downstream of this module consumes the tidy token sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple

from .errors import EncodingError

PARAGRAPH_MODES = ("line", "blank-line")

# A token is a maximal run of letters and digits; an apostrophe is kept only
# with a letter on both sides. Underscores and all punctuation separate.
_TOKEN_RE = re.compile(r"[^\W_]+(?:(?<=[^\W\d_])'(?=[^\W\d_])[^\W_]+)*", re.UNICODE)

_BOM = "﻿"


class TidyToken(NamedTuple):
    line: int
    word: str


@dataclass(frozen=True)
class RawDocument:
    """A loaded text document: name plus 1-indexed non-empty paragraphs."""

    source_name: str
    paragraphs: tuple[str, ...]

    @property
    def paragraph_count(self) -> int:
        return len(self.paragraphs)


@dataclass(frozen=True)
class StopWordList:
    """Set of lowercase words excluded from analysis by exact match."""

    words: frozenset[str]

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "StopWordList":
        return cls(frozenset(w.strip().lower() for w in words if w.strip()))

    @classmethod
    def load(cls, path: str | Path) -> "StopWordList":
        """Read a stop word file: one word per line, '#' lines are comments."""
        text = _read_utf8(path)
        words = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words.append(line.lower())
        return cls(frozenset(words))

    @classmethod
    def builtin(cls) -> "StopWordList":
        """The packaged English list (snowball + SMART + onix union)."""
        text = resources.files("lexsent").joinpath("data/stopwords_en.txt").read_text("utf-8")
        return cls.from_words(
            line for line in text.splitlines() if line.strip() and not line.startswith("#")
        )

    @classmethod
    def empty(cls) -> "StopWordList":
        return cls(frozenset())


def _read_utf8(path: str | Path) -> str:
    data = Path(path).read_bytes()
    if data.startswith(b"\xef\xbb\xbf"):
        data = data[3:]
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(path, exc.start) from None


def load_document(path: str | Path, mode: str = "line") -> RawDocument:
    """Load a UTF-8 text file into numbered paragraphs.

    mode="line": every non-blank physical line is one paragraph.
    mode="blank-line": runs of non-blank lines separated by blank lines
    are joined (with single spaces) into one paragraph each.

    Blank lines (empty or whitespace-only) never become paragraphs, so
    paragraph indices are contiguous from 1.
    """
    if mode not in PARAGRAPH_MODES:
        raise ValueError(f"mode must be one of {PARAGRAPH_MODES}, got {mode!r}")
    text = _read_utf8(path)
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")

    paragraphs: list[str] = []
    if mode == "line":
        paragraphs = [line for line in lines if line.strip()]
    else:
        run: list[str] = []
        for line in lines:
            if line.strip():
                run.append(line)
            elif run:
                paragraphs.append(" ".join(run))
                run = []
        if run:
            paragraphs.append(" ".join(run))

    return RawDocument(source_name=Path(path).stem, paragraphs=tuple(paragraphs))


def tokenize(doc: RawDocument) -> list[TidyToken]:
    """Split every paragraph into lowercase word tokens, in textual order.

    Typographic apostrophes are normalized to straight ones before
    matching, so "don’t" and "don't" yield the same token.
    """
    tokens: list[TidyToken] = []
    for line_no, paragraph in enumerate(doc.paragraphs, start=1):
        normalized = paragraph.lower().replace("’", "'")
        for match in _TOKEN_RE.finditer(normalized):
            tokens.append(TidyToken(line_no, match.group()))
    return tokens


def remove_stop_words(
    tokens: Iterable[TidyToken],
    standard: StopWordList,
    custom: StopWordList | None = None,
) -> list[TidyToken]:
    """Drop tokens whose word is in the standard or custom list."""
    extra = custom.words if custom is not None else frozenset()
    return [t for t in tokens if t.word not in standard.words and t.word not in extra]
