"""The four counting kernels: word-sentiment frequencies, category
distribution, per-line category counts and per-line polarity scores.

All functions take the stop-word-filtered tidy token sequence. A token
whose word carries k categories contributes once to each of the k
categories (the lexicon is multi-label). Sort orders are fixed so that
outputs are reproducible byte for byte; "category ascending" means
alphabetical by label, matching how grouped count tables are usually
displayed.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, NamedTuple, Sequence

from .corpus import TidyToken
from .lexicon import CATEGORY_ORDER, BingLexicon, NrcLexicon, Polarity, SentimentCategory


class WordSentimentCount(NamedTuple):
    word: str
    sentiment: SentimentCategory
    n: int


class LineSentimentCount(NamedTuple):
    line: int
    sentiment: SentimentCategory
    n: int


class DistributionRow(NamedTuple):
    sentiment: SentimentCategory
    total: int


class LineScore(NamedTuple):
    line: int
    score: int


class BingMatch(NamedTuple):
    line: int
    word: str
    polarity: Polarity


def word_sentiment_counts(tokens: Iterable[TidyToken], lex: NrcLexicon) -> list[WordSentimentCount]:
    """Count (word, category) contributions, sorted by n descending.

    Ties break by word, then category label, both ascending.
    """
    counts: Counter[tuple[str, SentimentCategory]] = Counter()
    for token in tokens:
        for category in lex.lookup(token.word):
            counts[(token.word, category)] += 1
    rows = [WordSentimentCount(word, cat, n) for (word, cat), n in counts.items()]
    rows.sort(key=lambda r: (-r.n, r.word, r.sentiment.value))
    return rows


def filter_min_count(table: Sequence[WordSentimentCount], min_count: int = 3) -> list[WordSentimentCount]:
    """Keep rows with n >= min_count, preserving order.

    The default 3 reproduces the strict n > 2 cut used for the frequency
    chart; min_count=1 is the identity.
    """
    if min_count < 1:
        raise ValueError(f"min_count must be >= 1, got {min_count}")
    return [row for row in table if row.n >= min_count]


def sentiment_distribution(tokens: Iterable[TidyToken], lex: NrcLexicon) -> list[DistributionRow]:
    """Occurrence-weighted total per category, all 10 categories zero-filled.

    Rows come out in the canonical category order (the palette order).
    """
    totals: Counter[SentimentCategory] = Counter()
    for token in tokens:
        for category in lex.lookup(token.word):
            totals[category] += 1
    return [DistributionRow(cat, totals.get(cat, 0)) for cat in CATEGORY_ORDER]


def line_sentiment_counts(tokens: Iterable[TidyToken], lex: NrcLexicon) -> list[LineSentimentCount]:
    """Count categories per line, sorted by n descending.

    Only (line, category) pairs that occur are emitted; ties break by
    line then category label, ascending.
    """
    counts: Counter[tuple[int, SentimentCategory]] = Counter()
    for token in tokens:
        for category in lex.lookup(token.word):
            counts[(token.line, category)] += 1
    rows = [LineSentimentCount(line, cat, n) for (line, cat), n in counts.items()]
    rows.sort(key=lambda r: (-r.n, r.line, r.sentiment.value))
    return rows


def subset_line(table: Sequence[LineSentimentCount], line: int) -> list[LineSentimentCount]:
    """Rows of one line, in their original relative order."""
    return [row for row in table if row.line == line]


def bing_matches(tokens: Iterable[TidyToken], lex: BingLexicon) -> list[BingMatch]:
    """Per-token polarity matches in textual order (the polarity join table)."""
    matches = []
    for token in tokens:
        polarity = lex.lookup(token.word)
        if polarity is not None:
            matches.append(BingMatch(token.line, token.word, polarity))
    return matches


def line_scores(tokens: Iterable[TidyToken], lex: BingLexicon) -> list[LineScore]:
    """Per-line signed sum: +1 per positive match, -1 per negative match.

    Lines without any match are absent; a line whose matches cancel out
    is present with score 0. Sorted by line ascending.
    """
    sums: dict[int, int] = {}
    for match in bing_matches(tokens, lex):
        delta = 1 if match.polarity is Polarity.POSITIVE else -1
        sums[match.line] = sums.get(match.line, 0) + delta
    return [LineScore(line, sums[line]) for line in sorted(sums)]
