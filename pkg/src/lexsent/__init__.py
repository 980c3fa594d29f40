"""lexsent: lexicon-based sentiment analysis of plain-text documents.

Pipeline: load a document into numbered paragraphs, tokenize into a tidy
(line, word) table, remove stop words, join against an NRC-style
multi-category lexicon and a Bing-style polarity lexicon, aggregate the
four analysis tables, smooth the intertemporal series with LOESS, and
render deterministic SVG charts plus a 2x2 comparison dashboard.
"""

from .analysis import (
    BingMatch,
    DistributionRow,
    LineScore,
    LineSentimentCount,
    WordSentimentCount,
    bing_matches,
    filter_min_count,
    line_scores,
    line_sentiment_counts,
    sentiment_distribution,
    subset_line,
    word_sentiment_counts,
)
from .corpus import (
    RawDocument,
    StopWordList,
    TidyToken,
    load_document,
    remove_stop_words,
    tokenize,
)
from .errors import (
    ConflictingEntryError,
    DegenerateNeighborhoodError,
    EmptyLexiconError,
    EmptySeriesError,
    EncodingError,
    InsufficientDataError,
    LexsentError,
    MalformedRowError,
    UnknownCategoryError,
    UnknownPolarityError,
)
from .lexicon import (
    CATEGORY_ORDER,
    BingLexicon,
    NrcLexicon,
    Polarity,
    SentimentCategory,
    demo_bing_path,
    demo_nrc_path,
    load_bing,
    load_nrc,
)
from .render import PALETTE, ChartKind, ChartSpec, Dashboard, render_chart, render_dashboard
from .smoothing import (
    LOESS_BACKEND,
    CurvePoint,
    LoessConfig,
    SeriesPoint,
    SmoothedCurve,
    loess_fit,
    tricube_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BingLexicon", "BingMatch", "CATEGORY_ORDER", "ChartKind", "ChartSpec",
    "ConflictingEntryError", "CurvePoint", "Dashboard", "DegenerateNeighborhoodError",
    "DistributionRow", "EmptyLexiconError", "EmptySeriesError", "EncodingError",
    "InsufficientDataError", "LexsentError", "LineScore", "LineSentimentCount",
    "LOESS_BACKEND", "LoessConfig", "MalformedRowError", "NrcLexicon", "PALETTE",
    "Polarity", "RawDocument", "SentimentCategory", "SeriesPoint", "SmoothedCurve",
    "StopWordList", "TidyToken", "UnknownCategoryError", "UnknownPolarityError",
    "WordSentimentCount", "bing_matches", "demo_bing_path", "demo_nrc_path",
    "filter_min_count", "line_scores", "line_sentiment_counts", "load_bing",
    "load_document", "load_nrc", "loess_fit", "remove_stop_words", "render_chart",
    "render_dashboard", "sentiment_distribution", "subset_line", "tokenize",
    "tricube_weight", "word_sentiment_counts",
]
