"""Exception types raised by the lexsent pipeline."""


class LexsentError(Exception):
    """Base class for all lexsent-specific failures."""


class EncodingError(LexsentError):
    """Input file is not valid UTF-8."""

    def __init__(self, path, byte_offset):
        self.path = str(path)
        self.byte_offset = byte_offset
        super().__init__(f"{self.path}: invalid UTF-8 byte sequence at byte offset {byte_offset}")


class LexiconFormatError(LexsentError):
    """Base class for lexicon file problems."""


class MalformedRowError(LexiconFormatError):
    def __init__(self, path, line_no, reason):
        self.line_no = line_no
        super().__init__(f"{path}: line {line_no}: {reason}")


class UnknownCategoryError(LexiconFormatError):
    def __init__(self, path, line_no, label):
        self.line_no = line_no
        self.label = label
        super().__init__(f"{path}: line {line_no}: unknown sentiment category {label!r}")


class UnknownPolarityError(LexiconFormatError):
    def __init__(self, path, line_no, label):
        self.line_no = line_no
        self.label = label
        super().__init__(f"{path}: line {line_no}: unknown polarity {label!r}")


class ConflictingEntryError(LexiconFormatError):
    def __init__(self, path, word, first_line, second_line):
        self.word = word
        self.first_line = first_line
        self.second_line = second_line
        super().__init__(
            f"{path}: word {word!r} assigned both polarities (lines {first_line} and {second_line})"
        )


class EmptyLexiconError(LexiconFormatError):
    def __init__(self, path):
        super().__init__(f"{path}: lexicon contains no usable entries")


class InsufficientDataError(LexsentError):
    """Too few distinct x values to fit a local regression."""


class DegenerateNeighborhoodError(LexsentError):
    """A local system stayed singular even after ridge regularization."""


class EmptySeriesError(LexsentError):
    """A chart was requested for an empty data series."""
