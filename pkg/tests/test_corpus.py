import random

import pytest

from lexsent import (
    EncodingError,
    RawDocument,
    StopWordList,
    TidyToken,
    load_document,
    remove_stop_words,
    tokenize,
)
from .conftest import SHERLOCK_HEAD_LINES


def doc(*paragraphs):
    return RawDocument(source_name="test", paragraphs=tuple(paragraphs))


class TestLoadDocument:
    def test_empty_file(self, make_document):
        d = load_document(make_document(""))
        assert d.paragraph_count == 0
        assert d.paragraphs == ()

    def test_line_mode_drops_blank_lines(self, make_document):
        d = load_document(make_document("a\n\nb\n"), mode="line")
        assert d.paragraphs == ("a", "b")

    def test_blank_line_mode_same_for_single_line_paragraphs(self, make_document):
        d = load_document(make_document("a\n\nb\n"), mode="blank-line")
        assert d.paragraphs == ("a", "b")

    def test_blank_line_mode_joins_runs(self, make_document):
        d = load_document(make_document("a\nb\n\nc\nd\ne\n\n\nf\n"), mode="blank-line")
        assert d.paragraphs == ("a b", "c d e", "f")

    def test_line_mode_keeps_order_and_indices_contiguous(self, make_document):
        d = load_document(make_document("one\n\n\ntwo\nthree\n"))
        assert d.paragraphs == ("one", "two", "three")
        assert d.paragraph_count == 3

    def test_crlf_and_bom(self, tmp_path):
        path = tmp_path / "crlf.txt"
        path.write_bytes(b"\xef\xbb\xbffirst\r\nsecond\r\n")
        d = load_document(path)
        assert d.paragraphs == ("first", "second")

    def test_whitespace_only_lines_are_blank(self, make_document):
        d = load_document(make_document("a\n   \nb\n"), mode="blank-line")
        assert d.paragraphs == ("a", "b")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_document(tmp_path / "nope.txt")

    def test_invalid_utf8_reports_offset(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"abc\xff\xfedef")
        with pytest.raises(EncodingError) as excinfo:
            load_document(path)
        assert excinfo.value.byte_offset == 3

    def test_unknown_mode(self, make_document):
        with pytest.raises(ValueError):
            load_document(make_document("a\n"), mode="page")

    def test_source_name_is_stem(self, tmp_path):
        path = tmp_path / "speech_one.txt"
        path.write_text("hello\n", encoding="utf-8")
        assert load_document(path).source_name == "speech_one"

    def test_line_mode_equals_blank_line_mode_on_exploded_input(self, tmp_path):
        rng = random.Random(7)
        lines = ["alpha beta", "gamma", "delta epsilon zeta", "eta"]
        rng.shuffle(lines)
        plain = tmp_path / "plain.txt"
        plain.write_text("\n".join(lines) + "\n", encoding="utf-8")
        exploded = tmp_path / "exploded.txt"
        exploded.write_text("\n\n".join(lines) + "\n", encoding="utf-8")
        a = load_document(plain, mode="line")
        b = load_document(exploded, mode="blank-line")
        assert a.paragraphs == b.paragraphs


class TestTokenize:
    def test_first_sherlock_paragraph_in_order(self):
        tokens = tokenize(doc(SHERLOCK_HEAD_LINES[0]))
        assert tokens[:4] == [TidyToken(1, "to"), TidyToken(1, "sherlock"),
                              TidyToken(1, "holmes"), TidyToken(1, "she")]
        assert tokens[-1] == TidyToken(1, "him")
        assert [t.word for t in tokens] == [
            "to", "sherlock", "holmes", "she", "is", "always", "the", "woman",
            "i", "have", "seldom", "heard", "him"]

    def test_case_folding_and_punctuation(self):
        tokens = tokenize(doc("Hello, hello! HELLO?"))
        assert tokens == [TidyToken(1, "hello")] * 3

    def test_apostrophes_hyphens_digits(self):
        tokens = tokenize(doc("don’t stop-words 3rd"))
        assert [t.word for t in tokens] == ["don't", "stop", "words", "3rd"]

    def test_apostrophe_requires_letters_both_sides(self):
        assert [t.word for t in tokenize(doc("'twas dogs' rock'n'roll 3'5"))] == \
            ["twas", "dogs", "rock'n'roll", "3", "5"]

    def test_underscore_and_symbols_separate(self):
        assert [t.word for t in tokenize(doc("snake_case a+b c&d"))] == \
            ["snake", "case", "a", "b", "c", "d"]

    def test_line_numbers_follow_paragraphs(self):
        tokens = tokenize(doc("one two", "three"))
        assert tokens == [TidyToken(1, "one"), TidyToken(1, "two"), TidyToken(2, "three")]

    def test_line_monotonicity(self):
        rng = random.Random(3)
        paragraphs = tuple(" ".join(rng.choice(["ab", "cd", "x1", "don't"])
                                    for _ in range(rng.randint(0, 6)))
                           for _ in range(10))
        tokens = tokenize(doc(*paragraphs))
        lines = [t.line for t in tokens]
        assert lines == sorted(lines)

    def test_retokenization_is_idempotent(self):
        rng = random.Random(11)
        samples = ["Don’t touch it's mine!", "x_1 y-2 z''3", "Über café naïve",
                   "a'b'c 'edge' cases'", "42 7th 3'5 o'clock"]
        for _ in range(50):
            text = " ".join(rng.choice(samples) for _ in range(rng.randint(1, 5)))
            first = [t.word for t in tokenize(doc(text))]
            second = [t.word for t in tokenize(doc(" ".join(first)))]
            assert second == first

    def test_unicode_letters_kept(self):
        assert [t.word for t in tokenize(doc("Über café"))] == ["über", "café"]


class TestRemoveStopWords:
    def test_sherlock_head_survivors(self, stop_words, sherlock_head_file):
        document = load_document(sherlock_head_file)
        tidy = remove_stop_words(tokenize(document), stop_words)
        assert [(t.line, t.word) for t in tidy[:6]] == [
            (1, "sherlock"), (1, "holmes"), (1, "woman"),
            (1, "seldom"), (1, "heard"), (2, "mention")]

    def test_empty_custom_list_is_noop(self, stop_words):
        tokens = tokenize(doc("sherlock waited alone"))
        with_none = remove_stop_words(tokens, stop_words)
        with_empty = remove_stop_words(tokens, stop_words, StopWordList.empty())
        assert with_none == with_empty

    def test_single_custom_exclusion(self):
        tokens = [TidyToken(1, "alpha"), TidyToken(2, "beta")]
        out = remove_stop_words(tokens, StopWordList.empty(),
                                StopWordList.from_words(["alpha"]))
        assert out == [TidyToken(2, "beta")]

    def test_soundness_and_completeness(self, stop_words):
        rng = random.Random(5)
        vocab = ["the", "always", "storm", "gift", "have", "letter", "marvel", "him"]
        tokens = [TidyToken(rng.randint(1, 4), rng.choice(vocab)) for _ in range(200)]
        custom = StopWordList.from_words(["letter"])
        survivors = remove_stop_words(tokens, stop_words, custom)
        union = stop_words.words | custom.words
        assert all(t.word not in union for t in survivors)
        dropped = [t for t in tokens if t not in survivors]
        # order preserved and counts add up
        assert len(survivors) + len(dropped) == len(tokens)
        it = iter(tokens)
        for s in survivors:
            for t in it:
                if t == s:
                    break
            else:
                pytest.fail("survivor order changed")
        assert all(t.word in union for t in dropped)


class TestStopWordList:
    def test_load_ignores_comments_and_blank_lines(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("# comment\n\n  The \nand\n#x\nOR\n", encoding="utf-8")
        sw = StopWordList.load(path)
        assert sw.words == frozenset({"the", "and", "or"})

    def test_builtin_has_expected_size_and_membership(self, stop_words):
        assert 600 <= len(stop_words) <= 900
        for word in ("the", "she", "is", "always", "him", "i", "to", "have"):
            assert word in stop_words
        for word in ("sherlock", "holmes", "woman", "seldom", "heard", "mention", "doubt"):
            assert word not in stop_words

    def test_membership_is_exact_match(self):
        sw = StopWordList.from_words(["stop"])
        assert "stop" in sw
        assert "stops" not in sw
