import random

import pytest

from lexsent import StopWordList, load_bing, load_nrc
from lexsent.lexicon import demo_bing_path, demo_nrc_path

# First two paragraphs of the public-domain "A Scandal in Bohemia" chapter,
# broken exactly as in the classic 229-line TXT formatting.
SHERLOCK_HEAD_LINES = [
    "To Sherlock Holmes she is always the woman. I have seldom heard him",
    "     mention her under any other name. In his eyes she eclipses and",
]

# words the demo lexicons know, plus filler the stop list removes
POSITIVE_WORDS = ["gift", "victory", "friend", "hope", "cheer", "bright",
                  "delight", "honest", "miracle", "reward", "loyal", "laughter"]
NEGATIVE_WORDS = ["loss", "betray", "gloom", "poison", "ruin", "dread",
                  "filth", "wound", "scorn", "grim", "storm", "terror"]
NEUTRAL_WORDS = ["table", "chair", "window", "river", "stone", "paper",
                 "walked", "morning", "letter", "voice"]
FILLER = ["the", "and", "a", "of", "to", "in", "was", "it", "he", "she"]


@pytest.fixture(scope="session")
def demo_nrc():
    return load_nrc(demo_nrc_path())


@pytest.fixture(scope="session")
def demo_bing():
    return load_bing(demo_bing_path())


@pytest.fixture(scope="session")
def stop_words():
    return StopWordList.builtin()


@pytest.fixture
def sherlock_head_file(tmp_path):
    path = tmp_path / "scandal_head.txt"
    path.write_text("\n".join(SHERLOCK_HEAD_LINES) + "\n", encoding="utf-8")
    return path


def random_document_text(rng: random.Random, n_lines: int,
                         positive_bias: float = 0.5) -> str:
    """Synthetic corpus whose lines mix demo-lexicon, neutral and stop words."""
    lines = []
    for _ in range(n_lines):
        words = []
        for _ in range(rng.randint(3, 12)):
            roll = rng.random()
            if roll < 0.35:
                pool = POSITIVE_WORDS if rng.random() < positive_bias else NEGATIVE_WORDS
            elif roll < 0.6:
                pool = NEUTRAL_WORDS
            else:
                pool = FILLER
            words.append(rng.choice(pool))
        lines.append(" ".join(words))
    return "\n".join(lines) + "\n"


@pytest.fixture
def make_document(tmp_path):
    def _make(text: str, name: str = "doc.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _make


def corpus_texts() -> list[str]:
    """The corpora every conservation-law test runs over."""
    rng = random.Random(20240817)
    texts = [
        "",  # empty document
        "the and of to in\nwas it he she the\n",  # stop words only
        "gift gift storm\nvictory loss loss\n\nhope dread gloom cheer\n",
        random_document_text(rng, 12, positive_bias=0.8),
        random_document_text(rng, 40, positive_bias=0.3),
        random_document_text(rng, 120, positive_bias=0.5),
    ]
    return texts
