"""Shared fixtures: a phrase-metrics store with exact published values and an
expansion-tree store with predictable candidate counts."""

from __future__ import annotations

import pytest

from lexigraph.synthetic import make_phrase_lexicon, make_tree_lexicon

# Golden phrase table: (phrase id, w1, w2, word count, freq_w1, freq_w2,
# mean_freq, cos_sim), None meaning the value is absent in the source data.
PHRASE_TABLE = [
    ("1-A", "cognizant", "inclusive", 23, 1.02, 19.72, 10.37, 0.105),
    ("2-A", "sustainable", "renewable", 5, 97.59, 35.89, 66.74, 0.572),
    ("3-A", "honest", "continuous", 22, 22.25, 30.06, 26.15, 0.123),
    ("4-A", "futuristic", "modern", 10, 2.22, 108.15, 55.19, 0.392),
    ("5-A", "august", "renewable", 10, 2.08, 35.89, 18.99, 0.021),
    ("7-B", "economical", "efficient", 6, 6.32, 56.97, 31.64, 0.551),
    ("8-B", "affordable", "neutral", 13, 42.35, 12.40, 27.38, 0.068),
    ("9-B", "modular", "disposable", 10, 7.16, 4.27, 5.71, 0.162),
    ("10-B", "empathy", "transcendent", 19, None, 1.45, 1.45, 0.240),
    ("11-B", "utilitarian", "comfortable", 11, 1.13, 40.05, 20.59, 0.235),
    ("7-A", "efficient", "functional", 4, 56.97, 33.92, 45.45, 0.382),
    ("8-A", "good-natured", "safeness", 8, None, None, None, None),
    ("9-A", "adventurous", "lively", 5, 3.82, 10.20, 7.01, 0.284),
    ("10-A", "sustained", "delightful", 7, 8.58, 6.24, 7.41, 0.047),
    ("11-A", "empathetic", "minimal", 9, 0.98, 18.12, 9.55, 0.055),
    ("1-B", "protean", "companionable", 20, 0.17, 0.09, 0.13, 0.063),
    ("2-B", "affordable", "seamless", 6, 42.35, 6.16, 24.26, 0.185),
    ("3-B", "insensible", "trustful", 16, 0.20, 0.16, 0.18, 0.200),
    ("4-B", "compact", "friendly", 5, 12.77, 43.70, 28.24, 0.121),
    ("5-B", "nimble", "aid", 8, 1.36, None, 1.36, 0.007),
]

# published values round to 2 decimals, so half a cent of slack (plus float fuzz)
TABLE_TOL = 0.005 + 1e-9

# "good-natured safeness" returned nothing at all: no vectors, no frequencies
NO_VECTOR_WORDS = ("good-natured", "safeness")


def phrase_sources():
    frequencies: dict[str, float | None] = {}
    cosines: dict[tuple[str, str], float] = {}
    for _pid, w1, w2, _wc, f1, f2, _mean, cos in PHRASE_TABLE:
        for word, freq in ((w1, f1), (w2, f2)):
            if word in frequencies and frequencies[word] != freq:
                raise AssertionError(f"inconsistent fixture frequency for {word}")
            frequencies[word] = freq
        if cos is not None:
            cosines[(w1, w2)] = cos
    return make_phrase_lexicon(frequencies, cosines, no_vector=NO_VECTOR_WORDS)


# Expansion tree mirroring a narrated session: each parent's children count is
# the number of new nodes its expansion adds (6, 5, 17, 14, 1), plus a second
# root used for antonym-trigger walkthroughs.
EXPANSION_TREE = {
    "sustainable": ["renewable", "endurable", "bearable", "livable", "workable", "viable"],
    "renewable": ["continuous", "recyclable", "replaceable", "reusable", "refillable"],
    "continuous": ["imperfect", "constant", "unbroken", "uninterrupted", "ceaseless",
                   "unending", "endless", "perpetual", "persistent", "steady",
                   "continual", "nonstop", "incessant", "ongoing", "connected",
                   "prolonged", "lasting"],
    "imperfect": ["flawed", "faulty", "defective", "deficient", "inadequate",
                  "impaired", "blemished", "damaged", "marred", "incomplete",
                  "unfinished", "unsound", "cracked", "broken"],
    "flawed": ["fallible"],
    "cognizant": ["inclusive", "mindful", "observant", "attentive"],
}

ANTONYM_EDGES = [
    ("renewable", "depletable"),
    ("continuous", "intermittent"),
    ("mindful", "oblivious"),
]

POS_ONLY = {
    "depletable": "adjective",
    "intermittent": "adjective",
    "oblivious": "adjective",
    "utopia": "noun",
    "empathy": "noun",
}


def tree_sources():
    return make_tree_lexicon(EXPANSION_TREE, antonym_edges=ANTONYM_EDGES, pos_only=POS_ONLY)


@pytest.fixture(scope="session")
def phrase_store():
    return phrase_sources().build_store()


@pytest.fixture(scope="session")
def tree_store():
    return tree_sources().build_store()
