"""Search and filter over the lexicon: related-word retrieval under cosine
and frequency bounds, and the two-phase antonym search.

Candidate filtering is explainable: every rejection carries the full set of
reasons so the UI and tests can see exactly which bound failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import AbstractSet, Optional

from . import metrics
from .errors import MalformedWordError, NonAdjectiveError, UnknownWordError
from .lexicon import ANTONYM_RELATION, LexiconStore, is_valid_token, normalize_token


@dataclass(frozen=True)
class FilterConfig:
    """Acceptance window for candidate words.

    A candidate passes when cos_min <= |cosSim| <= cos_max and
    freq_min <= Freq <= freq_max (bounds inclusive).
    """

    cos_min: float = 0.05
    cos_max: float = 0.5
    freq_min: float = 1.0
    freq_max: float = 50.0
    max_results: int = 50

    def __post_init__(self):
        if not 0 <= self.cos_min < self.cos_max <= 1:
            raise ValueError(f"need 0 <= cos_min < cos_max <= 1, got [{self.cos_min}, {self.cos_max}]")
        if not 0 <= self.freq_min < self.freq_max:
            raise ValueError(f"need 0 <= freq_min < freq_max, got [{self.freq_min}, {self.freq_max}]")
        if self.max_results < 1:
            raise ValueError("max_results must be positive")


# rejection reasons; a decision is accepted iff its reason set is empty
RELATION_IS_ANTONYM = "relation_is_antonym"
COS_BELOW_MIN = "cos_below_min"
COS_ABOVE_MAX = "cos_above_max"
FREQ_BELOW_MIN = "freq_below_min"
FREQ_ABOVE_MAX = "freq_above_max"
MISSING_VECTOR = "missing_vector"
MISSING_FREQ = "missing_freq"
NOT_ADJECTIVE = "not_adjective"
DUPLICATE = "duplicate"
SELF = "self"


@dataclass(frozen=True)
class CandidateDecision:
    word: str
    reasons: frozenset[str]
    cos_sim: Optional[float] = None
    freq: Optional[float] = None

    @property
    def accepted(self) -> bool:
        return not self.reasons


def validate_query(store: LexiconStore, word: str) -> str:
    """Normalize a raw query and enforce the adjective gate."""
    if not isinstance(word, str):
        raise MalformedWordError(f"query must be text, got {type(word).__name__}")
    token = normalize_token(word)
    if not is_valid_token(token):
        raise MalformedWordError(f"not a usable word: {word!r}")
    entry = store.pos_entry(token)
    if entry is None:
        raise UnknownWordError(f"unknown word: {token!r}")
    if entry.pos != "adjective":
        raise NonAdjectiveError(token, entry.pos)
    return token


def filter_candidate(
    store: LexiconStore,
    query: str,
    candidate: str,
    relation: str,
    config: FilterConfig = FilterConfig(),
    exclude: AbstractSet[str] = frozenset(),
) -> CandidateDecision:
    """Apply every acceptance rule to one candidate and report all failures."""
    reasons = set()
    if relation == ANTONYM_RELATION:
        reasons.add(RELATION_IS_ANTONYM)

    cos_sim = None
    qv = store.vector_of(query)
    cv = store.vector_of(candidate)
    if qv is None or cv is None:
        reasons.add(MISSING_VECTOR)
    else:
        cos_sim = metrics.cosine_similarity(qv, cv)
        if abs(cos_sim) < config.cos_min:
            reasons.add(COS_BELOW_MIN)
        elif abs(cos_sim) > config.cos_max:
            reasons.add(COS_ABOVE_MAX)

    freq = store.freq_of(candidate)
    if freq is None:
        reasons.add(MISSING_FREQ)
    elif freq < config.freq_min:
        reasons.add(FREQ_BELOW_MIN)
    elif freq > config.freq_max:
        reasons.add(FREQ_ABOVE_MAX)

    if not store.is_adjective(candidate):
        reasons.add(NOT_ADJECTIVE)
    if candidate == query:
        reasons.add(SELF)
    if candidate in exclude:
        reasons.add(DUPLICATE)

    return CandidateDecision(word=candidate, reasons=frozenset(reasons), cos_sim=cos_sim, freq=freq)


def search_related(
    store: LexiconStore,
    word: str,
    config: FilterConfig = FilterConfig(),
) -> list[tuple[str, str, float]]:
    """Non-antonym neighbors of ``word`` that pass the filter.

    Duplicates collapse to the first edge in neighbor order; results are
    ranked by |cosSim| descending, ties alphabetical, and truncated to
    ``config.max_results``.
    """
    query = validate_query(store, word)
    seen = set()
    accepted = []
    pairs = sorted(
        store.neighbors(query, lambda r: r != ANTONYM_RELATION),
        key=lambda t: (t[0], t[1], t[2]),
    )
    for other, relation, weight in pairs:
        if other in seen:
            continue
        seen.add(other)
        decision = filter_candidate(store, query, other, relation, config)
        if decision.accepted:
            accepted.append(((other, relation, weight), abs(decision.cos_sim)))
    accepted.sort(key=lambda item: (-item[1], item[0][0]))
    return [entry for entry, _ in accepted[: config.max_results]]


def search_antonyms(
    store: LexiconStore,
    word: str,
    config: FilterConfig = FilterConfig(),
) -> list[str]:
    """Antonym endpoints reachable through the related words of ``word``.

    Endpoints are not re-filtered by the numeric bounds; they must only be
    known adjectives.  First-seen order is preserved and ``word`` itself is
    excluded.
    """
    query = validate_query(store, word)
    results: list[str] = []
    seen: set[str] = set()
    for related_word, _relation, _weight in search_related(store, query, config):
        for edge in store.edges_of(related_word):
            if edge.relation != ANTONYM_RELATION:
                continue
            for endpoint in (edge.start, edge.end):
                if endpoint == query or endpoint in seen:
                    continue
                if not store.is_adjective(endpoint):
                    continue
                seen.add(endpoint)
                results.append(endpoint)
    return results[: config.max_results]
