"""Error taxonomy shared by every layer.

Each error carries a machine-readable ``kind`` so the HTTP service and the
CLI can surface failures without parsing exception messages.
"""

from __future__ import annotations


class LexigraphError(Exception):
    """Base class; ``kind`` is the stable machine-readable identifier."""

    kind = "internal"

    def __init__(self, message: str = ""):
        super().__init__(message or self.kind)


# --- lexicon loading ---------------------------------------------------------

class SourceError(LexigraphError):
    kind = "unreadable_source"


class NoEmbeddingsError(LexigraphError):
    kind = "no_embeddings"


class InconsistentDimensionError(LexigraphError):
    kind = "inconsistent_dimension"


# --- query validation --------------------------------------------------------

class MalformedWordError(LexigraphError):
    kind = "malformed_word"


class UnknownWordError(LexigraphError):
    kind = "unknown_word"


class NonAdjectiveError(LexigraphError):
    """Query word exists but is not an adjective; ``pos`` holds the actual tag."""

    kind = "non_adjective"

    def __init__(self, word: str, pos: str):
        super().__init__(f"{word!r} is not an adjective (pos={pos})")
        self.word = word
        self.pos = pos


# --- numeric kernels ---------------------------------------------------------

class MetricsError(LexigraphError, ValueError):
    kind = "metrics_error"


class DimensionMismatchError(MetricsError):
    kind = "dimension_mismatch"


class ZeroVectorError(MetricsError):
    kind = "zero_vector"


class ZeroVarianceError(MetricsError):
    kind = "zero_variance"


class IdenticalPointsError(MetricsError):
    kind = "identical_points"


class InsufficientDataError(MetricsError):
    kind = "insufficient_data"


# --- sessions ----------------------------------------------------------------

class UnknownSessionError(LexigraphError):
    kind = "unknown_session"


class SessionClosedError(LexigraphError):
    kind = "session_closed"


class UnknownNodeError(LexigraphError):
    kind = "unknown_node"


class NotInGraphError(LexigraphError):
    kind = "not_in_graph"


class WordNotAvailableError(LexigraphError):
    """Slot word must come from the pool or the playground graph."""

    kind = "word_not_available"


class OutOfOrderError(LexigraphError):
    kind = "out_of_order"


class SlotAlreadySetError(LexigraphError):
    kind = "slot_already_set"


class DuplicateSlotWordError(LexigraphError):
    kind = "duplicate_slot_word"


class IncompleteCsError(LexigraphError):
    kind = "incomplete_cs"


class InsufficientWordsError(LexigraphError):
    """Exploration map needs at least two embeddable words."""

    kind = "insufficient_words"


class ReplayMismatchError(LexigraphError):
    kind = "replay_mismatch"


# --- snapshots ---------------------------------------------------------------

class SnapshotError(LexigraphError):
    kind = "bad_snapshot"
