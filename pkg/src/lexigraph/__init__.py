"""lexigraph: a lexical knowledge-graph explorer for two-adjective design
concept phrases, with similarity/frequency candidate filtering, replayable
exploration sessions, phrase scoring, and an HTTP/CLI surface."""

from .analytics import (
    CorrelationStudy,
    DcpReport,
    batch_report,
    correlate,
    parse_report_tsv,
    render_report_tsv,
    score_dcp,
)
from .errors import LexigraphError
from .explorer import CandidateDecision, FilterConfig, filter_candidate, search_antonyms, search_related, validate_query
from .lexicon import LexEdge, LexiconStore, PosEntry, load_lexicon, normalize_token, store_from_rows
from .metrics import (
    CorrelationResult,
    PcaModel,
    cohens_kappa,
    cosine_similarity,
    pca_fit,
    pca_project,
    pearson,
)
from .service import create_app, load_store, save_store
from .session import (
    CharacterSpace,
    ExplorationEvent,
    ExplorationSession,
    GraphDelta,
    PlaygroundGraph,
    create_session,
    parse_log,
    replay_log,
    scripted_clock,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateDecision",
    "CharacterSpace",
    "CorrelationResult",
    "CorrelationStudy",
    "DcpReport",
    "ExplorationEvent",
    "ExplorationSession",
    "FilterConfig",
    "GraphDelta",
    "LexEdge",
    "LexiconStore",
    "LexigraphError",
    "PcaModel",
    "PlaygroundGraph",
    "PosEntry",
    "batch_report",
    "cohens_kappa",
    "correlate",
    "cosine_similarity",
    "create_app",
    "create_session",
    "filter_candidate",
    "load_lexicon",
    "load_store",
    "normalize_token",
    "parse_log",
    "parse_report_tsv",
    "pca_fit",
    "pca_project",
    "pearson",
    "render_report_tsv",
    "replay_log",
    "save_store",
    "score_dcp",
    "search_antonyms",
    "search_related",
    "store_from_rows",
    "validate_query",
    "__version__",
]
