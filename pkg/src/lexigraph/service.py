"""HTTP API over the exploration engine.

Every response body carries ``schema_version``; every error body carries a
machine-readable ``error_kind`` drawn from the library's error taxonomy, so
clients can branch on kinds instead of prose.  The store snapshot is loaded
once and treated as immutable while serving; sessions are mutated under
their own locks.
"""

from __future__ import annotations

import pickle
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from . import analytics
from .errors import LexigraphError, SnapshotError, UnknownSessionError, UnknownWordError
from .explorer import FilterConfig, search_antonyms, search_related, validate_query
from .lexicon import LexiconStore, normalize_token
from .metrics import cosine_similarity
from .session import (
    EXPAND_CLICK,
    QUERY,
    ExplorationSession,
    GraphDelta,
    create_session,
)

SCHEMA_VERSION = "1"

# module error kinds -> HTTP status; anything unlisted is a 500
ERROR_STATUS = {
    "malformed_word": 400,
    "non_adjective": 400,
    "invalid_request": 400,
    "metrics_error": 400,
    "insufficient_data": 400,
    "zero_variance": 400,
    "dimension_mismatch": 400,
    "zero_vector": 400,
    "identical_points": 400,
    "replay_mismatch": 400,
    "unknown_word": 404,
    "unknown_session": 404,
    "unknown_node": 404,
    "out_of_order": 409,
    "slot_already_set": 409,
    "duplicate_slot_word": 409,
    "word_not_available": 409,
    "not_in_graph": 409,
    "session_closed": 409,
    "incomplete_cs": 409,
    "insufficient_words": 409,
}


def save_store(store: LexiconStore, path: str | Path) -> None:
    """Write the ingested store to an on-disk snapshot."""
    try:
        with open(path, "wb") as fh:
            pickle.dump(store, fh, protocol=pickle.HIGHEST_PROTOCOL)
    except OSError as exc:
        raise SnapshotError(f"cannot write snapshot {path}: {exc}") from exc


def load_store(path: str | Path) -> LexiconStore:
    try:
        with open(path, "rb") as fh:
            store = pickle.load(fh)
    except (OSError, pickle.PickleError, EOFError) as exc:
        raise SnapshotError(f"cannot read snapshot {path}: {exc}") from exc
    if not isinstance(store, LexiconStore):
        raise SnapshotError(f"snapshot {path} does not contain a lexicon store")
    return store


class SessionBody(BaseModel):
    brief_id: str = "api"
    allow_reorder: bool = False


class ExpandBody(BaseModel):
    word: str
    via: str = QUERY


class PoolBody(BaseModel):
    word: str
    source: str = "graph_drag"


class SlotBody(BaseModel):
    slot: str
    word: str


def _word_payload(store: LexiconStore, word: str, origin: Optional[str] = None) -> dict:
    entry = store.pos_entry(word)
    cos = None
    if origin is not None:
        v1, v2 = store.vector_of(origin), store.vector_of(word)
        if v1 is not None and v2 is not None:
            cos = cosine_similarity(v1, v2)
    return {
        "word": word,
        "pos": entry.pos if entry else None,
        "gloss": entry.gloss if entry else None,
        "freq": store.freq_of(word),
        "cos_sim": cos,
    }


def _delta_json(store: LexiconStore, delta: Optional[GraphDelta]) -> Optional[dict]:
    if delta is None:
        return None
    return {
        "origin": delta.origin,
        "cluster": delta.cluster,
        "event_seq": delta.event_seq,
        "added_nodes": [
            {"cluster": cluster, **_word_payload(store, word, delta.origin)}
            for word, cluster in delta.added_nodes
        ],
        "added_links": [
            {"source": a, "target": b, "relation": rel} for a, b, rel in delta.added_links
        ],
    }


def _report_json(report: analytics.DcpReport) -> dict:
    return {
        "w1": report.w1,
        "w2": report.w2,
        "freq_w1": report.freq_w1,
        "freq_w2": report.freq_w2,
        "mean_freq": report.mean_freq,
        "cos_sim": report.cos_sim,
        "flags": sorted(report.flags),
    }


def create_app(store: LexiconStore, default_config: FilterConfig = FilterConfig()) -> FastAPI:
    app = FastAPI(title="lexigraph", version=SCHEMA_VERSION)
    app.state.store = store
    app.state.default_config = default_config
    app.state.sessions = {}

    def body(status: int, payload: dict) -> JSONResponse:
        return JSONResponse(status_code=status, content={"schema_version": SCHEMA_VERSION, **payload})

    @app.exception_handler(LexigraphError)
    async def _domain_error(_request: Request, exc: LexigraphError):
        status = ERROR_STATUS.get(exc.kind, 500)
        return body(status, {"error_kind": exc.kind, "detail": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError):
        return body(400, {"error_kind": "invalid_request", "detail": str(exc.errors())})

    @app.exception_handler(ValueError)
    async def _value_error(_request: Request, exc: ValueError):
        return body(400, {"error_kind": "invalid_request", "detail": str(exc)})

    def config_from(
        min_cos: Optional[float],
        max_cos: Optional[float],
        min_freq: Optional[float],
        max_freq: Optional[float],
        max_results: Optional[int],
    ) -> FilterConfig:
        base = app.state.default_config
        return FilterConfig(
            cos_min=min_cos if min_cos is not None else base.cos_min,
            cos_max=max_cos if max_cos is not None else base.cos_max,
            freq_min=min_freq if min_freq is not None else base.freq_min,
            freq_max=max_freq if max_freq is not None else base.freq_max,
            max_results=max_results if max_results is not None else base.max_results,
        )

    def session_of(session_id: str) -> ExplorationSession:
        session = app.state.sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(f"no session {session_id!r}")
        return session

    @app.get("/related")
    def related(
        word: str,
        min_cos: Optional[float] = None,
        max_cos: Optional[float] = None,
        min_freq: Optional[float] = None,
        max_freq: Optional[float] = None,
        max_results: Optional[int] = None,
    ):
        config = config_from(min_cos, max_cos, min_freq, max_freq, max_results)
        token = validate_query(app.state.store, word)
        results = search_related(app.state.store, token, config)
        return body(200, {
            "query": token,
            "results": [
                {"relation": rel, "weight": weight, **_word_payload(app.state.store, w, token)}
                for w, rel, weight in results
            ],
        })

    @app.get("/antonyms")
    def antonyms(
        word: str,
        min_cos: Optional[float] = None,
        max_cos: Optional[float] = None,
        min_freq: Optional[float] = None,
        max_freq: Optional[float] = None,
        max_results: Optional[int] = None,
    ):
        config = config_from(min_cos, max_cos, min_freq, max_freq, max_results)
        token = validate_query(app.state.store, word)
        results = search_antonyms(app.state.store, token, config)
        return body(200, {
            "query": token,
            "results": [_word_payload(app.state.store, w, token) for w in results],
        })

    @app.get("/score")
    def score(
        w1: str,
        w2: str,
        min_cos: Optional[float] = None,
        max_cos: Optional[float] = None,
        min_freq: Optional[float] = None,
        max_freq: Optional[float] = None,
        max_results: Optional[int] = None,
    ):
        config = config_from(min_cos, max_cos, min_freq, max_freq, max_results)
        report = analytics.score_dcp(app.state.store, w1, w2, config)
        return body(200, {"report": _report_json(report)})

    @app.get("/word/{word}")
    def word_info(word: str):
        store = app.state.store
        token = normalize_token(word)
        entry = store.pos_entry(token)
        if entry is None and store.freq_of(token) is None and store.vector_of(token) is None:
            raise UnknownWordError(f"{token!r} is not in the lexicon")
        return body(200, _word_payload(store, token))

    @app.post("/session")
    def new_session(payload: SessionBody):
        session = create_session(payload.brief_id, allow_reorder=payload.allow_reorder)
        app.state.sessions[session.id] = session
        return body(201, {"session": {
            "id": session.id,
            "brief_id": session.brief_id,
            "created_at": session.created_at,
            "allow_reorder": session.allow_reorder,
        }})

    @app.get("/session/{session_id}")
    def session_info(session_id: str):
        session = session_of(session_id)
        return body(200, {"session": {
            "id": session.id,
            "brief_id": session.brief_id,
            "created_at": session.created_at,
            "closed_at": session.closed_at,
            "graph": {
                "nodes": [{"word": w, "cluster": c} for w, c in sorted(session.graph.nodes.items())],
                "links": [{"source": a, "target": b, "relation": rel}
                          for a, b, rel in sorted(session.graph.links)],
                "next_cluster": session.graph.next_cluster,
            },
            "pool": list(session.pool),
            "cs": session.cs.as_dict(),
            "event_count": len(session.events),
        }})

    @app.post("/session/{session_id}/expand")
    def expand(
        session_id: str,
        payload: ExpandBody,
        min_cos: Optional[float] = None,
        max_cos: Optional[float] = None,
        min_freq: Optional[float] = None,
        max_freq: Optional[float] = None,
        max_results: Optional[int] = None,
    ):
        if payload.via not in (QUERY, EXPAND_CLICK):
            raise ValueError(f"via must be {QUERY} or {EXPAND_CLICK}")
        config = config_from(min_cos, max_cos, min_freq, max_freq, max_results)
        session = session_of(session_id)
        delta = session.expand(app.state.store, payload.word, payload.via, config)
        return body(200, {
            "delta": _delta_json(app.state.store, delta),
            "pool": list(session.pool),
        })

    @app.post("/session/{session_id}/pool")
    def pool_add(session_id: str, payload: PoolBody):
        session = session_of(session_id)
        pool = session.add_to_pool(payload.word, payload.source)
        return body(200, {"pool": pool})

    @app.post("/session/{session_id}/slot")
    def set_slot(
        session_id: str,
        payload: SlotBody,
        min_cos: Optional[float] = None,
        max_cos: Optional[float] = None,
        min_freq: Optional[float] = None,
        max_freq: Optional[float] = None,
        max_results: Optional[int] = None,
    ):
        config = config_from(min_cos, max_cos, min_freq, max_freq, max_results)
        session = session_of(session_id)
        result = session.set_slot(app.state.store, payload.slot, payload.word, config)
        return body(200, {
            "cs": result.cs,
            "triggered": list(result.triggered),
            "delta": _delta_json(app.state.store, result.delta),
            "pool": list(session.pool),
        })

    @app.post("/session/{session_id}/clear")
    def clear(session_id: str):
        session = session_of(session_id)
        session.clear_playground()
        return body(200, {"cleared": True, "next_cluster": session.graph.next_cluster})

    @app.post("/session/{session_id}/close")
    def close(session_id: str):
        session = session_of(session_id)
        session.close()
        return body(200, {"closed_at": session.closed_at})

    @app.get("/session/{session_id}/report")
    def session_report(
        session_id: str,
        min_cos: Optional[float] = None,
        max_cos: Optional[float] = None,
        min_freq: Optional[float] = None,
        max_freq: Optional[float] = None,
        max_results: Optional[int] = None,
    ):
        config = config_from(min_cos, max_cos, min_freq, max_freq, max_results)
        session = session_of(session_id)
        report = session.report(app.state.store, config)
        return body(200, {
            "report": _report_json(report.dcp),
            "word_count": report.word_count,
            "duration_ms": report.duration_ms,
        })

    @app.get("/session/{session_id}/map")
    def session_map(session_id: str, k: int = 2):
        session = session_of(session_id)
        chart = session.exploration_map(app.state.store, k)
        return body(200, {
            "points": [
                {"word": p.word, "coords": list(p.coords), "kinds": p.kinds, "seqs": p.seqs}
                for p in chart.points
            ],
            "unplottable": list(chart.unplottable),
        })

    @app.get("/session/{session_id}/log")
    def session_log(session_id: str):
        session = session_of(session_id)
        return PlainTextResponse(session.to_log(), media_type="application/x-ndjson")

    return app


def run_service(store: LexiconStore, host: str = "127.0.0.1", port: int = 8000,
                config: FilterConfig = FilterConfig()) -> None:
    import uvicorn

    uvicorn.run(create_app(store, config), host=host, port=port, log_level="warning")
