"""Stateful exploration sessions: playground graph with per-expansion clusters,
word pool, ordered character space, and a replayable event log.

Every mutation appends exactly the events it causes, in a fixed order, so a
session can be reconstructed from its log by re-running the same operations
(:func:`replay_log`).  Timestamps come from an injectable clock; replays feed
the logged timestamps back in, making reconstruction deterministic.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import analytics, metrics
from .errors import (
    DuplicateSlotWordError,
    IncompleteCsError,
    InsufficientWordsError,
    MalformedWordError,
    NotInGraphError,
    OutOfOrderError,
    ReplayMismatchError,
    SessionClosedError,
    SlotAlreadySetError,
    UnknownNodeError,
    WordNotAvailableError,
)
from .explorer import FilterConfig, search_antonyms, search_related, validate_query
from .lexicon import ANTONYM_RELATION, LexiconStore, is_valid_token, normalize_token

QUERY = "QUERY"
EXPAND_CLICK = "EXPAND_CLICK"
POOL_ADD = "POOL_ADD"
SLOT_SET = "SLOT_SET"
CLEAR = "CLEAR"
EVENT_KINDS = (QUERY, EXPAND_CLICK, POOL_ADD, SLOT_SET, CLEAR)

SLOTS = ("w1", "w2", "w3", "w4")

POOL_SOURCES = ("graph_drag", "query_auto", "slot_drop")

Clock = Callable[[], int]


def _default_clock() -> int:
    return time.time_ns() // 1_000_000


@dataclass(frozen=True)
class ExplorationEvent:
    seq: int
    at: int
    kind: str
    word: Optional[str] = None
    slot: Optional[str] = None
    cluster: Optional[int] = None

    def to_record(self) -> dict:
        rec = {"seq": self.seq, "at": self.at, "kind": self.kind}
        if self.word is not None:
            rec["word"] = self.word
        if self.slot is not None:
            rec["slot"] = self.slot
        if self.cluster is not None:
            rec["cluster"] = self.cluster
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "ExplorationEvent":
        if rec.get("kind") not in EVENT_KINDS:
            raise ReplayMismatchError(f"unknown event kind: {rec.get('kind')!r}")
        return cls(
            seq=int(rec["seq"]),
            at=int(rec["at"]),
            kind=rec["kind"],
            word=rec.get("word"),
            slot=rec.get("slot"),
            cluster=rec.get("cluster"),
        )


@dataclass
class PlaygroundGraph:
    nodes: dict[str, int] = field(default_factory=dict)          # word -> cluster id
    links: set[tuple[str, str, str]] = field(default_factory=set)  # (from, to, relation)
    next_cluster: int = 1

    def allocate_cluster(self) -> int:
        cluster = self.next_cluster
        self.next_cluster += 1
        return cluster


@dataclass
class CharacterSpace:
    """Ordered slots w1..w4; the design concept phrase is (w1, w2)."""

    w1: Optional[str] = None
    w2: Optional[str] = None
    w3: Optional[str] = None
    w4: Optional[str] = None

    def get(self, slot: str) -> Optional[str]:
        return getattr(self, slot)

    def next_slot(self) -> Optional[str]:
        for slot in SLOTS:
            if self.get(slot) is None:
                return slot
        return None

    def is_complete(self) -> bool:
        return self.next_slot() is None

    def words(self) -> list[str]:
        return [w for w in (self.w1, self.w2, self.w3, self.w4) if w is not None]

    def as_dict(self) -> dict[str, Optional[str]]:
        return {slot: self.get(slot) for slot in SLOTS}


@dataclass(frozen=True)
class GraphDelta:
    """Nodes and links added to the playground by one expansion."""

    origin: str
    cluster: int
    added_nodes: tuple[tuple[str, int], ...]
    added_links: tuple[tuple[str, str, str], ...]
    event_seq: int

    def candidate_words(self) -> list[str]:
        return [w for w, _ in self.added_nodes if w != self.origin]


@dataclass(frozen=True)
class SlotResult:
    cs: dict[str, Optional[str]]
    triggered: tuple[str, ...]
    delta: Optional[GraphDelta]


@dataclass(frozen=True)
class SessionReport:
    dcp: "analytics.DcpReport"
    word_count: int
    duration_ms: int


@dataclass(frozen=True)
class MapPoint:
    word: str
    coords: tuple[float, ...]
    events: tuple[tuple[int, str], ...]  # (seq, kind) pairs, ascending seq

    @property
    def kinds(self) -> list[str]:
        return sorted({kind for _, kind in self.events})

    @property
    def seqs(self) -> list[int]:
        return [seq for seq, _ in self.events]


@dataclass(frozen=True)
class ExplorationMap:
    points: tuple[MapPoint, ...]
    unplottable: tuple[str, ...]


# trigger mapping: filling a slot searches candidates for the next one
_NEXT_SLOT_TRIGGER = {"w1": "related:w1", "w2": "antonyms:w1", "w3": "antonyms:w2", "w4": None}


class ExplorationSession:
    """Single-writer session; one lock serializes all mutations."""

    def __init__(
        self,
        brief_id: str,
        clock: Optional[Clock] = None,
        allow_reorder: bool = False,
        session_id: Optional[str] = None,
    ):
        self.id = session_id or uuid.uuid4().hex
        self.brief_id = brief_id
        self.graph = PlaygroundGraph()
        self.pool: list[str] = []
        self.cs = CharacterSpace()
        self.events: list[ExplorationEvent] = []
        self.allow_reorder = allow_reorder
        self._clock = clock or _default_clock
        self._lock = threading.RLock()
        self.created_at = self._clock()
        self.closed_at: Optional[int] = None

    # --- internals -------------------------------------------------------

    def _ensure_open(self):
        if self.closed_at is not None:
            raise SessionClosedError(f"session {self.id} is closed")

    def _append_event(self, kind: str, word=None, slot=None, cluster=None) -> ExplorationEvent:
        event = ExplorationEvent(
            seq=len(self.events) + 1, at=self._clock(), kind=kind,
            word=word, slot=slot, cluster=cluster,
        )
        self.events.append(event)
        return event

    def _merge_related(self, origin, results, cluster, event_seq) -> GraphDelta:
        added_nodes, added_links = [], []
        if origin not in self.graph.nodes:
            self.graph.nodes[origin] = cluster
            added_nodes.append((origin, cluster))
        for word, relation, _weight in results:
            if word not in self.graph.nodes:
                self.graph.nodes[word] = cluster
                added_nodes.append((word, cluster))
            link = (origin, word, relation)
            if link not in self.graph.links:
                self.graph.links.add(link)
                added_links.append(link)
        return GraphDelta(origin, cluster, tuple(added_nodes), tuple(added_links), event_seq)

    def _merge_antonyms(self, store, root, tokens, cluster, event_seq) -> GraphDelta:
        added_nodes, added_links = [], []
        for token in tokens:
            if token not in self.graph.nodes:
                self.graph.nodes[token] = cluster
                added_nodes.append((token, cluster))
        # links mirror the actual antonym edges whose endpoints are both on screen
        for token in tokens:
            for edge in store.edges_of(token):
                if edge.relation != ANTONYM_RELATION:
                    continue
                if edge.start in self.graph.nodes and edge.end in self.graph.nodes:
                    link = (edge.start, edge.end, edge.relation)
                    if link not in self.graph.links:
                        self.graph.links.add(link)
                        added_links.append(link)
        return GraphDelta(root, cluster, tuple(added_nodes), tuple(added_links), event_seq)

    # --- operations ------------------------------------------------------

    def expand(
        self,
        store: LexiconStore,
        word: str,
        via: str = QUERY,
        config: FilterConfig = FilterConfig(),
    ) -> GraphDelta:
        """Search related words and grow the playground under a fresh cluster.

        QUERY validates the word through the adjective gate; EXPAND_CLICK
        requires an existing node.  Either way the word lands in the pool.
        """
        if via not in (QUERY, EXPAND_CLICK):
            raise ValueError(f"via must be QUERY or EXPAND_CLICK, got {via!r}")
        with self._lock:
            self._ensure_open()
            if via == QUERY:
                token = validate_query(store, word)
            else:
                token = normalize_token(word)
                if token not in self.graph.nodes:
                    raise UnknownNodeError(f"{token!r} is not on the playground")
            results = search_related(store, token, config)
            cluster = self.graph.allocate_cluster()
            event = self._append_event(via, word=token, cluster=cluster)
            delta = self._merge_related(token, results, cluster, event.seq)
            self.add_to_pool(token, "query_auto")
            return delta

    def add_to_pool(self, word: str, source: str = "graph_drag") -> list[str]:
        """Append a word to the pool; duplicates are no-ops but still logged."""
        if source not in POOL_SOURCES:
            raise ValueError(f"source must be one of {POOL_SOURCES}, got {source!r}")
        with self._lock:
            self._ensure_open()
            token = normalize_token(word)
            if not is_valid_token(token):
                raise MalformedWordError(f"not a usable word: {word!r}")
            if source == "graph_drag" and token not in self.graph.nodes:
                raise NotInGraphError(f"{token!r} is not on the playground")
            self._append_event(POOL_ADD, word=token)
            if token not in self.pool:
                self.pool.append(token)
            return list(self.pool)

    def set_slot(
        self,
        store: LexiconStore,
        slot: str,
        word: str,
        config: FilterConfig = FilterConfig(),
    ) -> SlotResult:
        """Fill the next character-space slot and trigger the follow-up search.

        First fills must respect the w1 -> w4 order.  Filling w1 searches
        related words (candidates for w2); filling w2 and w3 search antonyms
        of w1 and w2 respectively (candidates for w3 and w4).
        """
        if slot not in SLOTS:
            raise ValueError(f"slot must be one of {SLOTS}, got {slot!r}")
        with self._lock:
            self._ensure_open()
            token = normalize_token(word)
            if not is_valid_token(token):
                raise MalformedWordError(f"not a usable word: {word!r}")
            reassign = self.cs.get(slot) is not None
            if reassign and not self.allow_reorder:
                raise SlotAlreadySetError(f"{slot} is already set and reordering is disabled")
            if not reassign:
                expected = self.cs.next_slot()
                if slot != expected:
                    raise OutOfOrderError(f"next fillable slot is {expected}, not {slot}")
            if token not in self.pool and token not in self.graph.nodes:
                raise WordNotAvailableError(f"{token!r} is in neither the pool nor the playground")
            others = {s: self.cs.get(s) for s in SLOTS if s != slot}
            if token in others.values():
                raise DuplicateSlotWordError(f"{token!r} already occupies another slot")

            # run the trigger search before mutating anything so a failed
            # lookup (unknown or non-adjective root) leaves the session intact
            trigger = None if reassign else _NEXT_SLOT_TRIGGER[slot]
            triggered: list[str] = []
            results: list[tuple[str, str, float]] = []
            mode = root = None
            if trigger is not None:
                mode, root_slot = trigger.split(":")
                root = token if root_slot == slot else self.cs.get(root_slot)
                if mode == "related":
                    results = search_related(store, root, config)
                    triggered = [w for w, _, _ in results]
                else:
                    triggered = search_antonyms(store, root, config)

            setattr(self.cs, slot, token)
            cluster = self.graph.allocate_cluster() if trigger is not None else None
            event = self._append_event(SLOT_SET, word=token, slot=slot, cluster=cluster)
            delta = None
            if trigger is not None:
                if mode == "related":
                    delta = self._merge_related(root, results, cluster, event.seq)
                else:
                    delta = self._merge_antonyms(store, root, triggered, cluster, event.seq)
            self.add_to_pool(token, "slot_drop")
            return SlotResult(self.cs.as_dict(), tuple(triggered), delta)

    def clear_playground(self) -> "ExplorationSession":
        """Empty the graph; the pool, character space, and cluster counter survive."""
        with self._lock:
            self._ensure_open()
            self.graph.nodes.clear()
            self.graph.links.clear()
            self._append_event(CLEAR)
            return self

    def close(self) -> None:
        with self._lock:
            if self.closed_at is None:
                self.closed_at = self._clock()

    def report(
        self, store: LexiconStore, config: FilterConfig = FilterConfig()
    ) -> SessionReport:
        """Score the session's phrase and summarize pool size and duration."""
        with self._lock:
            if self.cs.w1 is None or self.cs.w2 is None:
                raise IncompleteCsError("both w1 and w2 must be set before reporting")
            dcp = analytics.score_dcp(store, self.cs.w1, self.cs.w2, config)
            end = self.closed_at if self.closed_at is not None else self._clock()
            return SessionReport(
                dcp=dcp,
                word_count=len(self.pool),
                duration_ms=max(0, end - self.created_at),
            )

    def touched_words(self) -> dict[str, list[tuple[int, str]]]:
        """Distinct words carried by interaction events, in first-touch order."""
        touched: dict[str, list[tuple[int, str]]] = {}
        for event in self.events:
            if event.kind in (QUERY, EXPAND_CLICK, SLOT_SET) and event.word:
                touched.setdefault(event.word, []).append((event.seq, event.kind))
        return touched

    def exploration_map(self, store: LexiconStore, k: int = 2) -> ExplorationMap:
        """2-D (by default) embedding map of the words this session touched,
        annotated with the interaction sequence for trail drawing."""
        with self._lock:
            touched = self.touched_words()
            plottable = {w: store.vector_of(w) for w in touched}
            unplottable = tuple(w for w, v in plottable.items() if v is None)
            words = [w for w, v in plottable.items() if v is not None]
            if len(words) < 2:
                raise InsufficientWordsError(
                    f"need at least 2 embeddable words, have {len(words)}"
                )
            model = metrics.pca_fit([plottable[w] for w in words], k)
            points = tuple(
                MapPoint(
                    word=w,
                    coords=tuple(float(c) for c in metrics.pca_project(model, plottable[w])),
                    events=tuple(touched[w]),
                )
                for w in words
            )
            return ExplorationMap(points=points, unplottable=unplottable)

    # --- serialization ---------------------------------------------------

    def serialize_state(self) -> bytes:
        """Canonical JSON bytes of (graph, pool, cs), for replay comparison."""
        with self._lock:
            state = {
                "graph": {
                    "nodes": sorted([w, c] for w, c in self.graph.nodes.items()),
                    "links": sorted(list(link) for link in self.graph.links),
                    "next_cluster": self.graph.next_cluster,
                },
                "pool": list(self.pool),
                "cs": self.cs.as_dict(),
            }
            return json.dumps(state, sort_keys=True, separators=(",", ":")).encode("utf-8")

    def to_log(self) -> str:
        """One JSON record per line, fields (seq, at, kind, word?, slot?, cluster?)."""
        with self._lock:
            return "".join(
                json.dumps(e.to_record(), sort_keys=True, separators=(",", ":")) + "\n"
                for e in self.events
            )


def create_session(
    brief_id: str,
    clock: Optional[Clock] = None,
    allow_reorder: bool = False,
) -> ExplorationSession:
    return ExplorationSession(brief_id, clock=clock, allow_reorder=allow_reorder)


def parse_log(text: str | Iterable[str]) -> list[ExplorationEvent]:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    events = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            events.append(ExplorationEvent.from_record(json.loads(line)))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ReplayMismatchError(f"bad log line {line!r}: {exc}") from exc
    for i, event in enumerate(events, start=1):
        if event.seq != i:
            raise ReplayMismatchError(f"event seq {event.seq} at position {i}: log is not gapless")
    return events


def scripted_clock(values: list[int]) -> Clock:
    """Clock that replays ``values`` then repeats the last one."""
    it = iter(values)
    state = {"last": values[-1] if values else 0}

    def clock() -> int:
        try:
            state["last"] = next(it)
        except StopIteration:
            pass
        return state["last"]

    return clock


# event kinds a user initiates; the rest are derived and verified during replay
_ROOT_KINDS = (QUERY, EXPAND_CLICK, SLOT_SET, POOL_ADD, CLEAR)


def replay_log(
    log: str | Iterable[str],
    store: LexiconStore,
    config: FilterConfig = FilterConfig(),
    brief_id: str = "replay",
) -> ExplorationSession:
    """Rebuild a session by re-running its event log through the operations.

    Derived events (e.g. the POOL_ADD emitted by a QUERY) are consumed and
    verified against the log rather than re-issued; any divergence raises
    :class:`ReplayMismatchError`.
    """
    events = parse_log(log)
    ats = [e.at for e in events]
    clock = scripted_clock([ats[0]] + ats) if events else _default_clock
    session = ExplorationSession(brief_id, clock=clock, allow_reorder=True)
    i = 0
    while i < len(events):
        event = events[i]
        before = len(session.events)
        if event.kind == QUERY:
            session.expand(store, event.word, QUERY, config)
        elif event.kind == EXPAND_CLICK:
            session.expand(store, event.word, EXPAND_CLICK, config)
        elif event.kind == SLOT_SET:
            session.set_slot(store, event.slot, event.word, config)
        elif event.kind == POOL_ADD:
            session.add_to_pool(event.word, "query_auto")
        elif event.kind == CLEAR:
            session.clear_playground()
        produced = session.events[before:]
        expected = events[i : i + len(produced)]
        if [e.to_record() for e in produced] != [e.to_record() for e in expected]:
            raise ReplayMismatchError(
                f"replay diverged at seq {event.seq}: produced "
                f"{[e.to_record() for e in produced]} expected {[e.to_record() for e in expected]}"
            )
        i += len(produced)
    return session
