"""Ingestion and lookup of the lexical knowledge graph.

Four plain-text sources feed one immutable :class:`LexiconStore`:

* edges        TSV ``relation<TAB>start<TAB>end<TAB>weight`` ('#' comments)
* embeddings   text, optional ``<count> <dim>`` header, then ``word v1 .. vD``
* frequencies  TSV ``word<TAB>value`` (per-million or raw corpus counts)
* pos          TSV ``word<TAB>pos<TAB>gloss?``

Malformed rows are skipped and tallied in ``store.skip_counts``; missing data
is always reported as ``None``, never as 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional, Sequence

import numpy as np

from .errors import InconsistentDimensionError, NoEmbeddingsError, SourceError

ANTONYM_RELATION = "Antonym"

POS_LABELS = frozenset({"adjective", "noun", "verb", "adverb", "other"})

FREQUENCY_MODES = ("per_million", "raw_counts")

# lowercase, single token, alphabetic with optional internal hyphens
_TOKEN_RE = re.compile(r"^[a-z]+(?:-[a-z]+)*$")


def normalize_token(raw: str) -> str:
    return raw.strip().lower()


def is_valid_token(token: str) -> bool:
    return bool(_TOKEN_RE.match(token))


@dataclass(frozen=True)
class LexEdge:
    relation: str
    start: str
    end: str
    weight: float

    def other(self, word: str) -> str:
        return self.end if word == self.start else self.start


@dataclass(frozen=True)
class PosEntry:
    word: str
    pos: str
    gloss: Optional[str] = None


@dataclass(frozen=True)
class LexiconStore:
    """Immutable after load; all lookups are total and return None when absent."""

    edges_by_word: Mapping[str, tuple[LexEdge, ...]]
    vectors: Mapping[str, np.ndarray]
    frequencies: Mapping[str, float]
    pos_entries: Mapping[str, PosEntry]
    dimension: int
    corpus_token_count: Optional[int] = None
    skip_counts: Mapping[str, int] = field(default_factory=dict)

    def edges_of(self, word: str) -> tuple[LexEdge, ...]:
        """Every edge incident to ``word``, in deterministic order."""
        return self.edges_by_word.get(normalize_token(word), ())

    def neighbors(
        self,
        word: str,
        relation_predicate: Optional[Callable[[str], bool]] = None,
    ) -> list[tuple[str, str, float]]:
        """(other_word, relation, weight) for each incident edge passing the predicate."""
        token = normalize_token(word)
        out = []
        for edge in self.edges_of(token):
            if relation_predicate is None or relation_predicate(edge.relation):
                out.append((edge.other(token), edge.relation, edge.weight))
        return out

    def vector_of(self, word: str) -> Optional[np.ndarray]:
        return self.vectors.get(normalize_token(word))

    def freq_of(self, word: str) -> Optional[float]:
        return self.frequencies.get(normalize_token(word))

    def pos_entry(self, word: str) -> Optional[PosEntry]:
        return self.pos_entries.get(normalize_token(word))

    def is_adjective(self, word: str) -> bool:
        entry = self.pos_entry(word)
        return entry is not None and entry.pos == "adjective"

    def words_with_vectors(self) -> list[str]:
        return sorted(self.vectors)


# --- row-level construction ---------------------------------------------------


def store_from_rows(
    edge_rows: Iterable[tuple[str, str, str, float]],
    vector_rows: Mapping[str, Sequence[float]],
    frequency_rows: Mapping[str, float],
    pos_rows: Mapping[str, tuple[str, Optional[str]]],
    *,
    frequency_mode: str = "per_million",
    corpus_token_count: Optional[int] = None,
    skip_counts: Optional[dict[str, int]] = None,
) -> LexiconStore:
    """Build a store from already-parsed rows, applying the same validation
    and normalization as the file loaders.
    """
    if frequency_mode not in FREQUENCY_MODES:
        raise ValueError(f"frequency_mode must be one of {FREQUENCY_MODES}")
    if frequency_mode == "raw_counts":
        if not corpus_token_count or corpus_token_count <= 0:
            raise ValueError("raw_counts mode requires a positive corpus_token_count")

    skips = dict(skip_counts or {})

    def _skip(kind: str) -> None:
        skips[kind] = skips.get(kind, 0) + 1

    edges: list[LexEdge] = []
    for relation, start, end, weight in edge_rows:
        relation = relation.strip()
        s, e = normalize_token(start), normalize_token(end)
        w = float(weight)
        if (
            not relation
            or not is_valid_token(s)
            or not is_valid_token(e)
            or s == e
            or not np.isfinite(w)
            or w < 0
        ):
            _skip("edges")
            continue
        edges.append(LexEdge(relation, s, e, w))

    vectors: dict[str, np.ndarray] = {}
    dim: Optional[int] = None
    for word, comps in vector_rows.items():
        token = normalize_token(word)
        vec = np.asarray(comps, dtype=float)
        if not is_valid_token(token) or vec.ndim != 1 or not np.all(np.isfinite(vec)):
            _skip("embeddings")
            continue
        if not np.any(vec):
            _skip("embeddings")
            continue
        if dim is None:
            dim = vec.shape[0]
        elif vec.shape[0] != dim:
            raise InconsistentDimensionError(
                f"embedding rows disagree on dimension ({dim} vs {vec.shape[0]})"
            )
        vectors[token] = vec
    if not vectors:
        raise NoEmbeddingsError("no valid embedding rows")
    assert dim is not None
    if dim < 2:
        raise InconsistentDimensionError(f"embedding dimension must be >= 2, got {dim}")

    frequencies: dict[str, float] = {}
    for word, value in frequency_rows.items():
        token = normalize_token(word)
        v = float(value)
        if not is_valid_token(token) or not np.isfinite(v) or v < 0:
            _skip("frequencies")
            continue
        if frequency_mode == "raw_counts":
            v = v / corpus_token_count * 1_000_000
        frequencies[token] = v

    pos_entries: dict[str, PosEntry] = {}
    for word, (pos, gloss) in pos_rows.items():
        token = normalize_token(word)
        pos = pos.strip().lower()
        if not is_valid_token(token) or pos not in POS_LABELS:
            _skip("pos")
            continue
        pos_entries[token] = PosEntry(token, pos, gloss)

    by_word: dict[str, list[LexEdge]] = {}
    for edge in edges:
        by_word.setdefault(edge.start, []).append(edge)
        by_word.setdefault(edge.end, []).append(edge)
    edges_by_word = {
        word: tuple(sorted(incident, key=lambda e: (e.other(word), e.relation, e.weight)))
        for word, incident in by_word.items()
    }

    return LexiconStore(
        edges_by_word=edges_by_word,
        vectors=vectors,
        frequencies=frequencies,
        pos_entries=pos_entries,
        dimension=dim,
        corpus_token_count=corpus_token_count,
        skip_counts=skips,
    )


# --- file parsing --------------------------------------------------------------


def _read_lines(path) -> list[str]:
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise SourceError(f"cannot read {path}: {exc}") from exc


def _data_lines(path) -> list[str]:
    return [ln for ln in _read_lines(path) if ln.strip() and not ln.lstrip().startswith("#")]


def parse_edge_file(path) -> tuple[list[tuple[str, str, str, float]], int]:
    rows, skipped = [], 0
    for line in _data_lines(path):
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 4:
            skipped += 1
            continue
        relation, start, end, weight = parts
        try:
            rows.append((relation, start, end, float(weight)))
        except ValueError:
            skipped += 1
    return rows, skipped


def parse_embedding_file(path) -> tuple[dict[str, list[float]], int]:
    """Returns word -> components.

    A leading ``<count> <dim>`` header fixes the dimension: rows of any other
    length are skipped.  Without a header the rows themselves must agree; an
    unresolvable mix of dimensions is fatal.
    """
    lines = _data_lines(path)
    declared: Optional[int] = None
    start_idx = 0
    if lines:
        head = lines[0].split()
        if len(head) == 2:
            try:
                _count, declared = int(head[0]), int(head[1])
                start_idx = 1
            except ValueError:
                declared = None
    rows: dict[str, list[float]] = {}
    skipped = 0
    for line in lines[start_idx:]:
        parts = line.split()
        if len(parts) < 2:
            skipped += 1
            continue
        word, comps = parts[0], parts[1:]
        try:
            values = [float(c) for c in comps]
        except ValueError:
            skipped += 1
            continue
        if declared is not None and len(values) != declared:
            skipped += 1
            continue
        rows[word] = values
    return rows, skipped


def parse_frequency_file(path) -> tuple[dict[str, float], int]:
    rows, skipped = {}, 0
    for line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 2:
            skipped += 1
            continue
        word, value = parts
        try:
            rows[word] = float(value)
        except ValueError:
            skipped += 1
    return rows, skipped


def parse_pos_file(path) -> tuple[dict[str, tuple[str, Optional[str]]], int]:
    rows: dict[str, tuple[str, Optional[str]]] = {}
    skipped = 0
    for line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) == 2:
            word, pos = parts
            gloss = None
        elif len(parts) == 3:
            word, pos, gloss = parts
            gloss = gloss or None
        else:
            skipped += 1
            continue
        rows[word] = (pos, gloss)
    return rows, skipped


def load_lexicon(
    edge_source,
    embedding_source,
    frequency_source,
    pos_source,
    *,
    frequency_mode: str = "per_million",
    corpus_token_count: Optional[int] = None,
) -> LexiconStore:
    """Parse the four sources and assemble an immutable store."""
    edge_rows, edge_skipped = parse_edge_file(edge_source)
    vector_rows, vec_skipped = parse_embedding_file(embedding_source)
    freq_rows, freq_skipped = parse_frequency_file(frequency_source)
    pos_rows, pos_skipped = parse_pos_file(pos_source)
    return store_from_rows(
        edge_rows,
        vector_rows,
        freq_rows,
        pos_rows,
        frequency_mode=frequency_mode,
        corpus_token_count=corpus_token_count,
        skip_counts={
            "edges": edge_skipped,
            "embeddings": vec_skipped,
            "frequencies": freq_skipped,
            "pos": pos_skipped,
        },
    )
