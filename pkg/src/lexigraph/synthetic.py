"""Synthetic lexicons with prescribed geometry, for tests, demos, and benchmarks.

Two builders cover the common needs:

* :func:`make_phrase_lexicon` — embeddings whose pairwise cosine similarities
  hit exact target values (via a Gram-matrix factorization), plus per-word
  frequencies.  Used to regenerate known phrase-metric tables.
* :func:`make_tree_lexicon` — a hub-and-spoke expansion tree whose parent-child
  cosines all land inside the default filter window, so scripted exploration
  sessions produce predictable candidate counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence

import numpy as np

from .lexicon import LexiconStore, store_from_rows


@dataclass
class SourceFiles:
    """Parsed-form lexicon sources; can be materialized as the four TSVs."""

    edges: list[tuple[str, str, str, float]] = field(default_factory=list)
    vectors: dict[str, list[float]] = field(default_factory=dict)
    frequencies: dict[str, float] = field(default_factory=dict)
    pos: dict[str, tuple[str, Optional[str]]] = field(default_factory=dict)

    def build_store(self, **kwargs) -> LexiconStore:
        return store_from_rows(self.edges, self.vectors, self.frequencies, self.pos, **kwargs)

    def write(self, directory) -> dict[str, Path]:
        """Write edges.tsv, embeddings.txt, frequencies.tsv, pos.tsv into ``directory``."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        paths = {
            "edges": directory / "edges.tsv",
            "embeddings": directory / "embeddings.txt",
            "frequencies": directory / "frequencies.tsv",
            "pos": directory / "pos.tsv",
        }
        edge_lines = ["# relation\tstart\tend\tweight"]
        edge_lines += [f"{r}\t{s}\t{e}\t{w}" for r, s, e, w in self.edges]
        paths["edges"].write_text("\n".join(edge_lines) + "\n", encoding="utf-8")

        dim = len(next(iter(self.vectors.values()))) if self.vectors else 0
        emb_lines = [f"{len(self.vectors)} {dim}"]
        for word, comps in self.vectors.items():
            emb_lines.append(word + " " + " ".join(repr(float(c)) for c in comps))
        paths["embeddings"].write_text("\n".join(emb_lines) + "\n", encoding="utf-8")

        freq_lines = [f"{w}\t{v}" for w, v in self.frequencies.items()]
        paths["frequencies"].write_text("\n".join(freq_lines) + "\n", encoding="utf-8")

        pos_lines = [
            f"{w}\t{p}\t{g}" if g else f"{w}\t{p}" for w, (p, g) in self.pos.items()
        ]
        paths["pos"].write_text("\n".join(pos_lines) + "\n", encoding="utf-8")
        return paths


def make_gram_vectors(
    words: Sequence[str],
    target_cosines: Mapping[tuple[str, str], float],
) -> dict[str, np.ndarray]:
    """Unit vectors whose pairwise cosines equal ``target_cosines`` exactly.

    Builds the Gram matrix G (identity diagonal, targets off-diagonal,
    unspecified pairs orthogonal) and factors it as G = V V^T.  G must be
    positive semidefinite; sparse targets well below 1 always are.
    """
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    gram = np.eye(n)
    for (a, b), cos in target_cosines.items():
        i, j = index[a], index[b]
        if i == j:
            raise ValueError(f"cannot set a self-cosine for {a!r}")
        gram[i, j] = gram[j, i] = cos
    eigvals, eigvecs = np.linalg.eigh(gram)
    if eigvals.min() < -1e-9:
        raise ValueError(f"target cosines are not realizable (min eigenvalue {eigvals.min():.3g})")
    factors = eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))
    return {w: factors[index[w]] for w in words}


def make_phrase_lexicon(
    frequencies: Mapping[str, Optional[float]],
    cosines: Mapping[tuple[str, str], float],
    pos: Optional[Mapping[str, str]] = None,
    no_vector: Sequence[str] = (),
) -> SourceFiles:
    """Lexicon sources carrying exact per-word frequencies and pair cosines.

    Words listed in ``no_vector`` get no embedding row; words mapped to None
    in ``frequencies`` get no frequency row.  There are no edges: this backs
    phrase scoring, not graph search.
    """
    missing = set(no_vector)
    vocab = sorted(set(frequencies) - missing)
    for a, b in cosines:
        if a in missing or b in missing:
            raise ValueError(f"pair ({a!r}, {b!r}) references a vectorless word")
    vectors = make_gram_vectors(vocab, cosines)
    src = SourceFiles()
    src.vectors = {w: list(v) for w, v in vectors.items()}
    src.frequencies = {w: f for w, f in frequencies.items() if f is not None}
    pos = pos or {}
    for word in sorted(set(frequencies) | set(pos)):
        src.pos[word] = (pos.get(word, "adjective"), None)
    return src


def make_tree_lexicon(
    tree: Mapping[str, Sequence[str]],
    antonym_edges: Sequence[tuple[str, str]] = (),
    pos_only: Mapping[str, str] | Sequence[str] = (),
    freq: float = 10.0,
    parent_coupling: float = 0.35,
    relation: str = "RelatedTo",
) -> SourceFiles:
    """Expansion-tree lexicon: each parent links to its children.

    Every word gets its own embedding axis plus ``parent_coupling`` along its
    parent's axis, which puts all parent-child cosines (~0.31-0.33) inside the
    default |cosSim| window.  Words in ``pos_only`` get a part-of-speech entry
    but no embedding or frequency, e.g. bare antonym endpoints.
    """
    children_of = {p: list(cs) for p, cs in tree.items()}
    ordered: list[str] = []
    parent: dict[str, str] = {}
    for p, cs in children_of.items():
        if p not in ordered and p not in parent:
            ordered.append(p)
        for c in cs:
            if c in parent:
                raise ValueError(f"{c!r} has two parents")
            parent[c] = p
            if c not in ordered:
                ordered.append(c)
    axis = {w: i for i, w in enumerate(ordered)}
    dim = len(ordered)

    src = SourceFiles()
    for word in ordered:
        vec = np.zeros(dim)
        vec[axis[word]] = 1.0
        if word in parent:
            vec[axis[parent[word]]] += parent_coupling
        src.vectors[word] = list(vec)
        src.frequencies[word] = freq
        src.pos[word] = ("adjective", f"({word})")
    for p, cs in children_of.items():
        for c in cs:
            src.edges.append((relation, p, c, 1.0))
    for a, b in antonym_edges:
        src.edges.append(("Antonym", a, b, 1.0))
    if isinstance(pos_only, Mapping):
        extra = dict(pos_only)
    else:
        extra = {w: "adjective" for w in pos_only}
    for word, tag in extra.items():
        src.pos.setdefault(word, (tag, None))
    return src
