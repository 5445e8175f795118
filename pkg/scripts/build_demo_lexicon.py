#!/usr/bin/env python3
"""Emit a small demo lexicon as source TSVs and ingest it into a snapshot.

The demo graph is a thesaurus-style expansion tree rooted at "sustainable"
with a few antonym links, sized so every CLI subcommand has something to show:

    python3 scripts/build_demo_lexicon.py --out-dir demo_data
    lexigraph related sustainable --store demo_data/store.pickle
"""

from __future__ import annotations

import argparse
from pathlib import Path

from lexigraph.lexicon import load_lexicon
from lexigraph.service import save_store
from lexigraph.synthetic import make_tree_lexicon

TREE = {
    "sustainable": ["renewable", "endurable", "bearable", "livable", "workable", "viable"],
    "renewable": ["continuous", "recyclable", "replaceable", "reusable", "refillable"],
    "continuous": ["constant", "unbroken", "steady", "ceaseless", "lasting"],
    "constant": ["stable", "uniform", "invariant"],
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
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="demo_data", help="where to write sources + snapshot")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    sources = make_tree_lexicon(TREE, antonym_edges=ANTONYM_EDGES, pos_only=POS_ONLY)
    paths = sources.write(out_dir)
    store = load_lexicon(paths["edges"], paths["embeddings"],
                         paths["frequencies"], paths["pos"])
    snapshot = out_dir / "store.pickle"
    save_store(store, snapshot)
    n_edges = sum(len(v) for v in store.edges_by_word.values()) // 2
    print(f"wrote {', '.join(p.name for p in paths.values())} to {out_dir}/")
    print(f"snapshot: {snapshot} ({len(store.vectors)} vectors, {n_edges} edges)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
