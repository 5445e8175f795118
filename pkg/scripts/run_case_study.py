#!/usr/bin/env python3
"""Scripted end-to-end walkthrough: explore, fill the character space, analyze.

Replays the five-word sprint (one query, a chain of expansions, four slot
drops) against a demo snapshot, then prints the phrase report, the 2D
exploration map, a correlation against mock originality ratings, and verifies
the event log replays to a byte-identical state.

    python3 scripts/build_demo_lexicon.py --out-dir demo_data
    python3 scripts/run_case_study.py --store demo_data/store.pickle
"""

from __future__ import annotations

import argparse
from pathlib import Path

from lexigraph import analytics
from lexigraph.service import load_store
from lexigraph.session import EXPAND_CLICK, QUERY, create_session, replay_log, scripted_clock


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--store", default="demo_data/store.pickle")
    parser.add_argument("--log-out", default=None, help="also write the event log here")
    args = parser.parse_args()

    store = load_store(args.store)
    session = create_session("case-study", clock=scripted_clock(list(range(1_000, 1_400))))

    print("== exploration ==")
    delta = session.expand(store, "sustainable", QUERY)
    print(f"query {delta.origin!r}: cluster {delta.cluster}, "
          f"candidates {delta.candidate_words()}")
    for word in ("renewable", "continuous", "constant"):
        delta = session.expand(store, word, EXPAND_CLICK)
        print(f"click {word!r}: cluster {delta.cluster}, "
              f"candidates {delta.candidate_words()}")

    print("\n== character space ==")
    for slot, word in (("w1", "sustainable"), ("w2", "renewable"),
                       ("w3", "continuous"), ("w4", "constant")):
        result = session.set_slot(store, slot, word)
        print(f"{slot} <- {word!r}; triggered {result.triggered or 'nothing'}")
    summary = session.report(store)
    dcp = (summary.dcp.w1, summary.dcp.w2)
    print(f"DCP: {dcp}, pool size {summary.word_count}")

    print("\n== phrase report ==")
    phrases = [dcp, ("sustainable", "continuous"), ("renewable", "constant")]
    reports = analytics.batch_report(store, phrases)
    print(analytics.render_report_tsv(reports), end="")

    print("\n== correlation vs mock originality ratings ==")
    ratings = [2.0, 4.5, 6.0]
    study = analytics.correlate(reports, ratings, "cos_sim")
    print(f"cos_sim vs rating: r={study.r:.4f}, n={study.n}, dropped={study.dropped}")

    print("\n== exploration map ==")
    chart = session.exploration_map(store)
    for point in chart.points:
        x, y = point.coords
        print(f"{point.word:12s} x={x:+.3f} y={y:+.3f} "
              f"kinds={','.join(point.kinds)} seqs={list(point.seqs)}")
    if chart.unplottable:
        print(f"unplottable (no vector): {chart.unplottable}")

    log = session.to_log()
    replayed = replay_log(log, store)
    identical = replayed.serialize_state() == session.serialize_state()
    print(f"\n== replay check ==\nlog lines: {len(log.splitlines())}, "
          f"byte-identical state after replay: {identical}")
    if args.log_out:
        Path(args.log_out).write_text(log, encoding="utf-8")
        print(f"event log written to {args.log_out}")
    return 0 if identical else 1


if __name__ == "__main__":
    raise SystemExit(main())
