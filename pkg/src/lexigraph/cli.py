"""Command-line front end.

Exit codes: 0 success, 1 usage problems, 2 data errors.  Diagnostics go to
stderr; stdout carries only the requested output so pipelines stay clean.
The store snapshot path comes from --store or the LEXIGRAPH_STORE variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import analytics
from .errors import LexigraphError
from .explorer import FilterConfig, search_antonyms, search_related, validate_query
from .lexicon import load_lexicon
from .service import load_store, run_service, save_store
from .session import replay_log

STORE_ENV_VAR = "LEXIGRAPH_STORE"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit 2; this CLI reserves 2 for data errors."""

    def error(self, message):
        raise _UsageError(message)


def _add_filter_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--min-cos", type=float, default=None, help="lower |cosine| bound")
    parser.add_argument("--max-cos", type=float, default=None, help="upper |cosine| bound")
    parser.add_argument("--min-freq", type=float, default=None, help="lower frequency bound (per million)")
    parser.add_argument("--max-freq", type=float, default=None, help="upper frequency bound (per million)")
    parser.add_argument("--max-results", type=int, default=None, help="result cap per search")


def _add_store_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--store", default=None,
                        help=f"store snapshot path (default: ${STORE_ENV_VAR})")


def _config_from_args(args) -> FilterConfig:
    base = FilterConfig()
    return FilterConfig(
        cos_min=args.min_cos if args.min_cos is not None else base.cos_min,
        cos_max=args.max_cos if args.max_cos is not None else base.cos_max,
        freq_min=args.min_freq if args.min_freq is not None else base.freq_min,
        freq_max=args.max_freq if args.max_freq is not None else base.freq_max,
        max_results=args.max_results if args.max_results is not None else base.max_results,
    )


def _store_from_args(args):
    path = args.store or os.environ.get(STORE_ENV_VAR)
    if not path:
        raise _UsageError(f"no store snapshot: pass --store or set {STORE_ENV_VAR}")
    return load_store(path)


def _build_parser() -> _Parser:
    parser = _Parser(prog="lexigraph", description="lexical knowledge-graph explorer")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("ingest", help="build a store snapshot from source files")
    p.add_argument("--edges", required=True, help="relation TSV")
    p.add_argument("--embeddings", required=True, help="embedding text file")
    p.add_argument("--frequencies", required=True, help="frequency TSV")
    p.add_argument("--pos", required=True, help="part-of-speech TSV")
    p.add_argument("--out", required=True, help="snapshot output path")
    p.add_argument("--frequency-mode", choices=["per_million", "raw_counts"],
                   default="per_million")
    p.add_argument("--corpus-tokens", type=float, default=None,
                   help="corpus size for raw_counts conversion")

    p = sub.add_parser("serve", help="run the HTTP API")
    _add_store_flag(p)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    for name, help_text in (("related", "search related words"),
                            ("antonyms", "search antonyms of related words")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word")
        _add_store_flag(p)
        _add_filter_flags(p)

    p = sub.add_parser("score", help="score one phrase")
    p.add_argument("w1")
    p.add_argument("w2")
    _add_store_flag(p)
    _add_filter_flags(p)

    p = sub.add_parser("report", help="score phrases from a TSV file")
    p.add_argument("file", help="two-column w1/w2 TSV, or a previous report TSV")
    _add_store_flag(p)
    _add_filter_flags(p)

    p = sub.add_parser("map", help="replay a session log and print its 2D word map")
    p.add_argument("log")
    _add_store_flag(p)
    _add_filter_flags(p)

    p = sub.add_parser("correlate", help="correlate a report column with ratings")
    p.add_argument("report", help="report TSV emitted by `report` or `score`")
    p.add_argument("ratings", help="TSV whose last column is the rating, aligned by row")
    p.add_argument("--metric", choices=["cos_sim", "mean_freq"], required=True)

    p = sub.add_parser("replay", help="rebuild a session from its event log")
    p.add_argument("log")
    _add_store_flag(p)
    _add_filter_flags(p)

    return parser


def _read_phrases(path: str) -> list[tuple[str, str]]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if lines and tuple(lines[0].split("\t")) == analytics.REPORT_HEADER:
        return [(r.w1, r.w2) for r in analytics.parse_report_tsv(text)]
    phrases = []
    for ln in lines:
        cols = ln.split("\t")
        if len(cols) < 2:
            raise LexigraphError(f"phrase row needs two columns: {ln!r}")
        phrases.append((cols[0], cols[1]))
    return phrases


def _read_ratings(path: str) -> list[float]:
    ratings = []
    with open(path, "r", encoding="utf-8") as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            try:
                ratings.append(float(ln.split("\t")[-1]))
            except ValueError as exc:
                raise LexigraphError(f"bad rating row {ln!r}: {exc}") from exc
    return ratings


def _cmd_ingest(args) -> int:
    store = load_lexicon(
        args.edges, args.embeddings, args.frequencies, args.pos,
        frequency_mode=args.frequency_mode, corpus_token_count=args.corpus_tokens,
    )
    save_store(store, args.out)
    n_edges = sum(len(v) for v in store.edges_by_word.values()) // 2
    print(f"{len(store.vectors)} vectors, {n_edges} edges, "
          f"{len(store.frequencies)} frequencies -> {args.out}")
    return EXIT_OK


def _cmd_related(args) -> int:
    store = _store_from_args(args)
    token = validate_query(store, args.word)
    for word, _relation, _weight in search_related(store, token, _config_from_args(args)):
        print(word)
    return EXIT_OK


def _cmd_antonyms(args) -> int:
    store = _store_from_args(args)
    token = validate_query(store, args.word)
    for word in search_antonyms(store, token, _config_from_args(args)):
        print(word)
    return EXIT_OK


def _cmd_score(args) -> int:
    store = _store_from_args(args)
    report = analytics.score_dcp(store, args.w1, args.w2, _config_from_args(args))
    sys.stdout.write(analytics.render_report_tsv([report]))
    return EXIT_OK


def _cmd_report(args) -> int:
    store = _store_from_args(args)
    phrases = _read_phrases(args.file)
    reports = analytics.batch_report(store, phrases, _config_from_args(args))
    sys.stdout.write(analytics.render_report_tsv(reports))
    return EXIT_OK


def _cmd_map(args) -> int:
    store = _store_from_args(args)
    with open(args.log, "r", encoding="utf-8") as fh:
        session = replay_log(fh.read(), store, _config_from_args(args))
    chart = session.exploration_map(store)
    print("word\tx\ty\tkinds\tseqs")
    for point in chart.points:
        coords = "\t".join(format(c, ".10g") for c in point.coords)
        print(f"{point.word}\t{coords}\t{','.join(point.kinds)}\t"
              f"{','.join(str(s) for s in point.seqs)}")
    for word in chart.unplottable:
        print(f"{word}\tnull\tnull\t\t", file=sys.stderr)
    return EXIT_OK


def _cmd_correlate(args) -> int:
    with open(args.report, "r", encoding="utf-8") as fh:
        reports = analytics.parse_report_tsv(fh.read())
    ratings = _read_ratings(args.ratings)
    study = analytics.correlate(reports, ratings, args.metric)
    print("metric\tr\tn\tdropped")
    print(f"{args.metric}\t{study.r:.6f}\t{study.n}\t{study.dropped}")
    return EXIT_OK


def _cmd_replay(args) -> int:
    store = _store_from_args(args)
    with open(args.log, "r", encoding="utf-8") as fh:
        session = replay_log(fh.read(), store, _config_from_args(args))
    sys.stdout.write(session.serialize_state().decode("utf-8") + "\n")
    return EXIT_OK


def _cmd_serve(args) -> int:
    store = _store_from_args(args)
    run_service(store, host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "serve": _cmd_serve,
    "related": _cmd_related,
    "antonyms": _cmd_antonyms,
    "score": _cmd_score,
    "report": _cmd_report,
    "map": _cmd_map,
    "correlate": _cmd_correlate,
    "replay": _cmd_replay,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a subcommand is required")
        try:
            return _COMMANDS[args.command](args)
        except FileNotFoundError as exc:
            print(f"error: missing_file: {exc}", file=sys.stderr)
            return EXIT_DATA
        except LexigraphError as exc:
            print(f"error: {exc.kind}: {exc}", file=sys.stderr)
            return EXIT_DATA
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
