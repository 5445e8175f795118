"""Phrase scoring and batch reporting.

A design concept phrase (w1, w2) is scored on corpus frequency and embedding
cosine; threshold flags reuse the explorer's filter bounds so the cliche-risk
report and the candidate filter can never drift apart.  Reports render to a
TSV whose absent values are spelled ``null``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InsufficientDataError, MetricsError
from .explorer import FilterConfig
from .lexicon import LexiconStore, is_valid_token, normalize_token
from .metrics import cosine_similarity, pearson

FLAG_HIGH_SIMILARITY = "high_similarity"
FLAG_HIGH_FREQUENCY = "high_frequency"
FLAG_LOW_FREQUENCY = "low_frequency"
FLAG_MISSING_DATA = "missing_data"

# rendering order for the flags column
_FLAG_ORDER = (FLAG_HIGH_SIMILARITY, FLAG_HIGH_FREQUENCY, FLAG_LOW_FREQUENCY, FLAG_MISSING_DATA)

REPORT_HEADER = ("w1", "w2", "freq_w1", "freq_w2", "mean_freq", "cos_sim", "flags")


@dataclass(frozen=True)
class DcpReport:
    """One scored phrase: per-word frequencies, their mean, cosine, flags."""

    w1: str
    w2: str
    freq_w1: Optional[float]
    freq_w2: Optional[float]
    mean_freq: Optional[float]
    cos_sim: Optional[float]
    flags: frozenset[str]


@dataclass(frozen=True)
class CorrelationStudy:
    r: float
    n: int
    dropped: int


def score_dcp(
    store: LexiconStore, w1: str, w2: str, config: FilterConfig = FilterConfig()
) -> DcpReport:
    """Score one phrase.  Total: missing embeddings or frequencies surface as
    absent fields plus the missing_data flag, never as errors."""
    t1, t2 = normalize_token(w1), normalize_token(w2)
    v1 = store.vector_of(t1) if is_valid_token(t1) else None
    v2 = store.vector_of(t2) if is_valid_token(t2) else None
    f1 = store.freq_of(t1) if is_valid_token(t1) else None
    f2 = store.freq_of(t2) if is_valid_token(t2) else None

    cos = cosine_similarity(v1, v2) if v1 is not None and v2 is not None else None
    present = [f for f in (f1, f2) if f is not None]
    mean_freq = sum(present) / len(present) if present else None

    flags = set()
    if cos is not None and cos > config.cos_max:
        flags.add(FLAG_HIGH_SIMILARITY)
    if mean_freq is not None and mean_freq > config.freq_max:
        flags.add(FLAG_HIGH_FREQUENCY)
    if mean_freq is not None and mean_freq < config.freq_min:
        flags.add(FLAG_LOW_FREQUENCY)
    if f1 is None or f2 is None or cos is None:
        flags.add(FLAG_MISSING_DATA)
    return DcpReport(t1, t2, f1, f2, mean_freq, cos, frozenset(flags))


def batch_report(
    store: LexiconStore,
    phrases: Iterable[tuple[str, str]],
    config: FilterConfig = FilterConfig(),
) -> list[DcpReport]:
    """Score phrases in input order; malformed rows become all-absent rows."""
    return [score_dcp(store, w1, w2, config) for w1, w2 in phrases]


def _fmt(value: Optional[float]) -> str:
    # repr is the shortest string that parses back to the same float, so
    # render -> parse is the identity and round-trips are byte-stable
    if value is None:
        return "null"
    return repr(float(value))


def render_flags(flags: frozenset[str]) -> str:
    return ",".join(f for f in _FLAG_ORDER if f in flags)


def render_report_tsv(reports: Sequence[DcpReport]) -> str:
    lines = ["\t".join(REPORT_HEADER)]
    for r in reports:
        lines.append(
            "\t".join(
                [r.w1, r.w2, _fmt(r.freq_w1), _fmt(r.freq_w2),
                 _fmt(r.mean_freq), _fmt(r.cos_sim), render_flags(r.flags)]
            )
        )
    return "\n".join(lines) + "\n"


def _parse_value(text: str) -> Optional[float]:
    if text == "null":
        return None
    try:
        return float(text)
    except ValueError as exc:
        raise MetricsError(f"bad numeric cell {text!r}") from exc


def parse_report_tsv(text: str) -> list[DcpReport]:
    """Inverse of :func:`render_report_tsv` (header required)."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or tuple(lines[0].split("\t")) != REPORT_HEADER:
        raise MetricsError("report TSV must start with the standard header")
    reports = []
    for ln in lines[1:]:
        cols = ln.split("\t")
        if len(cols) != len(REPORT_HEADER):
            raise MetricsError(f"expected {len(REPORT_HEADER)} columns, got {len(cols)}: {ln!r}")
        flags = frozenset(f for f in cols[6].split(",") if f)
        reports.append(
            DcpReport(cols[0], cols[1], _parse_value(cols[2]), _parse_value(cols[3]),
                      _parse_value(cols[4]), _parse_value(cols[5]), flags)
        )
    return reports


def correlate(
    reports: Sequence[DcpReport], ratings: Sequence[float], metric: str
) -> CorrelationStudy:
    """Pearson r between a report column and aligned ratings.

    Rows whose metric is absent are dropped pairwise; at least two pairs
    must survive.
    """
    if metric not in ("cos_sim", "mean_freq"):
        raise MetricsError(f"metric must be cos_sim or mean_freq, got {metric!r}")
    if len(reports) != len(ratings):
        raise MetricsError(
            f"{len(reports)} reports vs {len(ratings)} ratings: inputs must align"
        )
    xs, ys = [], []
    for report, rating in zip(reports, ratings):
        value = getattr(report, metric)
        if value is None:
            continue
        xs.append(float(value))
        ys.append(float(rating))
    dropped = len(reports) - len(xs)
    if len(xs) < 2:
        raise InsufficientDataError(
            f"only {len(xs)} rows have {metric}; need at least 2"
        )
    result = pearson(xs, ys)
    return CorrelationStudy(r=result.r, n=result.n, dropped=dropped)
