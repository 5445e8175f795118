"""Phrase scoring against the published metric table, TSV round-trips, correlation."""

from __future__ import annotations

import pytest

from conftest import PHRASE_TABLE, TABLE_TOL
from lexigraph.analytics import (
    FLAG_HIGH_FREQUENCY,
    FLAG_HIGH_SIMILARITY,
    FLAG_LOW_FREQUENCY,
    FLAG_MISSING_DATA,
    batch_report,
    correlate,
    parse_report_tsv,
    render_report_tsv,
    score_dcp,
)
from lexigraph.errors import InsufficientDataError, MetricsError
from lexigraph.metrics import pearson


def approx_or_none(got, want, tol=TABLE_TOL):
    if want is None:
        return got is None
    return got is not None and abs(got - want) <= tol


class TestGoldenTable:
    @pytest.mark.parametrize("pid,w1,w2,_wc,f1,f2,mean,cos",
                             PHRASE_TABLE, ids=[r[0] for r in PHRASE_TABLE])
    def test_every_row_reproduced(self, phrase_store, pid, w1, w2, _wc, f1, f2, mean, cos):
        report = score_dcp(phrase_store, w1, w2)
        assert approx_or_none(report.freq_w1, f1), f"{pid} freq_w1"
        assert approx_or_none(report.freq_w2, f2), f"{pid} freq_w2"
        assert approx_or_none(report.mean_freq, mean), f"{pid} mean_freq"
        assert approx_or_none(report.cos_sim, cos), f"{pid} cos_sim"

    def test_single_sided_mean(self, phrase_store):
        # one frequency missing: the mean is the surviving value, not half of it
        report = score_dcp(phrase_store, "empathy", "transcendent")
        assert report.freq_w1 is None
        assert report.mean_freq == pytest.approx(1.45, abs=TABLE_TOL)
        assert FLAG_MISSING_DATA in report.flags

    def test_fully_null_row(self, phrase_store):
        report = score_dcp(phrase_store, "good-natured", "safeness")
        assert report.freq_w1 is None and report.freq_w2 is None
        assert report.mean_freq is None and report.cos_sim is None
        assert report.flags == {FLAG_MISSING_DATA}


class TestFlags:
    def test_high_similarity_and_frequency(self, phrase_store):
        report = score_dcp(phrase_store, "sustainable", "renewable")
        assert {FLAG_HIGH_SIMILARITY, FLAG_HIGH_FREQUENCY} <= report.flags

    def test_clean_row_has_no_flags(self, phrase_store):
        assert score_dcp(phrase_store, "cognizant", "inclusive").flags == frozenset()

    def test_high_similarity_alone(self, phrase_store):
        report = score_dcp(phrase_store, "economical", "efficient")  # cos .551, mean 31.64
        assert report.flags == {FLAG_HIGH_SIMILARITY}

    def test_low_frequency(self, phrase_store):
        report = score_dcp(phrase_store, "protean", "companionable")  # mean .13
        assert report.flags == {FLAG_LOW_FREQUENCY}

    def test_unknown_words_are_total(self, phrase_store):
        report = score_dcp(phrase_store, "qwzrt", "zzyzx")
        assert report.flags == {FLAG_MISSING_DATA}
        assert report.cos_sim is None and report.mean_freq is None

    def test_swap_symmetric_in_cos(self, phrase_store):
        for _pid, w1, w2, *_rest in PHRASE_TABLE:
            a = score_dcp(phrase_store, w1, w2)
            b = score_dcp(phrase_store, w2, w1)
            assert a.cos_sim == b.cos_sim
            assert a.mean_freq == b.mean_freq
            assert a.flags == b.flags
            assert (a.freq_w1, a.freq_w2) == (b.freq_w2, b.freq_w1)


class TestReportTsv:
    def test_batch_preserves_input_order(self, phrase_store):
        phrases = [(r[1], r[2]) for r in PHRASE_TABLE]
        reports = batch_report(phrase_store, phrases)
        assert [(r.w1, r.w2) for r in reports] == phrases

    def test_render_parse_round_trip(self, phrase_store):
        reports = batch_report(phrase_store, [(r[1], r[2]) for r in PHRASE_TABLE])
        text = render_report_tsv(reports)
        assert parse_report_tsv(text) == reports

    def test_rescoring_its_own_output_reproduces_it(self, phrase_store):
        phrases = [(r[1], r[2]) for r in PHRASE_TABLE]
        text = render_report_tsv(batch_report(phrase_store, phrases))
        again = render_report_tsv(
            batch_report(phrase_store, [(r.w1, r.w2) for r in parse_report_tsv(text)]))
        assert again == text

    def test_null_and_flag_rendering(self, phrase_store):
        text = render_report_tsv([score_dcp(phrase_store, "good-natured", "safeness"),
                                  score_dcp(phrase_store, "sustainable", "renewable")])
        lines = text.splitlines()
        assert lines[0] == "w1\tw2\tfreq_w1\tfreq_w2\tmean_freq\tcos_sim\tflags"
        assert lines[1].split("\t")[2:6] == ["null", "null", "null", "null"]
        assert lines[2].split("\t")[6] == "high_similarity,high_frequency"

    def test_empty_batch_keeps_header(self, phrase_store):
        assert render_report_tsv([]) == "w1\tw2\tfreq_w1\tfreq_w2\tmean_freq\tcos_sim\tflags\n"

    def test_parse_rejects_garbage(self):
        with pytest.raises(MetricsError):
            parse_report_tsv("not\ta\theader\n")
        with pytest.raises(MetricsError):
            parse_report_tsv("w1\tw2\tfreq_w1\tfreq_w2\tmean_freq\tcos_sim\tflags\nshort\trow\n")


# the four narrated sessions: cos_sim, mean_freq, expert originality
NARRATED = [
    ("protean", "companionable", 6.5),
    ("cognizant", "inclusive", 5.0),
    ("sustainable", "renewable", 1.5),
    ("economical", "efficient", 2.5),
]


class TestCorrelate:
    def test_equals_manual_pearson_on_narrated_cases(self, phrase_store):
        reports = batch_report(phrase_store, [(w1, w2) for w1, w2, _ in NARRATED])
        ratings = [r for _, _, r in NARRATED]
        for metric in ("cos_sim", "mean_freq"):
            study = correlate(reports, ratings, metric)
            manual = pearson([getattr(r, metric) for r in reports], ratings)
            assert study.r == manual.r and study.n == manual.n == 4
            assert study.dropped == 0
            assert study.r < 0

    def test_absent_rows_dropped_pairwise(self, phrase_store):
        reports = batch_report(
            phrase_store,
            [("good-natured", "safeness")] + [(w1, w2) for w1, w2, _ in NARRATED],
        )
        ratings = [9.9] + [r for _, _, r in NARRATED]
        study = correlate(reports, ratings, "cos_sim")
        assert study.dropped == 1 and study.n == 4

    def test_identity_rating_gives_r_one(self, phrase_store):
        reports = batch_report(phrase_store, [(w1, w2) for w1, w2, _ in NARRATED])
        ratings = [r.cos_sim for r in reports]
        assert correlate(reports, ratings, "cos_sim").r == pytest.approx(1.0)

    def test_too_few_survivors(self, phrase_store):
        reports = batch_report(phrase_store, [("good-natured", "safeness"),
                                              ("sustainable", "renewable")])
        with pytest.raises(InsufficientDataError):
            correlate(reports, [1.0, 2.0], "cos_sim")

    def test_input_validation(self, phrase_store):
        reports = batch_report(phrase_store, [(w1, w2) for w1, w2, _ in NARRATED])
        with pytest.raises(MetricsError):
            correlate(reports, [1.0], "cos_sim")
        with pytest.raises(MetricsError):
            correlate(reports, [1, 2, 3, 4], "word_count")
