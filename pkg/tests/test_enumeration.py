"""Generators and whole-universe verification."""

import itertools
import json

import pytest

from shipark.enumeration import (
    VerificationReport,
    enum_central_functions,
    enum_interval_sets,
    enum_parking_functions,
    enum_valid_pairs,
    enum_words,
    expected_region_count,
    resolve_jobs,
    verify_bijection,
)
from shipark.labeling import label_intervals
from shipark.model import GroundSet, ValidPair, Word, is_parking, validate_pair, word_from_text


class TestEnumWords:
    def test_two_elements(self):
        ws = [w.letters for w in enum_words(GroundSet.full(2))]
        assert ws == [(1, 2), (2, 1)]

    def test_counts(self):
        assert sum(1 for _ in enum_words(GroundSet.full(3))) == 6
        assert sum(1 for _ in enum_words(GroundSet.of((3, 4, 6, 7, 8, 9)))) == 720

    def test_lexicographic(self):
        ws = [w.letters for w in enum_words(GroundSet.full(4))]
        assert ws == sorted(ws)
        assert ws[0] == (1, 2, 3, 4) and ws[-1] == (4, 3, 2, 1)


class TestEnumIntervalSets:
    def test_descending_three(self):
        got = {ivs.intervals for ivs in enum_interval_sets(word_from_text("321"))}
        assert got == {(), ((1, 2),), ((1, 3),), ((2, 3),), ((1, 2), (2, 3))}

    def test_ascending_word(self):
        got = list(enum_interval_sets(word_from_text("123")))
        assert len(got) == 1 and not got[0]

    def test_per_word_totals_n3(self):
        totals = [
            sum(1 for _ in enum_interval_sets(w)) for w in enum_words(GroundSet.full(3))
        ]
        assert totals == [1, 2, 2, 3, 3, 5]
        assert sum(totals) == 16

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_duplicate_free_and_complete(self, m):
        # oracle: filter every subset of inversion pairs through the validator
        from shipark.contraction import inversions

        for w in enum_words(GroundSet.full(m)):
            generated = [ivs.intervals for ivs in enum_interval_sets(w)]
            assert len(generated) == len(set(generated))
            pairs = inversions(w)
            accepted = set()
            for k in range(len(pairs) + 1):
                for subset in itertools.combinations(pairs, k):
                    try:
                        accepted.add(validate_pair(w, subset).arcs.intervals)
                    except Exception:
                        pass
            assert set(generated) == accepted


class TestEnumParkingFunctions:
    def test_two_elements_in_order(self):
        fs = [f.values for f in enum_parking_functions(GroundSet.full(2))]
        assert fs == [(1, 1), (1, 2), (2, 1)]

    def test_singleton(self):
        assert [f.values for f in enum_parking_functions(GroundSet.full(1))] == [(1,)]

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_counts_match_formula(self, m):
        count = sum(1 for _ in enum_parking_functions(GroundSet.full(m)))
        assert count == expected_region_count(m)

    def test_matches_is_parking_filter(self):
        m = 4
        domain = list(range(1, m + 1))
        oracle = {
            values
            for values in itertools.product(range(1, m + 1), repeat=m)
            if is_parking(dict(zip(domain, values)))
        }
        assert {f.values for f in enum_parking_functions(GroundSet.full(m))} == oracle

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
    def test_central_counts_are_factorials(self, m):
        import math

        count = sum(1 for _ in enum_central_functions(GroundSet.full(m)))
        assert count == math.factorial(m)


class TestVerifyBijection:
    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 16), (4, 125)])
    def test_small_counts(self, n, expected):
        report = verify_bijection(n)
        assert report.success
        assert report.pair_count == report.parking_count == report.expected == expected

    def test_cross_check_against_object_layer(self):
        for n in (2, 3, 4):
            labels = [label_intervals(p) for p in enum_valid_pairs(GroundSet.full(n))]
            distinct = {lab.values for lab in labels}
            parking = {f.values for f in enum_parking_functions(GroundSet.full(n))}
            report = verify_bijection(n)
            assert len(labels) == report.pair_count
            assert len(distinct) == len(labels)
            assert distinct == parking
            assert report.parking_count == len(parking)

    def test_jobs_do_not_change_the_outcome(self):
        one = verify_bijection(5, jobs=1).to_dict()
        four = verify_bijection(5, jobs=4).to_dict()
        one.pop("elapsed")
        four.pop("elapsed")
        assert one == four

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            verify_bijection(0)
        with pytest.raises(ValueError):
            verify_bijection(9)

    def test_report_json_shape(self):
        data = json.loads(verify_bijection(3).to_json())
        assert data["n"] == 3
        assert data["success"] is True
        assert data["pair_count"] == data["parking_count"] == data["expected"] == 16
        assert data["label_collisions"] == []
        assert data["roundtrip_failures"] == []
        assert data["missed_functions"] == []

    def test_resolve_jobs_env(self, monkeypatch):
        monkeypatch.setenv("SHIPARK_JOBS", "3")
        assert resolve_jobs(None) == 3
        assert resolve_jobs(2) == 2
        monkeypatch.delenv("SHIPARK_JOBS")
        assert resolve_jobs(None) == 1
        with pytest.raises(ValueError):
            resolve_jobs(0)

    @pytest.mark.slow
    def test_n7(self):
        report = verify_bijection(7, jobs=4)
        assert report.success and report.pair_count == 262144

    @pytest.mark.slow
    def test_n8(self):
        report = verify_bijection(8, jobs=4)
        assert report.success and report.pair_count == 4782969


def test_streams_are_deterministic():
    g = GroundSet.full(4)
    first = [(p.word.letters, p.arcs.intervals) for p in enum_valid_pairs(g)]
    second = [(p.word.letters, p.arcs.intervals) for p in enum_valid_pairs(g)]
    assert first == second
