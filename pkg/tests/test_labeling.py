"""The two labeling formulas, the opener table, and their invariants."""

import random

import pytest

from shipark.contraction import contract, maxinv
from shipark.enumeration import enum_interval_sets, enum_valid_pairs, enum_words
from shipark.labeling import label_direct, label_intervals, opener_table
from shipark.model import (
    GroundSet,
    ValidPair,
    Word,
    is_parking,
    parking_from_text,
    validate_pair,
    word_from_text,
)

EX_PAIR = lambda: validate_pair(word_from_text("843967125"), [(1, 6), (3, 8), (6, 9)])


def random_pair(rng: random.Random, ground: GroundSet) -> ValidPair:
    """A uniform word with a random greedy arc system."""
    letters = list(ground.elements)
    rng.shuffle(letters)
    w = Word(ground, tuple(letters))
    arcs = []
    last_o = last_c = 0
    pairs = [
        (i, j)
        for i in range(1, w.m + 1)
        for j in range(i + 1, w.m + 1)
        if w.letters[i - 1] > w.letters[j - 1]
    ]
    for o, c in pairs:
        if o > last_o and c > last_c and rng.random() < 0.4:
            arcs.append((o, c))
            last_o, last_c = o, c
    return validate_pair(w, arcs)


class TestLabelDirect:
    def test_worked_example(self):
        assert str(label_direct(EX_PAIR())) == "341183414"

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
    def test_base_region_all_ones(self, n):
        p = validate_pair(Word.of(range(n, 0, -1)), [(1, n)] if n > 1 else [])
        assert label_direct(p).values == (1,) * n

    def test_figure_triple(self):
        p = validate_pair(word_from_text("321"), [(1, 2), (2, 3)])
        assert label_direct(p).as_dict() == {1: 2, 2: 1, 3: 1}


class TestLabelIntervals:
    def test_worked_example(self):
        assert str(label_intervals(EX_PAIR())) == "341183414"

    def test_restricted_domain_example(self):
        p = validate_pair(
            word_from_text("3967125", domain=(1, 2, 3, 5, 6, 7, 9)), [(1, 6), (4, 7)]
        )
        assert label_intervals(p).as_dict() == {1: 1, 2: 2, 3: 1, 5: 6, 6: 2, 7: 3, 9: 2}

    def test_segment_contractions(self):
        w = word_from_text("843967125")
        assert str(contract(w.subword(1, 6))) == "113414"
        assert str(contract(w.subword(3, 8))) == "121232"
        assert str(contract(w.subword(6, 9))) == "1231"

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_no_arcs_gives_positions(self, n):
        for w in enum_words(GroundSet.full(n)):
            lab = label_intervals(validate_pair(w, []))
            assert all(lab.value(w.letters[j - 1]) == j for j in range(1, n + 1))


class TestOpenerTable:
    def test_worked_example(self):
        assert opener_table(EX_PAIR()).openers == (1, 1, 1, 1, 1, 1, 3, 3, 6)

    def test_no_arcs_identity(self):
        p = validate_pair(word_from_text("531"), [])
        assert opener_table(p).openers == (1, 2, 3)

    def test_small_figure_pair(self):
        p = validate_pair(word_from_text("321"), [(1, 2), (2, 3)])
        assert opener_table(p).openers == (1, 1, 2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_monotone(self, n):
        for p in enum_valid_pairs(GroundSet.full(n)):
            table = opener_table(p).openers
            assert all(x <= y for x, y in zip(table, table[1:]))


class TestAgreementAndInvariants:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_formulas_agree_exhaustive(self, n):
        for p in enum_valid_pairs(GroundSet.full(n)):
            a = label_direct(p)
            b = label_intervals(p)
            assert a.values == b.values
            assert is_parking(a.as_dict())
            _check_value_monotonicity(p, a)

    def test_formulas_agree_randomized(self):
        rng = random.Random(40917)
        for _ in range(300):
            n = rng.randint(6, 9)
            p = random_pair(rng, GroundSet.full(n))
            assert label_direct(p).values == label_intervals(p).values

    def test_formulas_agree_on_subset_domains(self):
        rng = random.Random(555)
        for _ in range(200):
            m = rng.randint(2, 8)
            ground = GroundSet.of(sorted(rng.sample(range(1, 25), m)))
            p = random_pair(rng, ground)
            a, b = label_direct(p), label_intervals(p)
            assert a.values == b.values
            _check_value_monotonicity(p, a)

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
    def test_central_fixed_point(self, m):
        for w in enum_words(GroundSet.full(m)):
            lab = label_intervals(ValidPair(w, maxinv(w)))
            assert lab == contract(w)

    def test_central_fixed_point_sparse(self):
        g = GroundSet.of((2, 4, 9, 11))
        for w in enum_words(g):
            assert label_intervals(ValidPair(w, maxinv(w))) == contract(w)


def _check_value_monotonicity(p: ValidPair, lab) -> None:
    # an earlier larger letter gets a strictly smaller value, unless the
    # two positions sit inside a common arc (then no order is promised:
    # already the 341183414 example has f(9) > f(6) with 9 before 6)
    ls = p.word.letters
    for k in range(len(ls)):
        for l in range(k + 1, len(ls)):
            if ls[k] > ls[l] and not p.arcs.covers_both(k + 1, l + 1):
                assert lab.value(ls[k]) < lab.value(ls[l])


def test_label_count_matches_pair_count():
    for n in (2, 3, 4):
        labels = {label_intervals(p).values for p in enum_valid_pairs(GroundSet.full(n))}
        assert len(labels) == (n + 1) ** (n - 1)


def test_all_interval_families_label_to_parking():
    f = parking_from_text("221")
    assert is_parking(f.as_dict())
    for w in enum_words(GroundSet.full(4)):
        for arcs in enum_interval_sets(w):
            label_intervals(ValidPair(w, arcs))  # Label construction validates
