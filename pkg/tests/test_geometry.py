"""Points, difference constraints, and the geometric labeling."""

import random
from fractions import Fraction

import pytest

from shipark.contraction import inversions
from shipark.enumeration import enum_valid_pairs
from shipark.errors import OnHyperplane
from shipark.geometry import (
    constraint_system,
    label_geometric,
    pair_of_point,
    point_from_json,
    rational_point,
    representative_point,
    solve_difference_constraints,
)
from shipark.labeling import label_direct, label_intervals
from shipark.model import GroundSet, Word, validate_pair, word_from_text
from test_labeling import random_pair

EX_PAIR = lambda: validate_pair(word_from_text("843967125"), [(1, 6), (3, 8), (6, 9)])


class TestRationalPoint:
    def test_equal_coordinates_rejected(self):
        with pytest.raises(OnHyperplane):
            rational_point([1, 1, 2])

    def test_unit_difference_rejected(self):
        with pytest.raises(OnHyperplane):
            rational_point(["3/2", "1/2"])

    def test_json_round_trip(self):
        x = rational_point(["1/3", "-5/2", "0"])
        assert point_from_json(x.to_json()).coords == x.coords


class TestPairOfPoint:
    @pytest.mark.parametrize("n", [2, 3, 5, 7])
    def test_packed_descending_point_is_base_region(self, n):
        x = rational_point([Fraction(n - i, n) for i in range(1, n + 1)])
        p = pair_of_point(x)
        assert p.word.letters == tuple(range(n, 0, -1))
        assert p.arcs.intervals == ((1, n),)

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_spread_increasing_point_has_no_arcs(self, n):
        x = rational_point([2 * i for i in range(1, n + 1)])
        p = pair_of_point(x)
        assert p.word.letters == tuple(range(1, n + 1))
        assert not p.arcs

    def test_hand_built_point_for_worked_example(self):
        # coordinates chosen directly from the region's inequalities
        coords = ["38/25", "77/50", "11/20", "1/2", "9/5", "13/20", "9/10", "0", "3/5"]
        assert pair_of_point(rational_point(coords)) == EX_PAIR()


class TestRepresentativePoint:
    def test_base_region_constraints(self):
        for n in (2, 3, 4, 5):
            p = validate_pair(Word.of(range(n, 0, -1)), [(1, n)])
            x = representative_point(p)
            for i in range(n):
                for j in range(i + 1, n):
                    assert 0 < x.coords[i] - x.coords[j] < 1

    def test_worked_example_inequalities(self):
        x = representative_point(EX_PAIR())
        c = x.coords
        order = [8, 4, 3, 9, 6, 7, 1, 2, 5]
        for a, b in zip(order, order[1:]):
            assert c[a - 1] < c[b - 1]
        assert c[8 - 1] + 1 > c[7 - 1]
        assert c[3 - 1] + 1 > c[2 - 1]
        assert c[7 - 1] + 1 > c[5 - 1]
        assert c[4 - 1] + 1 < c[1 - 1]
        assert c[6 - 1] + 1 < c[5 - 1]
        assert c[8 - 1] + 1 > c[6 - 1]
        assert c[8 - 1] + 1 < c[1 - 1]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_point_round_trip_exhaustive(self, n):
        for p in enum_valid_pairs(GroundSet.full(n)):
            assert pair_of_point(representative_point(p)) == p

    def test_requires_full_ground_set(self):
        p = validate_pair(word_from_text("31", domain=(1, 3)), [])
        with pytest.raises(ValueError):
            representative_point(p)


class TestConstraintSystem:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_every_inversion_in_exactly_one_bucket(self, n):
        for p in enum_valid_pairs(GroundSet.full(n)):
            cs = constraint_system(p)
            inv = set(inversions(p.word))
            assert set(cs.close) | set(cs.far) == inv
            assert not (set(cs.close) & set(cs.far))

    def test_default_slack(self):
        cs = constraint_system(EX_PAIR())
        assert cs.slack == Fraction(1, 18)

    def test_solver_is_translation_free_feasible(self):
        cs = constraint_system(EX_PAIR())
        positions = solve_difference_constraints(cs)
        for j, k in cs.order:
            assert positions[k - 1] - positions[j - 1] >= cs.slack
        for j, k in cs.close:
            assert positions[k - 1] - positions[j - 1] <= 1 - cs.slack
        for j, k in cs.far:
            assert positions[k - 1] - positions[j - 1] >= 1 + cs.slack


class TestLabelGeometric:
    def test_worked_example(self):
        assert str(label_geometric(EX_PAIR())) == "341183414"

    def test_base_region_all_ones(self):
        p = validate_pair(word_from_text("4321"), [(1, 4)])
        assert label_geometric(p).values == (1, 1, 1, 1)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_identity_word_no_arcs(self, n):
        p = validate_pair(Word.of(range(1, n + 1)), [])
        assert label_geometric(p).values == tuple(range(1, n + 1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_triple_agreement_exhaustive(self, n):
        for p in enum_valid_pairs(GroundSet.full(n)):
            geo = label_geometric(p)
            assert geo.values == label_direct(p).values == label_intervals(p).values

    def test_triple_agreement_randomized(self):
        rng = random.Random(90125)
        for _ in range(60):
            n = rng.randint(5, 7)
            p = random_pair(rng, GroundSet.full(n))
            assert label_geometric(p).values == label_direct(p).values


def _separations(x, y):
    """Hyperplanes with x and y strictly on opposite sides."""
    n = len(x)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            di = x[i - 1] - x[j - 1]
            dj = y[i - 1] - y[j - 1]
            if (di > 0) != (dj > 0):
                out.append(("eq", i, j))
            if (di > 1) != (dj > 1):
                out.append(("unit", i, j))
    return out


def test_single_crossing_steps_labels_by_one_unit():
    """Crossing one hyperplane changes the label in exactly one coordinate.

    Crossing x_i = x_j away from the base region's side bumps coordinate j;
    crossing x_i - x_j = 1 away from it bumps coordinate i.
    """
    n = 3
    base = [Fraction(n - i, n) for i in range(1, n + 1)]  # inside the base region
    pairs = list(enum_valid_pairs(GroundSet.full(n)))
    points = {p: representative_point(p).coords for p in pairs}
    adjacent = 0
    for p in pairs:
        for q in pairs:
            if p == q:
                continue
            seps = _separations(points[p], points[q])
            if len(seps) != 1:
                continue
            adjacent += 1
            kind, i, j = seps[0]
            xp, xq = points[p], points[q]
            fp = label_direct(p).values
            fq = label_direct(q).values
            if kind == "eq":
                p_with_base = (xp[i - 1] - xp[j - 1] > 0) == (base[i - 1] - base[j - 1] > 0)
                low, high = (fp, fq) if p_with_base else (fq, fp)
                bumped = j
            else:
                p_with_base = (xp[i - 1] - xp[j - 1] > 1) == (base[i - 1] - base[j - 1] > 1)
                low, high = (fp, fq) if p_with_base else (fq, fp)
                bumped = i
            diff = [h - l for h, l in zip(high, low)]
            assert diff == [1 if k == bumped else 0 for k in range(1, n + 1)]
    assert adjacent > 0
