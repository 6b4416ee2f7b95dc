"""The bridge between regions as points and their combinatorial codes.

A point of R^n off every hyperplane x_i = x_j and x_i - x_j = 1 sorts
its coordinates into a word, and the maximal runs of coordinates packed
within less than one unit give the arc system: that is ``pair_of_point``.
``representative_point`` goes the other way by solving the region's
difference constraints with single-source shortest paths, and
``label_geometric`` labels a pair a third way by counting the hyperplanes
separating its representative point from the base region.

Everything is exact rational arithmetic.  Strict inequalities with unit
offsets are adversarial for floats, and at these sizes fractions are
cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .contraction import inversions
from .errors import Infeasible, OnHyperplane
from .model import GroundSet, IntervalSet, Label, ValidPair, Word


@dataclass(frozen=True)
class RationalPoint:
    """An exact-rational point lying off every hyperplane of the arrangement."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = len(self.coords)
        if n < 1:
            raise ValueError("a point needs at least one coordinate")
        for i in range(n):
            for j in range(i + 1, n):
                diff = self.coords[i] - self.coords[j]
                if diff == 0:
                    raise OnHyperplane(f"x_{i + 1} = x_{j + 1}")
                if diff == 1:
                    raise OnHyperplane(f"x_{i + 1} - x_{j + 1} = 1")

    @property
    def n(self) -> int:
        return len(self.coords)

    def to_list(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), separators=(",", ":"))


def rational_point(values: Iterable) -> RationalPoint:
    """Build a point from ints, strings like "3/4", or Fractions."""
    return RationalPoint(tuple(Fraction(v) for v in values))


def point_from_json(text: str) -> RationalPoint:
    return rational_point(json.loads(text))


@dataclass(frozen=True)
class ConstraintSystem:
    """Difference constraints carving out the open region of a valid pair.

    With d_j standing for the coordinate at sorted position j:
    order constraints force d_{j+1} - d_j >= slack, close pairs (j, k)
    force d_k - d_j <= 1 - slack, far pairs force d_k - d_j >= 1 + slack.
    Every inversion pair of the word lands in exactly one of close/far.
    """

    size: int
    order: tuple[tuple[int, int], ...]
    close: tuple[tuple[int, int], ...]
    far: tuple[tuple[int, int], ...]
    slack: Fraction

    def __post_init__(self) -> None:
        if self.slack <= 0:
            raise ValueError("slack must be positive")
        if set(self.close) & set(self.far):
            raise ValueError("close and far constraints overlap")

    def edges(self) -> list[tuple[int, int, Fraction]]:
        """(u, v, w) edges encoding d_v - d_u <= w, nodes 1..size."""
        out: list[tuple[int, int, Fraction]] = []
        for j, k in self.order:
            out.append((k, j, -self.slack))
        for j, k in self.close:
            out.append((j, k, 1 - self.slack))
        for j, k in self.far:
            out.append((k, j, -1 - self.slack))
        return out


def constraint_system(p: ValidPair, slack: Fraction | None = None) -> ConstraintSystem:
    """The constraint system of a valid pair, with slack 1/(2m) by default."""
    m = p.word.m
    if slack is None:
        slack = Fraction(1, 2 * m)
    close: list[tuple[int, int]] = []
    far: list[tuple[int, int]] = []
    for j, k in inversions(p.word):
        if p.arcs.covers_both(j, k):
            close.append((j, k))
        else:
            far.append((j, k))
    order = tuple((j, j + 1) for j in range(1, m))
    return ConstraintSystem(m, order, tuple(close), tuple(far), slack)


def solve_difference_constraints(cs: ConstraintSystem) -> list[Fraction]:
    """Shortest paths from a virtual source; Infeasible on a negative cycle.

    Starting every node at distance zero is equivalent to adding a source
    with zero-weight edges to all nodes.  After ``size`` relaxation rounds
    any further improvement certifies a negative cycle.
    """
    dist = [Fraction(0)] * (cs.size + 1)
    edges = cs.edges()
    for _ in range(cs.size):
        changed = False
        for u, v, w in edges:
            cand = dist[u] + w
            if cand < dist[v]:
                dist[v] = cand
                changed = True
        if not changed:
            break
    else:
        for u, v, w in edges:
            if dist[u] + w < dist[v]:
                raise Infeasible("difference constraints contain a negative cycle")
    return dist[1:]


def representative_point(p: ValidPair, ambient_n: int | None = None) -> RationalPoint:
    """An exact interior point of the region encoded by ``p``.

    Defined for full ground sets {1..n} only; arc systems over proper
    subsets are combinatorial objects without a region of their own.
    """
    m = p.word.m
    if ambient_n is None:
        ambient_n = m
    if p.word.ground != GroundSet.full(ambient_n):
        raise ValueError(
            f"representative points need the full ground set 1..{ambient_n}, "
            f"got {list(p.word.ground)}"
        )
    cs = constraint_system(p)
    positions = solve_difference_constraints(cs)
    coords = [Fraction(0)] * ambient_n
    for j, letter in enumerate(p.word.letters, start=1):
        coords[letter - 1] = positions[j - 1]
    return RationalPoint(tuple(coords))


def pair_of_point(x: RationalPoint) -> ValidPair:
    """The valid pair of the region containing ``x``.

    The word sorts coordinates ascending; the arcs are the maximal
    inversion pairs whose two coordinates differ by less than one.  Any
    inversion pair inside such an arc is automatically that close too,
    which is asserted during extraction.
    """
    n = x.n
    order = sorted(range(1, n + 1), key=lambda i: x.coords[i - 1])
    w = Word(GroundSet.full(n), tuple(order))

    def is_close(j: int, k: int) -> bool:
        return x.coords[w.letters[k - 1] - 1] - x.coords[w.letters[j - 1] - 1] < 1

    close_pairs = [(j, k) for j, k in inversions(w) if is_close(j, k)]
    maximal = [
        (o, c)
        for o, c in close_pairs
        if not any((po, pc) != (o, c) and po <= o and c <= pc for po, pc in close_pairs)
    ]
    for o, c in maximal:
        assert all(
            is_close(j, k) for j, k in inversions(w) if o <= j and k <= c
        ), "closeness is not downward closed"
    return ValidPair(w, IntervalSet(tuple(maximal)))


def label_geometric(p: ValidPair, ambient_n: int | None = None) -> Label:
    """Label a pair by counting hyperplanes separating it from the base region.

    For coordinate i the value is one plus the number of a < i with
    x_a < x_i plus the number of b > i with x_i - x_b > 1.
    """
    x = representative_point(p, ambient_n)
    n = x.n
    values = []
    for i in range(1, n + 1):
        below = sum(1 for a in range(1, i) if x.coords[a - 1] < x.coords[i - 1])
        far = sum(1 for b in range(i + 1, n + 1) if x.coords[i - 1] - x.coords[b - 1] > 1)
        values.append(1 + below + far)
    return Label(GroundSet.full(n), tuple(values), source=p)
