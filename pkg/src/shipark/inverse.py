"""Inverting the labeling: recover the unique valid pair of a parking function.

The algorithm peels the function level by level.  Each level finds the
center Z, s-parks the restriction into a prefix word (the first |Z|
letters of the answer), and must then decide how many of those letters to
commit before recursing.  The right amount is governed by the arcs that
cross the center boundary: committed letters are exactly those before the
first crossing arc's opener, so that no arc straddles the cut and the
renumbered residual is again the label of a smaller pair.

The cut position is recovered from the function itself.  For the letter
occupying position zeta+1 the labeling formula reads

    f(x) = i + |{letters at positions i..zeta} ∩ {1..x-1}|

with i the opener of its least covering arc (or i = zeta+1 when it is
uncovered).  Solving this window equation for every letter outside the
center and taking the smallest per-letter maximum pins the cut; naively
taking the arcs of the prefix word at face value does not survive arcs
whose truncation by the boundary is itself an inversion interval.

Arcs found at later levels are translated by the total number of letters
committed at earlier levels; the offsets compose, so one accumulator
suffices.  Every inversion re-labels its own result and raises
InternalMismatch on disagreement, turning any silent drift into a loud
error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contraction import CenterDecomposition, center, maxinv, s_park
from .errors import AlreadyCentral, InternalMismatch
from .labeling import label_intervals
from .model import GroundSet, IntervalSet, ParkingFn, ValidPair, Word, is_central


@dataclass(frozen=True)
class PeelStep:
    """One level of the peeling recursion.

    ``pivot_value`` is the least value taken outside the center and
    ``pivot_letter`` the largest element mapped there; they are the
    quantities written b and a in traces.  ``cut_position`` is the
    position in the prefix word up to which letters are committed;
    ``committed`` holds those letters and ``residual`` the renumbered
    function on the remaining domain.  ``prefix_arcs`` is the full set of
    maximal inversion intervals of the prefix; only those opening before
    the cut belong to the answer.
    """

    decomposition: CenterDecomposition
    prefix: Word
    prefix_arcs: IntervalSet
    pivot_value: int
    pivot_letter: int
    cut_position: int
    committed: GroundSet
    residual: ParkingFn

    @property
    def zeta(self) -> int:
        return self.decomposition.zeta

    @property
    def kept_arcs(self) -> IntervalSet:
        """The prefix arcs that survive the cut (openers before it)."""
        return IntervalSet(
            tuple((o, c) for o, c in self.prefix_arcs if o < self.cut_position)
        )


def _window_solutions(prefix: Word, zeta: int, x: int, fx: int) -> list[int]:
    """Positions i with i + |prefix([i, zeta]) ∩ [x-1]| = fx, plus zeta+1
    when fx = zeta+1 (the uncovered case)."""
    sols = [
        i
        for i in range(1, zeta + 1)
        if i + sum(1 for t in prefix.letters[i - 1 : zeta] if t < x) == fx
    ]
    if fx == zeta + 1:
        sols.append(zeta + 1)
    return sols


def _cut_position(f: ParkingFn, dec: CenterDecomposition, prefix: Word) -> int:
    """Smallest per-letter maximum of the window equation over A minus Z.

    The letter that actually occupies position zeta+1 satisfies the
    equation at the first crossing arc's opener, and no letter's solution
    interval tops out below it, so the minimum of the per-letter maxima
    recovers that opener (zeta+1 when nothing crosses).
    """
    zeta = dec.zeta
    cut = None
    for x in f.ground:
        if x in dec.center:
            continue
        sols = _window_solutions(prefix, zeta, x, f.value(x))
        if not sols:
            continue
        # the window count moves in unit steps, so solutions are contiguous
        assert sols == list(range(sols[0], sols[-1] + 1))
        top = sols[-1]
        if top <= zeta:
            # a maximal solution always carries a letter above x
            assert prefix.letters[top - 1] > x
        if cut is None or top < cut:
            cut = top
    # position zeta+1's own letter always solves the equation, and no
    # solution sits at 1: that would extend the center, contradicting
    # its maximality
    assert cut is not None and cut >= 2
    return cut


def peel(f: ParkingFn) -> PeelStep:
    """Peel one level off a non-central parking function.

    Raises AlreadyCentral when there is nothing outside the center; the
    caller terminates the recursion instead.
    """
    dec = center(f)
    zeta = dec.zeta
    if zeta == f.m:
        raise AlreadyCentral("the function is central; nothing to peel")
    prefix = s_park(dec.restriction)
    prefix_arcs = maxinv(prefix)

    outside = [a for a in f.ground if a not in dec.center]
    pivot_value = min(f.value(x) for x in outside)
    pivot_letter = max(x for x in outside if f.value(x) == pivot_value)

    cut = _cut_position(f, dec, prefix)

    committed = GroundSet.of(prefix.letters[: cut - 1])
    kept = [x for x in f.ground if x not in committed]
    values = []
    for x in kept:
        if x in dec.center:
            values.append(f.value(x) - sum(1 for y in committed if y < x))
        else:
            values.append(f.value(x) - cut + 1)
    residual = ParkingFn(GroundSet(tuple(kept)), tuple(values))

    # the uncommitted part of the center survives into the next center
    residual_center = center(residual).center
    assert all(x in residual_center for x in dec.center if x not in committed)

    return PeelStep(
        decomposition=dec,
        prefix=prefix,
        prefix_arcs=prefix_arcs,
        pivot_value=pivot_value,
        pivot_letter=pivot_letter,
        cut_position=cut,
        committed=committed,
        residual=residual,
    )


def invert_steps(f: ParkingFn) -> tuple[ValidPair, list[tuple[ParkingFn, PeelStep | None]]]:
    """Invert the labeling, returning the pair and one row per level.

    The final row pairs the last (central) function with None; its word is
    the s-parking of that function.
    """
    offset = 0
    letters: list[int] = []
    arcs: list[tuple[int, int]] = []
    rows: list[tuple[ParkingFn, PeelStep | None]] = []

    def append_arcs(found: IntervalSet) -> None:
        for o, c in found:
            go, gc = o + offset, c + offset
            # levels always extend the arc list in strict opener/closer order
            assert not arcs or (go > arcs[-1][0] and gc > arcs[-1][1])
            arcs.append((go, gc))

    current = f
    while not is_central(current):
        step = peel(current)
        rows.append((current, step))
        append_arcs(step.kept_arcs)
        letters.extend(step.prefix.letters[: step.cut_position - 1])
        offset += step.cut_position - 1
        current = step.residual
    tail = s_park(current)
    rows.append((current, None))
    append_arcs(maxinv(tail))
    letters.extend(tail.letters)

    pair = ValidPair(Word(f.ground, tuple(letters)), IntervalSet(tuple(arcs)))
    check = label_intervals(pair)
    if not (check.ground == f.ground and check.values == f.values):
        raise InternalMismatch(
            f"re-labeling the recovered pair gave {check} instead of {f}"
        )
    return pair, rows


def invert(f: ParkingFn) -> ValidPair:
    """The unique valid pair whose label is ``f``.

    >>> from .model import parking_from_text
    >>> str(invert(parking_from_text("341183414")))
    '843967125 1-6,3-8,6-9'
    """
    return invert_steps(f)[0]
