"""Word contraction, s-parking, maximal inversions, and centers.

These four operations tie words to central parking functions:

- ``contract`` sends a word to a central function (each letter's position
  minus the number of larger letters preceding it).
- ``s_park`` is its inverse: insert the letters of the domain in ascending
  order, each at the slot given by its value, shifting later slots right,
  like placing books on a shelf.
- ``maxinv`` extracts the maximal inversion intervals of a word; together
  with the word they form the pair whose label is the contraction.
- ``center`` finds the unique maximal subset of the domain on which a
  parking function restricts to a central one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCentral
from .model import GroundSet, IntervalSet, ParkingFn, Word, is_central


def contract(w: Word) -> ParkingFn:
    """The contraction of a word: position minus larger letters before.

    >>> str(contract(Word.of((8, 4, 3, 9, 6, 7))))
    '113414'
    >>> str(contract(Word.of((2, 4, 1, 3))))
    '1132'
    """
    values = []
    for a in w.ground:
        pos = w.position(a)
        larger_before = sum(1 for b in w.letters[: pos - 1] if b > a)
        v = pos - larger_before
        # v also counts the letters <= a among the first pos letters
        assert v == sum(1 for b in w.letters[:pos] if b <= a)
        values.append(v)
    f = ParkingFn(w.ground, tuple(values))
    assert is_central(f)
    return f


def s_park_steps(f: ParkingFn) -> list[tuple[int, ...]]:
    """All intermediate shelf states of s-parking, one per inserted letter.

    The last state is the final word.  Raises NotCentral as soon as an
    insertion slot exceeds the number of letters placed so far plus one,
    which happens exactly when ``f`` is not central.
    """
    shelf: list[int] = []
    steps: list[tuple[int, ...]] = []
    for i, (a, slot) in enumerate(zip(f.ground, f.values), start=1):
        if slot > i:
            raise NotCentral(f"cannot place {a} at slot {slot} when only {i - 1} letters are down")
        shelf.insert(slot - 1, a)
        steps.append(tuple(shelf))
    return steps


def s_park(f: ParkingFn) -> Word:
    """The s-parking of a central function; inverse of ``contract``.

    >>> str(s_park(ParkingFn(GroundSet.of({3, 4, 6, 7, 8, 9}), (1, 1, 3, 4, 1, 4))))
    '843967'
    """
    w = Word(f.ground, s_park_steps(f)[-1])
    assert contract(w) == f
    return w


def inversions(w: Word) -> list[tuple[int, int]]:
    """All inversion pairs (i, j) with i < j and w_i > w_j, in lex order."""
    ls = w.letters
    m = len(ls)
    return [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1) if ls[i - 1] > ls[j - 1]]


def maxinv(w: Word) -> IntervalSet:
    """Inversion pairs of ``w`` that are maximal under interval containment.

    >>> str(maxinv(Word.of((8, 4, 3, 9, 6, 7))))
    '1-6'
    >>> str(maxinv(Word.of((1, 2, 3))))
    '-'
    """
    pairs = inversions(w)
    maximal = [
        (o, c)
        for o, c in pairs
        if not any((po, pc) != (o, c) and po <= o and c <= pc for po, pc in pairs)
    ]
    return IntervalSet(tuple(maximal))


@dataclass(frozen=True)
class CenterDecomposition:
    """The center of a parking function and the restriction to it."""

    center: GroundSet
    restriction: ParkingFn

    @property
    def zeta(self) -> int:
        return self.center.m

    def __post_init__(self) -> None:
        assert is_central(self.restriction)


def center(f: ParkingFn) -> CenterDecomposition:
    """The maximal subset of the domain where ``f`` restricts to a central function.

    Greedy scan in ascending domain order: a joins the center when its value
    does not exceed the would-be rank.  Elements joining later are larger,
    so they never change the rank of an earlier member.  The parking
    condition forces f^{-1}(1) into the center, so it is never empty.
    """
    chosen: list[int] = []
    for a, v in zip(f.ground, f.values):
        if v <= len(chosen) + 1:
            chosen.append(a)
    subset = GroundSet(tuple(chosen))
    return CenterDecomposition(subset, f.restrict(subset))
