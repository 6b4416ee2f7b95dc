"""The region labeling: valid pairs to parking functions, two ways.

``label_direct`` counts, for the letter at position j, the earlier smaller
letters plus the earlier larger letters not sharing a covering interval
with j.  ``label_intervals`` instead reads the value off the contraction
of the least interval covering j (or just j when uncovered).  The two are
provably equal; both are kept and cross-checked in tests because the
double condition in the counting form is easy to misread.

``label_intervals`` is the production path used by the inverse machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contraction import contract
from .model import Label, ValidPair


@dataclass(frozen=True)
class OpenerTable:
    """Per position j, the opener of the least interval covering j, else j."""

    openers: tuple[int, ...]

    def at(self, j: int) -> int:
        return self.openers[j - 1]


def opener_table(p: ValidPair) -> OpenerTable:
    out = []
    for j in range(1, p.word.m + 1):
        covering = p.arcs.cover(j)
        out.append(covering[0] if covering else j)
    return OpenerTable(tuple(out))


def label_direct(p: ValidPair) -> Label:
    """Label by counting separations position by position."""
    w = p.word
    ls = w.letters
    by_letter: dict[int, int] = {}
    for j in range(1, w.m + 1):
        i = ls[j - 1]
        below = sum(1 for k in range(1, j) if ls[k - 1] < i)
        far = sum(
            1
            for k in range(1, j)
            if ls[k - 1] > i and not p.arcs.covers_both(k, j)
        )
        by_letter[i] = 1 + below + far
    return Label(w.ground, tuple(by_letter[a] for a in w.ground), source=p)


def label_intervals(p: ValidPair) -> Label:
    """Label via contractions of covering-interval segments."""
    w = p.word
    by_letter: dict[int, int] = {}
    segments: dict[tuple[int, int], object] = {}
    for j in range(1, w.m + 1):
        i = w.letters[j - 1]
        covering = p.arcs.cover(j)
        if covering is None:
            by_letter[i] = j
            continue
        o, c = covering
        if covering not in segments:
            segments[covering] = contract(w.subword(o, c))
        by_letter[i] = o - 1 + segments[covering].value(i)
    return Label(w.ground, tuple(by_letter[a] for a in w.ground), source=p)
