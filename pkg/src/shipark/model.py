"""Ground types: ground sets, words, interval systems, parking functions.

Conventions used throughout the package:

- Ground sets are finite nonempty sets of positive integers, always kept
  in ascending order.  The ambient ``n`` is never stored; only the
  relative order of the letters matters.
- Word positions and interval endpoints are 1-based everywhere,
  including in serialized form.
- All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CloserOrder,
    DescentViolated,
    DuplicateLetter,
    MissingLetter,
    NotParking,
    OpenerOrder,
    OutOfRange,
    UnknownLetter,
    ValueOutOfRange,
)


@dataclass(frozen=True)
class GroundSet:
    """A finite nonempty set of positive integers in ascending order."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("ground set must be nonempty")
        for a in self.elements:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"ground set elements must be positive integers, got {a!r}")
        for a, b in zip(self.elements, self.elements[1:]):
            if a >= b:
                raise ValueError("ground set elements must be strictly increasing")

    @classmethod
    def of(cls, items: Iterable[int]) -> "GroundSet":
        """Build a ground set from any iterable of distinct positive integers."""
        items = list(items)
        ordered = tuple(sorted(items))
        if len(set(ordered)) != len(items):
            raise ValueError("ground set elements must be distinct")
        return cls(ordered)

    @classmethod
    def full(cls, n: int) -> "GroundSet":
        """The ground set {1, ..., n}."""
        return cls(tuple(range(1, n + 1)))

    @property
    def m(self) -> int:
        return len(self.elements)

    def rank(self, a: int) -> int:
        """1-based rank of ``a`` within the set (a_i has rank i)."""
        return self.elements.index(a) + 1

    def __contains__(self, a: object) -> bool:
        return a in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _check_letters(ground: GroundSet, letters: Sequence[int]) -> None:
    seen: set[int] = set()
    for a in letters:
        if a not in ground:
            raise UnknownLetter(f"letter {a} is not in the ground set {list(ground)}")
        if a in seen:
            raise DuplicateLetter(f"letter {a} occurs more than once")
        seen.add(a)
    if len(seen) < ground.m:
        missing = next(a for a in ground if a not in seen)
        raise MissingLetter(f"letter {missing} does not occur")


@dataclass(frozen=True)
class Word:
    """An arrangement of all elements of a ground set in some order."""

    ground: GroundSet
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_letters(self.ground, self.letters)

    @classmethod
    def of(cls, letters: Iterable[int]) -> "Word":
        """Build a word whose ground set is inferred from its letters."""
        letters = tuple(letters)
        return cls(GroundSet.of(letters), letters)

    @property
    def m(self) -> int:
        return len(self.letters)

    def position(self, a: int) -> int:
        """1-based position of letter ``a`` (the inverse word)."""
        return self.letters.index(a) + 1

    def subword(self, i: int, j: int) -> "Word":
        """The word formed by letters at positions i..j inclusive (1-based)."""
        if not (1 <= i <= j <= self.m):
            raise ValueError(f"bad subword range [{i},{j}] for length {self.m}")
        return Word.of(self.letters[i - 1 : j])

    def letter_set(self, i: int, j: int) -> frozenset[int]:
        """The set of letters occupying positions i..j inclusive."""
        return frozenset(self.letters[i - 1 : j])

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return compact_ints(self.letters)


def validate_word(ground: GroundSet | Iterable[int], letters: Sequence[int]) -> Word:
    """Check that ``letters`` is a permutation of ``ground`` and wrap it.

    Raises UnknownLetter, DuplicateLetter or MissingLetter on the first
    violation encountered in a left-to-right scan.
    """
    if not isinstance(ground, GroundSet):
        ground = GroundSet.of(ground)
    return Word(ground, tuple(letters))


@dataclass(frozen=True)
class IntervalSet:
    """Position intervals [o_i, c_i] with strictly increasing openers and closers."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for o, c in self.intervals:
            if o < 1 or c <= o:
                raise OutOfRange(f"interval [{o},{c}] must satisfy 1 <= opener < closer")
        for (o1, _), (o2, _) in zip(self.intervals, self.intervals[1:]):
            if o1 >= o2:
                raise OpenerOrder(f"openers must be strictly increasing, got {o1} then {o2}")
        for (_, c1), (_, c2) in zip(self.intervals, self.intervals[1:]):
            if c1 >= c2:
                raise CloserOrder(f"closers must be strictly increasing, got {c1} then {c2}")

    @classmethod
    def of(cls, intervals: Iterable[Sequence[int]]) -> "IntervalSet":
        return cls(tuple((int(o), int(c)) for o, c in intervals))

    def shifted(self, offset: int) -> "IntervalSet":
        return IntervalSet(tuple((o + offset, c + offset) for o, c in self.intervals))

    def cover(self, j: int) -> tuple[int, int] | None:
        """The least interval covering position j, or None."""
        for o, c in self.intervals:
            if o <= j <= c:
                return (o, c)
        return None

    def covers_both(self, j: int, k: int) -> bool:
        """Whether some single interval contains both positions."""
        lo, hi = min(j, k), max(j, k)
        return any(o <= lo and hi <= c for o, c in self.intervals)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __str__(self) -> str:
        return intervals_to_text(self)


@dataclass(frozen=True)
class ValidPair:
    """A word together with an interval system whose arcs all descend.

    The arcs must fit inside the word and every arc's opening letter must
    exceed its closing letter.
    """

    word: Word
    arcs: IntervalSet

    def __post_init__(self) -> None:
        m = self.word.m
        for o, c in self.arcs:
            if c > m:
                raise OutOfRange(f"interval [{o},{c}] exceeds word length {m}")
            if self.word.letters[o - 1] <= self.word.letters[c - 1]:
                raise DescentViolated(
                    f"interval [{o},{c}]: letter {self.word.letters[o - 1]} "
                    f"does not exceed letter {self.word.letters[c - 1]}"
                )

    @property
    def ground(self) -> GroundSet:
        return self.word.ground

    def __str__(self) -> str:
        return f"{self.word} {self.arcs}" if self.arcs else f"{self.word} -"


def validate_pair(word: Word, intervals: Iterable[Sequence[int]]) -> ValidPair:
    """Build a ValidPair from a word and raw interval endpoints."""
    return ValidPair(word, IntervalSet.of(intervals))


@dataclass(frozen=True, eq=False)
class ParkingFn:
    """A function f: A -> [m] with at least j values in {1..j} for every j.

    ``values`` is parallel to the ascending domain, so ``values[i]`` is the
    value taken at the (i+1)-st smallest element.
    """

    ground: GroundSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.ground.m
        if len(self.values) != m:
            raise ValueError(f"expected {m} values, got {len(self.values)}")
        for v in self.values:
            if not isinstance(v, int) or not (1 <= v <= m):
                raise ValueOutOfRange(f"value {v!r} outside 1..{m}")
        ordered = sorted(self.values)
        for j, v in enumerate(ordered, start=1):
            if v > j:
                raise NotParking(
                    f"only {j - 1} values lie in 1..{j}: {dict(zip(self.ground, self.values))}"
                )

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "ParkingFn":
        ground = GroundSet.of(mapping.keys())
        return cls(ground, tuple(mapping[a] for a in ground))

    @property
    def m(self) -> int:
        return self.ground.m

    def value(self, a: int) -> int:
        return self.values[self.ground.rank(a) - 1]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.ground, self.values))

    def preimage(self, v: int) -> tuple[int, ...]:
        return tuple(a for a, x in zip(self.ground, self.values) if x == v)

    def restrict(self, subset: GroundSet) -> "ParkingFn":
        """Restriction to a subset of the domain (must itself be parking)."""
        return ParkingFn(subset, tuple(self.value(a) for a in subset))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParkingFn):
            return NotImplemented
        return self.ground == other.ground and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.ground.elements, self.values))

    def __str__(self) -> str:
        return compact_ints(self.values)


@dataclass(frozen=True, eq=False)
class Label(ParkingFn):
    """A parking function produced by labeling, remembering its pair."""

    source: "ValidPair | None" = field(default=None, compare=False)


def is_parking(f: Mapping[int, int] | ParkingFn) -> bool:
    """Whether a finite map into [m] satisfies the parking condition.

    Raises ValueOutOfRange when some value falls outside 1..m; otherwise
    answers the condition itself as a boolean.
    """
    if isinstance(f, ParkingFn):
        return True
    values = [f[a] for a in sorted(f.keys())]
    m = len(values)
    for v in values:
        if not isinstance(v, int) or not (1 <= v <= m):
            raise ValueOutOfRange(f"value {v!r} outside 1..{m}")
    ordered = sorted(values)
    return all(v <= j for j, v in enumerate(ordered, start=1))


def is_central(f: ParkingFn) -> bool:
    """Whether f(a_j) <= j for the ascending enumeration a_1 < ... < a_m."""
    return all(v <= j for j, v in enumerate(f.values, start=1))


# -- serialization ------------------------------------------------------------
#
# JSON forms (canonical: compact separators, fixed key order):
#   ValidPair   {"word":[8,4,3,9,6,7,1,2,5],"intervals":[[1,6],[3,8],[6,9]]}
#   ParkingFn   {"domain":[3,4,6,7,8,9],"values":[1,1,3,4,1,4]}
#
# Compact text forms (single-digit letters/values only):
#   word        "843967125"
#   function    "341183414"   (values in ascending-domain order)
#   intervals   "1-6,3-8,6-9" (or "-" for the empty system)


def _dumps(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def compact_ints(seq: Sequence[int]) -> str:
    """Digits concatenated when all entries are single digits, else space-joined."""
    if all(0 <= x <= 9 for x in seq):
        return "".join(str(x) for x in seq)
    return " ".join(str(x) for x in seq)


def parse_compact_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        raise ValueError("empty sequence")
    if any(sep in text for sep in (" ", ",")):
        parts = text.replace(",", " ").split()
        return tuple(int(p) for p in parts)
    return tuple(int(ch) for ch in text)


def word_to_dict(w: Word) -> dict:
    return {"word": list(w.letters)}


def word_from_dict(data: Mapping) -> Word:
    return Word.of(data["word"])


def intervals_to_list(arcs: IntervalSet) -> list[list[int]]:
    return [[o, c] for o, c in arcs]


def pair_to_dict(p: ValidPair) -> dict:
    return {"word": list(p.word.letters), "intervals": intervals_to_list(p.arcs)}


def pair_from_dict(data: Mapping) -> ValidPair:
    word = Word.of(data["word"])
    return validate_pair(word, data.get("intervals", []))


def parking_to_dict(f: ParkingFn) -> dict:
    return {"domain": list(f.ground), "values": list(f.values)}


def parking_from_dict(data: Mapping) -> ParkingFn:
    ground = GroundSet.of(data["domain"])
    return ParkingFn(ground, tuple(int(v) for v in data["values"]))


def pair_to_json(p: ValidPair) -> str:
    return _dumps(pair_to_dict(p))


def pair_from_json(text: str) -> ValidPair:
    return pair_from_dict(json.loads(text))


def parking_to_json(f: ParkingFn) -> str:
    return _dumps(parking_to_dict(f))


def parking_from_json(text: str) -> ParkingFn:
    return parking_from_dict(json.loads(text))


def word_from_text(text: str, domain: Iterable[int] | None = None) -> Word:
    """Parse a compact word like "843967125" (or space-separated letters)."""
    letters = parse_compact_ints(text)
    if domain is None:
        return Word.of(letters)
    return validate_word(GroundSet.of(domain), letters)


def parking_from_text(text: str, domain: Iterable[int] | None = None) -> ParkingFn:
    """Parse a compact function like "341183414".

    Without an explicit domain the values are read over {1, ..., m}.
    """
    values = parse_compact_ints(text)
    ground = GroundSet.full(len(values)) if domain is None else GroundSet.of(domain)
    return ParkingFn(ground, values)


def intervals_from_text(text: str) -> list[tuple[int, int]]:
    """Parse an interval list like "1-6,3-8,6-9"; "-" or "" mean empty."""
    text = text.strip()
    if text in ("", "-"):
        return []
    out = []
    for part in text.split(","):
        lo, _, hi = part.partition("-")
        out.append((int(lo), int(hi)))
    return out


def intervals_to_text(arcs: IntervalSet) -> str:
    if not arcs:
        return "-"
    return ",".join(f"{o}-{c}" for o, c in arcs)
