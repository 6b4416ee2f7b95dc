"""Exhaustive generation of words, arc systems, and parking functions,
plus whole-universe verification that labeling is a bijection.

Generators are deterministic (lexicographic) so that any reported failure
is reproducible across runs and platforms.  ``verify_bijection`` drives
the array kernels from ``_kernels`` over the full set of words for
{1..n}, splitting the word stream across a thread pool when asked; the
compiled kernels release the GIL, so threads give real parallelism.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .contraction import inversions
from .model import GroundSet, IntervalSet, ParkingFn, ValidPair, Word

#: hard cap for verify_bijection; the label table needs n**n bytes per worker
MAX_VERIFY_N = 8

#: number of example entries kept per failure list in a report
_REPORT_CAP = 256


def expected_region_count(n: int) -> int:
    """(n+1)**(n-1), the number of regions and of parking functions."""
    return (n + 1) ** (n - 1)


def enum_words(ground: GroundSet) -> Iterator[Word]:
    """All m! words over the ground set, lexicographic by letter sequence."""
    for perm in itertools.permutations(ground.elements):
        yield Word(ground, perm)


def enum_interval_sets(w: Word) -> Iterator[IntervalSet]:
    """Every arc system forming a valid pair with ``w``, the empty one first.

    Backtracking over inversion pairs in lex order; an arc may extend the
    current system only with a strictly larger opener and closer, so each
    system appears exactly once.
    """
    pairs = inversions(w)
    chosen: list[tuple[int, int]] = []

    def walk(start: int, last_o: int, last_c: int) -> Iterator[IntervalSet]:
        yield IntervalSet(tuple(chosen))
        for t in range(start, len(pairs)):
            o, c = pairs[t]
            if o > last_o and c > last_c:
                chosen.append((o, c))
                yield from walk(t + 1, o, c)
                chosen.pop()

    return walk(0, 0, 0)


def enum_valid_pairs(ground: GroundSet) -> Iterator[ValidPair]:
    """All valid pairs over the ground set, grouped by word."""
    for w in enum_words(ground):
        for arcs in enum_interval_sets(w):
            yield ValidPair(w, arcs)


def enum_parking_functions(ground: GroundSet) -> Iterator[ParkingFn]:
    """All parking functions on the ground set, lexicographic by value tuple."""
    m = ground.m
    for values in itertools.product(range(1, m + 1), repeat=m):
        ordered = sorted(values)
        if all(v <= j for j, v in enumerate(ordered, start=1)):
            yield ParkingFn(ground, values)


def enum_central_functions(ground: GroundSet) -> Iterator[ParkingFn]:
    """All central functions: the j-th value ranges over 1..j."""
    m = ground.m
    for values in itertools.product(*(range(1, j + 1) for j in range(1, m + 1))):
        yield ParkingFn(ground, values)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one whole-universe verification run.

    The three ``*_count`` totals are exact; the example lists are capped
    at a few hundred entries each (they are expected to stay empty).
    """

    n: int
    pair_count: int
    parking_count: int
    expected: int
    label_collisions: tuple[dict, ...]
    roundtrip_failures: tuple[dict, ...]
    missed_functions: tuple[dict, ...]
    collision_count: int
    failure_count: int
    missed_count: int
    elapsed: float

    @property
    def success(self) -> bool:
        return (
            self.pair_count == self.expected
            and self.parking_count == self.expected
            and self.collision_count == 0
            and self.failure_count == 0
            and self.missed_count == 0
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pair_count": self.pair_count,
            "parking_count": self.parking_count,
            "expected": self.expected,
            "label_collisions": list(self.label_collisions),
            "roundtrip_failures": list(self.roundtrip_failures),
            "missed_functions": list(self.missed_functions),
            "collision_count": self.collision_count,
            "failure_count": self.failure_count,
            "missed_count": self.missed_count,
            "elapsed": self.elapsed,
            "success": self.success,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def resolve_jobs(jobs: int | None) -> int:
    """Explicit argument, else the SHIPARK_JOBS environment variable, else 1."""
    if jobs is None:
        env = os.environ.get("SHIPARK_JOBS", "").strip()
        jobs = int(env) if env else 1
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    return jobs


def _fn_dict(code: int, n: int) -> dict:
    return {"domain": list(range(1, n + 1)), "values": list(_kernels.decode_values(code, n))}


def verify_bijection(n: int, jobs: int | None = None) -> VerificationReport:
    """Label every valid pair for {1..n} and check bijectivity end to end.

    Checks that labels are pairwise distinct, that every parking function
    occurs, and that re-inverting every label returns exactly the pair it
    came from.  Failures are collected in the report, never raised.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > MAX_VERIFY_N:
        raise ValueError(
            f"n={n} exceeds the supported bound {MAX_VERIFY_N} "
            f"(the label table alone would need {n}**{n} bytes per worker)"
        )
    jobs = resolve_jobs(jobs)
    start = time.perf_counter()

    words = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    size = n**n

    def run(lo: int, hi: int):
        seen = np.zeros(size, dtype=np.uint8)
        coll = np.empty(_REPORT_CAP, dtype=np.int64)
        fidx = np.empty(_REPORT_CAP, dtype=np.int64)
        fcode = np.empty(_REPORT_CAP, dtype=np.int64)
        pair_count, n_coll, n_fail = _kernels.verify_chunk(words[lo:hi], seen, coll, fidx, fcode)
        kc = min(n_coll, _REPORT_CAP)
        kf = min(n_fail, _REPORT_CAP)
        return (
            seen,
            pair_count,
            n_coll,
            coll[:kc].copy(),
            n_fail,
            (fidx[:kf] + lo).copy(),
            fcode[:kf].copy(),
        )

    if jobs == 1 or len(words) < 2 * jobs:
        parts = [run(0, len(words))]
    else:
        # oversplit: pairs per word vary widely, so small chunks balance better
        bounds = np.linspace(0, len(words), 4 * jobs + 1).astype(int)
        spans = [(int(a), int(b)) for a, b in zip(bounds, bounds[1:]) if a < b]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda s: run(*s), spans))

    merged = np.zeros(size, dtype=np.uint8)
    pair_count = 0
    collision_count = 0
    collision_codes: list[int] = []
    fail_entries: list[tuple[int, int]] = []
    failure_count = 0
    for seen, pc, n_coll, coll_codes, n_fail, fw, fc in parts:
        pair_count += pc
        collision_count += n_coll
        collision_codes.extend(int(x) for x in coll_codes)
        overlap = np.flatnonzero((merged != 0) & (seen != 0))
        collision_count += len(overlap)
        collision_codes.extend(int(x) for x in overlap)
        np.maximum(merged, seen, out=merged)
        failure_count += n_fail
        fail_entries.extend((int(a), int(b)) for a, b in zip(fw, fc))

    counts = np.zeros(n + 1, dtype=np.int64)
    miss = np.empty(_REPORT_CAP, dtype=np.int64)
    parking_count, missed_count = _kernels.parking_scan(merged, n, counts, miss)
    missed_codes = [int(x) for x in miss[: min(missed_count, _REPORT_CAP)]]

    elapsed = time.perf_counter() - start
    collision_codes = sorted(set(collision_codes))[:_REPORT_CAP]
    fail_entries.sort()
    return VerificationReport(
        n=n,
        pair_count=pair_count,
        parking_count=parking_count,
        expected=expected_region_count(n),
        label_collisions=tuple(_fn_dict(code, n) for code in collision_codes),
        roundtrip_failures=tuple(
            {"word": [int(x) for x in words[wi]], "label": _fn_dict(code, n)}
            for wi, code in fail_entries[:_REPORT_CAP]
        ),
        missed_functions=tuple(_fn_dict(code, n) for code in missed_codes),
        collision_count=collision_count,
        failure_count=failure_count,
        missed_count=missed_count,
        elapsed=elapsed,
    )
