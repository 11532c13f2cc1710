"""Sampling schemes and trial runs relating internal distance to minset counts."""

from __future__ import annotations

import csv
import enum
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence, TextIO

from .booleanlib import FanoutFreeFunction
from .design import DataSet, InputSet, minsets
from .gf import Point, ResourceLimitError, internal_distance

ENUMERATION_LIMIT = 2_000_000


class SchemeKind(str, enum.Enum):
    RANDOM = "random"
    SMALL_DISTANCE = "small_distance"


@dataclass(frozen=True)
class TrialRecord:
    trial_id: int
    scheme: SchemeKind
    function_id: int
    n: int
    m: int
    seed: int
    d: Fraction
    num_minsets: int


@dataclass(frozen=True)
class GroupedCount:
    d: Fraction
    num_minsets: int
    count: int


def _decode(code: int, n: int, p: int) -> Point:
    out = []
    for _ in range(n):
        code, r = divmod(code, p)
        out.append(r)
    return tuple(reversed(out))


def random_scheme(n: int, m: int, rng: random.Random, p: int = 2) -> InputSet:
    """``m`` distinct points drawn uniformly without replacement."""
    if m > p ** n:
        raise ValueError(f"cannot draw {m} distinct points from {p}^{n}")
    if m < 1:
        raise ValueError("m must be positive")
    codes = rng.sample(range(p ** n), m)
    return InputSet(tuple(_decode(c, n, p) for c in codes), p)


def _switch(point: Point, i: int, rng: random.Random, p: int) -> Point:
    new = list(point)
    new[i] = rng.choice([v for v in range(p) if v != point[i]])
    return tuple(new)


def small_distance_scheme(n: int, m: int, rng: random.Random, p: int = 2) -> InputSet:
    """``m/2`` random base points, each followed by a copy with one coordinate switched.

    Collisions are resampled: first the switched coordinate (up to ``n``
    times), then the base point, within a budget of ``100 * m`` attempts.
    """
    if m % 2:
        raise ValueError("small-distance scheme needs an even m")
    if m > p ** n:
        raise ValueError(f"cannot draw {m} distinct points from {p}^{n}")
    if m < 2:
        raise ValueError("m must be at least 2")
    total = p ** n
    bases = [_decode(c, n, p) for c in rng.sample(range(total), m // 2)]
    taken: set[Point] = set()
    points: list[Point] = []
    budget = 100 * m
    for base in bases:
        placed = False
        while not placed:
            if base in taken:
                budget -= 1
                if budget <= 0:
                    raise ResourceLimitError("small-distance scheme exhausted its resampling budget")
                base = _decode(rng.randrange(total), n, p)
                continue
            for _ in range(n):
                budget -= 1
                if budget <= 0:
                    raise ResourceLimitError("small-distance scheme exhausted its resampling budget")
                partner = _switch(base, rng.randrange(n), rng, p)
                if partner not in taken:
                    points += [base, partner]
                    taken.update((base, partner))
                    placed = True
                    break
            else:
                base = _decode(rng.randrange(total), n, p)
    return InputSet(tuple(points), p)


SCHEMES = {
    SchemeKind.RANDOM: random_scheme,
    SchemeKind.SMALL_DISTANCE: small_distance_scheme,
}


def trial_rng(seed: int, trial_id: int) -> random.Random:
    return random.Random(seed ^ trial_id)


def evaluate_trial(f: FanoutFreeFunction, V: InputSet) -> tuple[Fraction, int]:
    D = DataSet(V, tuple(f.evaluate(s) for s in V))
    return internal_distance(V.points), len(minsets(D))


def run_trials(
    f: FanoutFreeFunction,
    scheme: SchemeKind | str,
    n: int,
    m: int,
    trials: int,
    seed: int,
) -> list[TrialRecord]:
    scheme = SchemeKind(scheme)
    draw = SCHEMES[scheme]
    records = []
    for trial_id in range(trials):
        V = draw(n, m, trial_rng(seed, trial_id))
        d, count = evaluate_trial(f, V)
        records.append(TrialRecord(trial_id, scheme, f.id, n, m, seed, d, count))
    return records


def exhaustive_enumeration(f: FanoutFreeFunction, n: int, m: int, p: int = 2) -> list[GroupedCount]:
    """Group every ``m``-subset of F_p^n by (internal distance, number of minsets)."""
    total = comb(p ** n, m)
    if total > ENUMERATION_LIMIT:
        raise ResourceLimitError(f"C({p}^{n}, {m}) = {total} input sets exceeds {ENUMERATION_LIMIT}")
    universe = list(product(range(p), repeat=n))
    counts: Counter = Counter()
    for subset in combinations(universe, m):
        counts[evaluate_trial(f, InputSet(subset, p))] += 1
    return [GroupedCount(d, k, c) for (d, k), c in sorted(counts.items())]


TRIAL_HEADER = ["trial_id", "scheme", "function_id", "n", "m", "d_num", "d_den", "num_minsets"]
GROUP_HEADER = ["d_num", "d_den", "num_minsets", "count"]


def write_trials_csv(records: Iterable[TrialRecord], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(TRIAL_HEADER)
    for r in records:
        w.writerow([r.trial_id, r.scheme.value, r.function_id, r.n, r.m,
                    r.d.numerator, r.d.denominator, r.num_minsets])


def write_groups_csv(groups: Iterable[GroupedCount], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(GROUP_HEADER)
    for g in groups:
        w.writerow([g.d.numerator, g.d.denominator, g.num_minsets, g.count])


def group_records(records: Sequence[TrialRecord]) -> list[GroupedCount]:
    counts = Counter((r.d, r.num_minsets) for r in records)
    return [GroupedCount(d, k, c) for (d, k), c in sorted(counts.items())]


def mean(values: Iterable) -> Fraction:
    values = list(values)
    return Fraction(sum(values), len(values)) if values else Fraction(0)
