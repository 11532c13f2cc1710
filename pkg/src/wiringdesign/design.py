"""Minsets of input-output data and input sets that force a unique minset.

The decision procedure for an input set ``V`` checks, for every pair of
points whose pair monomial is multivariate, whether outputs can be chosen
so that this pair disagrees while every single-variable pair monomial
dividing it joins points with equal outputs. Those equalities are handled
with a disjoint-set structure over point indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .gf import Point, PrimeField, ResourceLimitError, format_point, hamming, parse_point
from .monomials import (
    Minset,
    SFIdeal,
    SqFreeMonomial,
    pair_monomial,
    primary_decomposition,
)

BRUTE_FORCE_LIMIT = 1 << 20


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class InputSet:
    points: tuple[Point, ...]
    p: int = 2

    def __post_init__(self):
        field = PrimeField(self.p)
        pts = tuple(field.check_point(pt) for pt in self.points)
        if not pts:
            raise ValueError("an input set needs at least one point")
        n = len(pts[0])
        if any(len(pt) != n for pt in pts):
            raise ValueError("all points must have the same dimension")
        if len(set(pts)) != len(pts):
            raise ValueError("input points must be distinct")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points[0])

    @property
    def m(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


@dataclass(frozen=True)
class DataSet:
    inputs: InputSet
    outputs: tuple[int, ...]

    def __post_init__(self):
        outs = tuple(int(t) for t in self.outputs)
        if len(outs) != len(self.inputs):
            raise ValueError(f"{len(outs)} outputs for {len(self.inputs)} inputs")
        for t in outs:
            if not 0 <= t < self.inputs.p:
                raise ValueError(f"output {t} outside 0..{self.inputs.p - 1}")
        object.__setattr__(self, "outputs", outs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Sequence[int], int]], p: int = 2) -> "DataSet":
        pairs = list(pairs)
        return cls(InputSet(tuple(tuple(s) for s, _ in pairs), p), tuple(t for _, t in pairs))

    def pairs(self):
        return zip(self.inputs.points, self.outputs)


@dataclass(frozen=True)
class PairMonomialRecord:
    monomial: SqFreeMonomial
    i: int
    j: int


@dataclass(frozen=True)
class UniquenessVerdict:
    guaranteed_unique: bool
    witness: Optional[tuple[int, ...]] = None
    monomial: Optional[SqFreeMonomial] = None
    pair: Optional[tuple[int, int]] = None
    # the equalities of the consistent system, as index pairs
    equalities: tuple[tuple[int, int], ...] = ()


def pair_monomials(V: InputSet) -> list[PairMonomialRecord]:
    """One record per unordered pair ``i < j`` (0-based), duplicates kept."""
    if len(V) < 2:
        raise ValueError("need at least two points")
    return [
        PairMonomialRecord(pair_monomial(V[i], V[j]), i, j)
        for i, j in itertools.combinations(range(len(V)), 2)
    ]


def nondisposable_ideal(D: DataSet) -> SFIdeal:
    pts, outs = D.inputs.points, D.outputs
    gens = set()
    for i, j in itertools.combinations(range(len(pts)), 2):
        if outs[i] != outs[j]:
            gens.add(pair_monomial(pts[i], pts[j]).mask)
    return SFIdeal(frozenset(gens), D.inputs.n)


def minsets(D: DataSet) -> list[Minset]:
    return primary_decomposition(nondisposable_ideal(D))


class _DisjointSets:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def guaranteed_unique_minset(V: InputSet) -> UniquenessVerdict:
    """Decide whether every output assignment on ``V`` gives exactly one minset.

    On failure the verdict carries a 0/1 witness assignment, the triggering
    multivariate monomial and its pair ``(a, b)`` (0-based).
    """
    if len(V) < 2:
        return UniquenessVerdict(True)
    records = pair_monomials(V)
    single = [r for r in records if r.monomial.degree == 1]
    for rec in records:
        if rec.monomial.degree < 2:
            continue
        dsu = _DisjointSets(len(V))
        eqs = []
        for s in single:
            if s.monomial.divides(rec.monomial):
                dsu.union(s.i, s.j)
                eqs.append((s.i, s.j))
        a, b = rec.i, rec.j
        if dsu.find(a) != dsu.find(b):
            root = dsu.find(b)
            witness = tuple(1 if dsu.find(k) == root else 0 for k in range(len(V)))
            return UniquenessVerdict(False, witness, rec.monomial, (a, b), tuple(eqs))
    return UniquenessVerdict(True)


def brute_force_unique(V: InputSet, limit: int = BRUTE_FORCE_LIMIT) -> bool:
    """Check every output assignment in ``F_p^m`` for a unique minset."""
    return brute_force_counterexample(V, limit) is None


def brute_force_counterexample(V: InputSet, limit: int = BRUTE_FORCE_LIMIT):
    """First output assignment (lexicographic) with two or more minsets, or None."""
    total = V.p ** len(V)
    if total > limit:
        raise ResourceLimitError(f"{V.p}^{len(V)} = {total} output assignments exceeds {limit}")
    for T in itertools.product(range(V.p), repeat=len(V)):
        if len(minsets(DataSet(V, T))) != 1:
            return T
    return None


def find_diagonals(V: InputSet) -> list[Point]:
    """Points at Hamming distance at least 2 from every other point of ``V``.

    A single-point set has no diagonals.
    """
    if len(V) < 2:
        return []
    return [
        p for p in V
        if all(hamming(p, q) >= 2 for q in V if q != p)
    ]


def _content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _check_line(pt, previous, lineno):
    if previous and len(pt) != len(previous[0]):
        raise ParseError(f"line {lineno}: point has dimension {len(pt)}, expected {len(previous[0])}")
    if pt in previous:
        raise ParseError(f"line {lineno}: duplicate point {pt}")


def read_points(lines: Iterable[str], p: int = 2) -> InputSet:
    """Input-set file: one point per line; ``#`` starts a comment."""
    pts = []
    for lineno, line in _content_lines(lines):
        try:
            pt = parse_point(line, p)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        _check_line(pt, pts, lineno)
        pts.append(pt)
    try:
        return InputSet(tuple(pts), p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_data(lines: Iterable[str], p: int = 2) -> DataSet:
    """Data file: ``point output`` per line, e.g. ``000 1``."""
    pairs = []
    for lineno, line in _content_lines(lines):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'point output', got {line!r}")
        try:
            pt = parse_point(fields[0], p)
            t = int(fields[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if not 0 <= t < p:
            raise ParseError(f"line {lineno}: output {t} outside 0..{p - 1}")
        _check_line(pt, [q for q, _ in pairs], lineno)
        pairs.append((pt, t))
    try:
        return DataSet.from_pairs(pairs, p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_data(D: DataSet) -> str:
    return "".join(f"{format_point(s, D.inputs.p)} {t}\n" for s, t in D.pairs())
