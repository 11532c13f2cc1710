"""Square-free monomials, their ideals, and minimal primes.

A square-free monomial is identified with its set of variables, stored as
an int bitmask (bit ``i - 1`` set for ``x_i``). Minimal primes of a
square-free monomial ideal are the minimal transversals of the generator
supports, which we enumerate with Berge's incremental algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf import MAX_VARS


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        if not 1 <= i <= MAX_VARS:
            raise ValueError(f"variable index {i} outside 1..{MAX_VARS}")
        m |= 1 << (i - 1)
    return m


def _sort_key(mask: int):
    return (bin(mask).count("1"), _bits(mask))


@dataclass(frozen=True, order=False)
class SqFreeMonomial:
    mask: int

    @classmethod
    def from_vars(cls, indices: Iterable[int]) -> "SqFreeMonomial":
        return cls(_mask(indices))

    @property
    def vars(self) -> tuple[int, ...]:
        return _bits(self.mask)

    @property
    def degree(self) -> int:
        return len(self.vars)

    def divides(self, other: "SqFreeMonomial") -> bool:
        return self.mask & other.mask == self.mask

    def __len__(self):
        return self.degree

    def __str__(self):
        if not self.mask:
            return "1"
        return "".join(f"x{i}" for i in self.vars)

    def __repr__(self):
        return f"SqFreeMonomial({self})"

    def sort_key(self):
        return _sort_key(self.mask)


class Minset(SqFreeMonomial):
    """A minimal set of variables; prints as ``{x1,x3}``."""

    def __str__(self):
        return "{" + ",".join(f"x{i}" for i in self.vars) + "}"

    def __repr__(self):
        return f"Minset({self})"


@dataclass(frozen=True)
class SFIdeal:
    """Ideal generated by square-free monomials in ``nvars`` variables.

    The empty generating set is the zero ideal; a generating set containing
    the monomial 1 is the unit ideal.
    """

    gens: frozenset[int]
    nvars: int

    def __post_init__(self):
        if not 0 <= self.nvars <= MAX_VARS:
            raise ValueError(f"nvars must be in 0..{MAX_VARS}")
        limit = 1 << self.nvars
        for g in self.gens:
            if not 0 <= g < limit:
                raise ValueError(f"generator {_bits(g)} exceeds {self.nvars} variables")

    @classmethod
    def from_vars(cls, gens: Iterable[Iterable[int]], nvars: int) -> "SFIdeal":
        return cls(frozenset(_mask(g) for g in gens), nvars)

    @classmethod
    def of(cls, monomials: Iterable[SqFreeMonomial], nvars: int) -> "SFIdeal":
        return cls(frozenset(m.mask for m in monomials), nvars)

    @property
    def is_unit(self) -> bool:
        return 0 in self.gens

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def generators(self) -> list[SqFreeMonomial]:
        return [SqFreeMonomial(g) for g in sorted(self.gens, key=_sort_key)]

    def contains(self, mono: SqFreeMonomial) -> bool:
        return any(g & mono.mask == g for g in self.gens)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators()) + ">"


def minimize(masks: Iterable[int]) -> list[int]:
    """Divisibility-minimal elements of a family of bitmasks, canonically sorted."""
    ordered = sorted(set(masks), key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept, key=_sort_key)


def minimal_generators(ideal: SFIdeal) -> SFIdeal:
    return SFIdeal(frozenset(minimize(ideal.gens)), ideal.nvars)


def is_prime(ideal: SFIdeal) -> bool:
    """True iff every minimal generator is a single variable (zero ideal included)."""
    if ideal.is_unit:
        raise ValueError("the unit ideal is not a proper ideal")
    return all(bin(g).count("1") == 1 for g in minimal_generators(ideal).gens)


def minimal_transversals(edges: Sequence[int]) -> list[int]:
    """All inclusion-minimal hitting sets of ``edges`` (Berge's algorithm).

    No edges gives ``[0]``; an empty edge can never be hit and gives ``[]``.
    """
    edges = minimize(edges)
    if 0 in edges:
        return []
    trans = [0]
    for e in edges:
        hit = [t for t in trans if t & e]
        miss = [t for t in trans if not t & e]
        if not miss:
            continue
        grown = set(hit)
        bit = 1
        rest = e
        while rest:
            if rest & 1:
                for t in miss:
                    grown.add(t | bit)
            rest >>= 1
            bit <<= 1
        # antichain pruning after each edge
        trans = minimize(grown)
    return sorted(trans, key=_sort_key)


def primary_decomposition(ideal: SFIdeal) -> list[Minset]:
    """Minimal primes of ``ideal``, each given by its variable set.

    Sorted by size, then lexicographically. The zero ideal gives ``[{}]``.
    """
    return [Minset(t) for t in minimal_transversals(list(ideal.gens))]


def pair_monomial(a: Sequence[int], b: Sequence[int]) -> SqFreeMonomial:
    """Square-free monomial of the coordinates where ``a`` and ``b`` differ."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} != {len(b)}")
    if len(a) > MAX_VARS:
        raise ValueError(f"at most {MAX_VARS} variables are supported")
    m = 0
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            m |= 1 << i
    if not m:
        raise ValueError("pair monomial is undefined for equal points")
    return SqFreeMonomial(m)
