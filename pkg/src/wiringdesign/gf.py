"""Prime fields, points and Hamming distances.

Points are plain tuples of canonical field elements. The field a point
lives in is carried by the containing :class:`~wiringdesign.design.InputSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Point = tuple[int, ...]

# variable subsets are stored as int bitmasks
MAX_VARS = 64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def elements(self) -> range:
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def check_point(self, point: Sequence[int]) -> Point:
        pt = tuple(int(c) for c in point)
        if not pt:
            raise ValueError("points need at least one coordinate")
        if len(pt) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} coordinates are supported")
        for c in pt:
            if not 0 <= c < self.p:
                raise ValueError(f"coordinate {c} outside 0..{self.p - 1}")
        return pt


def hamming(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of coordinates in which ``a`` and ``b`` differ."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} != {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def internal_distance(points: Sequence[Sequence[int]]) -> Fraction:
    """Mean Hamming distance over all unordered pairs of ``points``, exactly."""
    if len(points) < 2:
        raise ValueError("internal distance needs at least two points")
    total = 0
    npairs = 0
    for a, b in combinations(points, 2):
        total += hamming(a, b)
        npairs += 1
    return Fraction(total, npairs)


def parse_point(text: str, p: int) -> Point:
    """Parse ``"010"`` (p <= 10) or ``"1,12,0"``."""
    text = text.strip()
    if "," in text:
        coords = [int(c) for c in text.split(",")]
    elif p <= 10 and text.isdigit():
        coords = [int(c) for c in text]
    else:
        raise ValueError(f"cannot parse point {text!r} for p={p}")
    return PrimeField(p).check_point(coords)


def format_point(point: Iterable[int], p: int) -> str:
    point = tuple(point)
    if p <= 10:
        return "".join(str(c) for c in point)
    return ",".join(str(c) for c in point)


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its documented guard."""
