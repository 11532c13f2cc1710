"""Exact linear algebra over F_p and strict feasibility over Q.

``strict_feasible`` decides whether some w >= 0 has w . c > 0 for every
given c. By homogeneity this is the same as w . c >= 1, which
Fourier-Motzkin elimination decides exactly on rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass(frozen=True)
class FpMatrix:
    rows: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.p for x in r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], p: int) -> "FpMatrix":
        return cls(tuple(tuple(r) for r in rows), p)

    @classmethod
    def identity(cls, size: int, p: int) -> "FpMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)), p)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self, idx: Sequence[int]) -> "FpMatrix":
        return FpMatrix(tuple(tuple(r[j] for j in idx) for r in self.rows), self.p)

    def matvec(self, c: Sequence[int]) -> tuple[int, ...]:
        if len(c) != self.shape[1]:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, c)) % self.p for r in self.rows)


def _row_reduce(rows: list[list[int]], p: int, ncols: int) -> list[int]:
    """In-place reduced row echelon form on the first ``ncols`` columns.

    Returns the pivot columns.
    """
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(A: FpMatrix) -> int:
    rows = [list(r) for r in A.rows]
    return len(_row_reduce(rows, A.p, A.shape[1]))


def solve_in_span(A: FpMatrix, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some ``c`` with ``A c = b`` over F_p, or None if ``b`` is not in the column span."""
    nrows, ncols = A.shape
    if len(b) != nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {nrows}")
    p = A.p
    aug = [list(r) + [int(x) % p] for r, x in zip(A.rows, b)]
    pivots = _row_reduce(aug, p, ncols)
    for row in aug[len(pivots):]:
        if row[ncols]:
            return None
    c = [0] * ncols
    for i, col in enumerate(pivots):
        c[col] = aug[i][ncols]
    return tuple(c)


def is_nonsingular(A: FpMatrix) -> bool:
    nrows, ncols = A.shape
    if nrows != ncols:
        raise ValueError(f"matrix is {nrows}x{ncols}, not square")
    return rank(A) == nrows


class EchelonBasis:
    """Incrementally maintained row-echelon basis of vectors in F_p^k."""

    def __init__(self, p: int):
        self.p = p
        self.rows: list[tuple[int, list[int]]] = []  # (pivot, row with pivot entry 1)

    def copy(self) -> "EchelonBasis":
        other = EchelonBasis(self.p)
        other.rows = list(self.rows)
        return other

    def reduce(self, v: Sequence[int]) -> list[int]:
        p = self.p
        v = [x % p for x in v]
        for piv, row in self.rows:
            f = v[piv]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence[int]) -> bool:
        """Insert ``v``; False if it was already in the span."""
        v = self.reduce(v)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = pow(v[piv], -1, self.p)
        self.rows.append((piv, [x * inv % self.p for x in v]))
        return True

    def __len__(self):
        return len(self.rows)


def _normalize(coeffs: tuple[Fraction, ...], rhs: Fraction):
    scale = max((abs(c) for c in coeffs), default=Fraction(0))
    if scale == 0:
        return coeffs, rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def _eliminate(system, k):
    """Fourier-Motzkin step removing variable ``k`` from ``a . w >= rhs`` rows."""
    pos, neg, rest = [], [], []
    for a, r in system:
        (pos if a[k] > 0 else neg if a[k] < 0 else rest).append((a, r))
    out = set(rest)
    for ap, rp in pos:
        for an, rn in neg:
            lp, ln = -an[k], ap[k]
            a = tuple(lp * x + ln * y for x, y in zip(ap, an))
            out.add(_normalize(a, lp * rp + ln * rn))
    return pos, neg, out


def strict_feasible(vectors: Sequence[Sequence], nvars: Optional[int] = None) -> Optional[tuple[Fraction, ...]]:
    """Find rational ``w >= 0`` with ``w . c > 0`` for every ``c``; None if impossible.

    An empty system is feasible; pass ``nvars`` to get a witness of the right length.
    """
    vectors = [tuple(Fraction(x) for x in c) for c in vectors]
    if not vectors:
        return tuple(Fraction(1) for _ in range(nvars or 0))
    n = len(vectors[0])
    if any(len(c) != n for c in vectors):
        raise ValueError("constraint vectors differ in length")
    system = {_normalize(c, Fraction(1)) for c in vectors}
    for i in range(n):
        e = tuple(Fraction(int(j == i)) for j in range(n))
        system.add((e, Fraction(0)))

    stages = []
    for k in range(n):
        pos, neg, system = _eliminate(system, k)
        stages.append((pos, neg))
        # rows with no variables left decide feasibility early
        if any(all(x == 0 for x in a) and r > 0 for a, r in system):
            return None
    if any(r > 0 for _, r in system):
        return None

    w = [Fraction(0)] * n
    for k in reversed(range(n)):
        pos, neg = stages[k]
        lo = [(r - sum(a[j] * w[j] for j in range(k + 1, n))) / a[k] for a, r in pos]
        hi = [(r - sum(a[j] * w[j] for j in range(k + 1, n))) / a[k] for a, r in neg]
        if lo:
            w[k] = max(lo)
        elif hi:
            w[k] = min(hi)
    w = tuple(w)
    assert all(sum(a * b for a, b in zip(w, c)) > 0 for c in vectors)
    return w
