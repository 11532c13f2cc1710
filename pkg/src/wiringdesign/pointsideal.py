"""Vanishing ideals of finite point sets over F_p.

Since every point lies in F_p^n, the field polynomials ``x_i^p - x_i``
belong to I(V) and every staircase sits inside the box ``{0..p-1}^n``.
That makes it possible to list *all* reduced Groebner bases of I(V): a
downward-closed set Δ of |V| box monomials with invertible evaluation
matrix is a staircase of some monomial order exactly when the marked
polynomials ``b - expansion(b)`` over its border admit a weight vector
ranking every marked term above its tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .design import DataSet, InputSet
from .exactla import EchelonBasis, FpMatrix, solve_in_span, strict_feasible
from .gf import ResourceLimitError
from .polynomial import Monomial, Polynomial, deglex_key, lagrange_indicator, monomial_str, default_names

BOX_LIMIT = 1 << 20

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order on exponent vectors.

    ``perm`` lists variable indices from most to least significant for the
    lex part. ``weight`` is only used by ``kind="weighted"``, which ranks by
    ``weight . a`` and breaks ties with lex.
    """

    kind: str = "lex"
    perm: Optional[tuple[int, ...]] = None
    weight: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.kind not in ("lex", "deglex", "degrevlex", "weighted"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "weighted":
            if self.weight is None:
                raise ValueError("weighted order needs a weight vector")
            w = tuple(Fraction(x) for x in self.weight)
            if any(x < 0 for x in w) or not any(x > 0 for x in w):
                raise ValueError("weights must be nonnegative with a positive entry")
            object.__setattr__(self, "weight", w)
        if self.perm is not None:
            object.__setattr__(self, "perm", tuple(self.perm))

    @classmethod
    def weighted(cls, weight, perm=None) -> "MonomialOrder":
        return cls("weighted", perm, tuple(weight))

    def _perm(self, n):
        perm = self.perm if self.perm is not None else tuple(range(n))
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{perm} is not a permutation of {n} variables")
        return perm

    def key(self, mono: Monomial):
        """Sort key: ``key(a) < key(b)`` iff a precedes b in the order."""
        perm = self._perm(len(mono))
        lex = tuple(mono[i] for i in perm)
        if self.kind == "lex":
            return lex
        if self.kind == "deglex":
            return (sum(mono), lex)
        if self.kind == "degrevlex":
            return (sum(mono), tuple(-mono[i] for i in reversed(perm)))
        return (sum(w * e for w, e in zip(self.weight, mono)), lex)


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """LT (-1), EQ (0) or GT (1)."""
    if len(a) != len(b):
        raise ValueError("monomials have different numbers of variables")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def _sorted_staircase(monos) -> tuple[Monomial, ...]:
    return tuple(sorted(monos, key=deglex_key))


@dataclass(frozen=True)
class MarkedGB:
    """Reduced Groebner basis with marked leading monomials.

    ``order`` is a monomial order realizing the marking.
    """

    generators: tuple[tuple[Polynomial, Monomial], ...]
    staircase: tuple[Monomial, ...]
    order: MonomialOrder = field(compare=False)

    @property
    def leads(self) -> list[Monomial]:
        return [lead for _, lead in self.generators]

    def format(self, names=None) -> list[str]:
        return [g.format(names, lead=lead) for g, lead in self.generators]


def format_staircase(staircase: Sequence[Monomial], names=None) -> str:
    if not staircase:
        return "{}"
    names = names or default_names(len(staircase[0]))
    return "{" + ",".join(monomial_str(m, names) for m in staircase) + "}"


def evaluate_monomial(mono: Monomial, point: Sequence[int], p: int) -> int:
    v = 1
    for x, e in zip(point, mono):
        if e:
            v = v * pow(x, e, p) % p
    return v


def evaluation_matrix(monomials: Sequence[Monomial], V: InputSet) -> FpMatrix:
    """Rows indexed by points of V, columns by ``monomials`` in the given order."""
    p = V.p
    return FpMatrix(tuple(tuple(evaluate_monomial(m, pt, p) for m in monomials) for pt in V), p)


def _eval_column(mono, V):
    return [evaluate_monomial(mono, pt, V.p) for pt in V]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def buchberger_moller(V: InputSet, order: MonomialOrder) -> MarkedGB:
    """Reduced Groebner basis of I(V) under ``order``."""
    p, n = V.p, V.n
    one = (0,) * n
    basis = []  # (pivot, row, poly evaluating to row)
    leads: list[Monomial] = []
    gens = []
    staircase = []
    frontier = {one}
    seen = {one}
    while frontier:
        t = min(frontier, key=order.key)
        frontier.remove(t)
        if any(_divides(lead, t) for lead in leads):
            continue
        v = _eval_column(t, V)
        poly = Polynomial.monomial(t, p)
        for piv, row, q in basis:
            f = v[piv]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, row)]
                poly = poly - q * f
        nz = next((i for i, x in enumerate(v) if x), None)
        if nz is None:
            gens.append((poly, t))
            leads.append(t)
            continue
        inv = pow(v[nz], -1, p)
        basis.append((nz, [x * inv % p for x in v], poly * inv))
        staircase.append(t)
        for i in range(n):
            u = list(t)
            u[i] += 1
            u = tuple(u)
            if u not in seen:
                seen.add(u)
                frontier.add(u)
    gens.sort(key=lambda g: order.key(g[1]))
    return MarkedGB(tuple(gens), _sorted_staircase(staircase), order)


def normal_form(f: Polynomial, G: MarkedGB) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` (supported on the staircase)."""
    p, n = f.p, f.n
    standard = set(G.staircase)
    key = G.order.key
    h = dict(f.terms)
    rem = {}
    while h:
        t = max(h, key=key)
        c = h.pop(t)
        if t in standard:
            rem[t] = c
            continue
        for g, lead in G.generators:
            if _divides(lead, t):
                shift = tuple(a - b for a, b in zip(t, lead))
                for mono, gc in g.terms.items():
                    if mono == lead:
                        continue
                    m = tuple(a + b for a, b in zip(mono, shift))
                    val = (h.get(m, 0) - c * gc) % p
                    if val:
                        h[m] = val
                    else:
                        h.pop(m, None)
                break
        else:
            raise ValueError(f"monomial {t} is neither standard nor reducible")
    return Polynomial(rem, p, n)


def interpolate(D: DataSet) -> Polynomial:
    """Lagrange interpolant of ``D``, supported on the box."""
    V = D.inputs
    out = Polynomial.zero(V.p, V.n)
    for pt, t in D.pairs():
        if t:
            out = out + lagrange_indicator(pt, V.p) * t
    return out


def _box(p: int, n: int) -> list[Monomial]:
    if p ** n > BOX_LIMIT:
        raise ResourceLimitError(f"box of {p}^{n} monomials exceeds {BOX_LIMIT}")
    return sorted(product(range(p), repeat=n), key=deglex_key)


def _order_ideals(V: InputSet):
    """Downward-closed box sets of size |V| with independent evaluation columns."""
    p, n, m = V.p, V.n, len(V)
    box = _box(p, n)
    cols = [_eval_column(mono, V) for mono in box]
    chosen: list[int] = []
    inside: set[Monomial] = set()

    def predecessors_in(mono):
        for i, e in enumerate(mono):
            if e:
                d = list(mono)
                d[i] -= 1
                if tuple(d) not in inside:
                    return False
        return True

    def walk(start, basis):
        if len(chosen) == m:
            yield tuple(box[i] for i in chosen)
            return
        for idx in range(start, len(box)):
            mono = box[idx]
            if not predecessors_in(mono):
                continue
            nb = basis.copy()
            if not nb.add(cols[idx]):
                continue
            chosen.append(idx)
            inside.add(mono)
            yield from walk(idx + 1, nb)
            chosen.pop()
            inside.discard(mono)

    yield from walk(0, EchelonBasis(p))


def _border(staircase: Sequence[Monomial], p: int) -> list[Monomial]:
    """Divisibility-minimal box monomials outside the staircase."""
    inside = set(staircase)
    out = set()
    for s in staircase:
        for i in range(len(s)):
            if s[i] + 1 < p:
                u = list(s)
                u[i] += 1
                u = tuple(u)
                if u in inside:
                    continue
                ok = True
                for j, e in enumerate(u):
                    if e:
                        d = list(u)
                        d[j] -= 1
                        if tuple(d) not in inside:
                            ok = False
                            break
                if ok:
                    out.add(u)
    return sorted(out, key=deglex_key)


def _marked_basis(staircase, V, weight) -> Optional[MarkedGB]:
    p, n = V.p, V.n
    E = evaluation_matrix(staircase, V)
    generators = []
    constraints = []
    for b in _border(staircase, p):
        c = solve_in_span(E, _eval_column(b, V))
        terms = {b: 1}
        for s, coef in zip(staircase, c):
            if coef:
                terms[s] = -coef
                constraints.append(tuple(x - y for x, y in zip(b, s)))
        generators.append((Polynomial(terms, p, n), b))
    for i in range(n):
        top = tuple((p - 1) * int(j == i) for j in range(n))
        if top in staircase:
            # x_i^p - x_i; every monomial order ranks x_i^p above x_i
            lead = tuple(p * int(j == i) for j in range(n))
            xi = tuple(int(j == i) for j in range(n))
            generators.append((Polynomial({lead: 1, xi: -1}, p, n), lead))
    w = weight(constraints, n)
    if w is None:
        return None
    if not any(w):
        w = tuple(Fraction(1) for _ in range(n))
    order = MonomialOrder.weighted(w)
    generators.sort(key=lambda g: order.key(g[1]))
    return MarkedGB(tuple(generators), _sorted_staircase(staircase), order)


def all_staircases(V: InputSet) -> list[tuple[tuple[Monomial, ...], MarkedGB]]:
    """Every staircase of I(V) over all monomial orders, with its reduced GB.

    Sorted canonically by staircase.
    """
    out = []
    for delta in _order_ideals(V):
        gb = _marked_basis(delta, V, lambda cs, n: strict_feasible(cs, nvars=n))
        if gb is not None:
            out.append((gb.staircase, gb))
    out.sort(key=lambda item: [deglex_key(m) for m in item[0]])
    return out


def has_unique_gb(V: InputSet) -> bool:
    return len(all_staircases(V)) == 1


def common_standard_monomials(V: InputSet) -> tuple[Monomial, ...]:
    stairs = [set(s) for s, _ in all_staircases(V)]
    return _sorted_staircase(set.intersection(*stairs))


def unique_normal_form(V: InputSet, T: Sequence[int]) -> tuple[bool, Optional[Polynomial]]:
    """Whether outputs ``T`` have the same normal form under every order, and that form."""
    if len(T) != len(V):
        raise ValueError(f"{len(T)} outputs for {len(V)} points")
    common = common_standard_monomials(V)
    c = solve_in_span(evaluation_matrix(common, V), T)
    if c is None:
        return False, None
    return True, Polynomial(dict(zip(common, c)), V.p, V.n)


def distinct_normal_forms(D: DataSet) -> list[Polynomial]:
    """Normal forms of the interpolant of ``D`` across all reduced GBs, deduplicated."""
    f = interpolate(D)
    seen = []
    for _, gb in all_staircases(D.inputs):
        nf = normal_form(f, gb)
        if nf not in seen:
            seen.append(nf)
    return seen


def vanishes_on(g: Polynomial, V: InputSet) -> bool:
    return all(g.evaluate(pt) == 0 for pt in V)

