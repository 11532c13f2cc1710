"""Sparse multivariate polynomials over F_p, with a small text parser."""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, Mapping, Optional, Sequence

Monomial = tuple[int, ...]


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i}" for i in range(1, n + 1)]


def monomial_str(mono: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) or "1"


def deglex_key(mono: Monomial):
    return (sum(mono), mono)


class Polynomial:
    """Polynomial in ``n`` variables over F_p; zero coefficients are never stored."""

    __slots__ = ("terms", "p", "n")

    def __init__(self, terms: Mapping[Monomial, int], p: int, n: int):
        clean = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} has wrong length for n={n}")
            c %= p
            if c:
                clean[mono] = c
        self.terms = clean
        self.p = p
        self.n = n

    @classmethod
    def zero(cls, p: int, n: int) -> "Polynomial":
        return cls({}, p, n)

    @classmethod
    def constant(cls, c: int, p: int, n: int) -> "Polynomial":
        return cls({(0,) * n: c}, p, n)

    @classmethod
    def monomial(cls, mono: Monomial, p: int, c: int = 1) -> "Polynomial":
        return cls({tuple(mono): c}, p, len(mono))

    @classmethod
    def variable(cls, i: int, p: int, n: int) -> "Polynomial":
        return cls({tuple(int(j == i) for j in range(n)): 1}, p, n)

    def _check(self, other: "Polynomial"):
        if (self.p, self.n) != (other.p, other.n):
            raise ValueError("polynomials live in different rings")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.constant(other, self.p, self.n)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(terms, self.p, self.n)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.p, self.n)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self.terms.items()}, self.p, self.n)
        self._check(other)
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = (terms.get(m, 0) + c1 * c2) % self.p
        return Polynomial(terms, self.p, self.n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(1, self.p, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.p, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.p, self.n, self.terms) == (other.p, other.n, other.terms)

    def __hash__(self):
        return hash((self.p, self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(point, mono):
                if e:
                    v *= pow(x, e, self.p)
            total += v
        return total % self.p

    def support(self) -> set[int]:
        """0-based indices of the variables that occur."""
        return {i for mono in self.terms for i, e in enumerate(mono) if e}

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, key=deglex_key, reverse=True)

    def format(self, names: Optional[Sequence[str]] = None, lead: Optional[Monomial] = None) -> str:
        """Human form, terms in decreasing deglex (``lead`` first if given)."""
        names = names or default_names(self.n)
        monos = self.monomials()
        if lead is not None and lead in self.terms:
            monos.remove(lead)
            monos.insert(0, lead)
        if not monos:
            return "0"
        out = ""
        for k, mono in enumerate(monos):
            c = self.terms[mono]
            neg = self.p > 2 and c == self.p - 1
            if neg:
                c = 1
            body = monomial_str(mono, names)
            if body == "1":
                text = str(c)
            elif c == 1:
                text = body
            else:
                text = f"{c}{body}"
            if neg:
                out += "-" + text
            else:
                out += ("+" if k else "") + text
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r}, p={self.p})"


def lagrange_indicator(point: Sequence[int], p: int) -> Polynomial:
    """Polynomial in the box that is 1 at ``point`` and 0 elsewhere on F_p^n."""
    n = len(point)
    out = Polynomial.constant(1, p, n)
    for i, a in enumerate(point):
        # 1 - (x_i - a)^(p-1)
        terms = {}
        for k in range(p):
            e = [0] * n
            e[i] = k
            terms[tuple(e)] = -comb(p - 1, k) * pow(-a, p - 1 - k, p)
        factor = Polynomial(terms, p, n) + 1
        out = out * factor
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+|[a-z])|(\S))")


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(text: str, p: int, n: int, names: Optional[Sequence[str]] = None) -> Polynomial:
    """Parse forms like ``"xy+x+y"``, ``"y^2-1"``, ``"x1 (x2 + x3 + x2 x3)"``.

    Variables are ``x, y, z`` (first three) or ``x1 .. xn``; ``names``
    overrides with an explicit list.
    """
    lookup = {}
    if names is None:
        for i, nm in enumerate(["x", "y", "z"][:n]):
            lookup[nm] = i
        for i in range(n):
            lookup[f"x{i + 1}"] = i
    else:
        lookup = {nm: i for i, nm in enumerate(names)}

    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            break
        num, name, sym = mt.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            if name not in lookup:
                raise PolynomialSyntaxError(f"unknown variable {name!r}")
            tokens.append(("var", lookup[name]))
        else:
            if sym not in "+-*^()":
                raise PolynomialSyntaxError(f"unexpected character {sym!r}")
            tokens.append((sym, None))
        pos = mt.end()
    tokens.append(("end", None))
    idx = 0

    def peek():
        return tokens[idx][0]

    def take(kind=None):
        nonlocal idx
        tok = tokens[idx]
        if kind is not None and tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {kind!r}, found {tok[0]!r} in {text!r}")
        idx += 1
        return tok

    def expr():
        sign = 1
        if peek() in "+-":
            sign = -1 if take()[0] == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()[0]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() in ("*", "num", "var", "("):
            if peek() == "*":
                take()
            acc = acc * factor()
        return acc

    def factor():
        base = atom()
        if peek() == "^":
            take()
            base = base ** take("num")[1]
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.constant(val, p, n)
        if kind == "var":
            return Polynomial.variable(val, p, n)
        if kind == "(":
            inner = expr()
            take(")")
            return inner
        raise PolynomialSyntaxError(f"unexpected {kind!r} in {text!r}")

    result = expr()
    if peek() != "end":
        raise PolynomialSyntaxError(f"trailing input in {text!r}")
    return result


def sum_polys(polys: Iterable[Polynomial], p: int, n: int) -> Polynomial:
    out = Polynomial.zero(p, n)
    for f in polys:
        out = out + f
    return out
