"""Fanout-free Boolean functions on at most four variables.

Each entry carries both a polynomial over F_2 and a Boolean expression
tree; they must agree on every input. Functions act on an ambient F_2^n by
reading the first ``arity`` coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Sequence, Union

from .polynomial import Polynomial, parse_polynomial

# expression trees: ("var", i) with 1-based i, ("not", e), ("and", e, ...), ("or", e, ...)
Expr = tuple


def var(i: int) -> Expr:
    return ("var", i)


def AND(*args: Expr) -> Expr:
    return ("and",) + args


def OR(*args: Expr) -> Expr:
    return ("or",) + args


def NOT(arg: Expr) -> Expr:
    return ("not", arg)


def eval_expr(expr: Expr, point: Sequence[int]) -> int:
    op = expr[0]
    if op == "var":
        return int(point[expr[1] - 1]) & 1
    if op == "not":
        return 1 - eval_expr(expr[1], point)
    if op == "and":
        return int(all(eval_expr(e, point) for e in expr[1:]))
    if op == "or":
        return int(any(eval_expr(e, point) for e in expr[1:]))
    raise ValueError(f"unknown operator {op!r}")


def expr_vars(expr: Expr) -> list[int]:
    """Variable occurrences, with repetition."""
    if expr[0] == "var":
        return [expr[1]]
    return [v for e in expr[1:] for v in expr_vars(e)]


def format_expr(expr: Expr) -> str:
    op = expr[0]
    if op == "var":
        return f"x{expr[1]}"
    if op == "not":
        return "~" + format_expr(expr[1])
    sym = " & " if op == "and" else " | "
    parts = []
    for e in expr[1:]:
        s = format_expr(e)
        parts.append(f"({s})" if e[0] in ("and", "or") else s)
    return sym.join(parts)


@dataclass(frozen=True)
class FanoutFreeFunction:
    id: int
    polynomial: Polynomial
    boolean_form: Expr
    example_only: bool = False

    @property
    def arity(self) -> int:
        return self.polynomial.n

    @property
    def support_size(self) -> int:
        return len(self.polynomial.support())

    def evaluate(self, point: Sequence[int], n: int | None = None) -> int:
        n = len(point) if n is None else n
        if len(point) != n:
            raise ValueError(f"point has dimension {len(point)}, expected {n}")
        if n < self.arity:
            raise ValueError(f"function {self.id} needs at least {self.arity} variables")
        return self.polynomial.evaluate(point[: self.arity])

    def evaluate_boolean(self, point: Sequence[int]) -> int:
        return eval_expr(self.boolean_form, point[: self.arity])

    def __str__(self):
        return self.polynomial.format([f"x{i}" for i in range(1, self.arity + 1)])


def _f(fid, poly, k, expr, example_only=False):
    names = [f"x{i}" for i in range(1, k + 1)]
    return FanoutFreeFunction(fid, parse_polynomial(poly, 2, k, names), expr, example_only)


x1, x2, x3, x4 = var(1), var(2), var(3), var(4)

_TABLE2 = (
    _f(1, "x1", 1, x1),
    _f(2, "x1 x2", 2, AND(x1, x2)),
    _f(3, "x1 x2 x3", 3, AND(x1, x2, x3)),
    _f(4, "x1 (x2 + x3 + x2 x3)", 3, AND(x1, OR(x2, x3))),
    _f(5, "x1 x2 x3 x4", 4, AND(x1, x2, x3, x4)),
    _f(6, "x1x2x3 + x4 + x1x2x3x4", 4, OR(AND(x1, x2, x3), x4)),
    _f(7, "x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x3x4 + x3 + x4", 4, OR(AND(x1, x2), x3, x4)),
    _f(8, "x1x2 + x3x4 + x1x2x3x4", 4, OR(AND(x1, x2), AND(x3, x4))),
    _f(9, "(x1x2 + x3 + x1x2x3) x4", 4, AND(OR(AND(x1, x2), x3), x4)),
)

# 1 + x2 + x2x3 on F_2^3; as a Boolean function this is ~x2 | x3
EXAMPLE_FUNCTION = _f(10, "1 + x2 + x2 x3", 3, OR(NOT(x2), x3), example_only=True)


def evaluate(f: FanoutFreeFunction, point: Sequence[int], n: int | None = None) -> int:
    return f.evaluate(point, n)


def table2_catalog() -> list[FanoutFreeFunction]:
    """The nine fanout-free functions with support of size at most four."""
    return list(_TABLE2)


def get_function(key: Union[int, str], n: int | None = None) -> FanoutFreeFunction:
    """Look up by id (1-10) or parse a polynomial string over F_2.

    A parsed polynomial gets id 0 and no Boolean form of its own; its
    Boolean form is a truth-table fallback built from the polynomial.
    """
    if isinstance(key, int) or str(key).strip().isdigit():
        fid = int(key)
        for f in _TABLE2 + (EXAMPLE_FUNCTION,):
            if f.id == fid:
                return f
        raise KeyError(f"no function with id {fid}")
    text = str(key)
    k = n
    if k is None:
        idx = [int(i) for i in re.findall(r"x(\d+)", text)]
        k = max(idx, default=1)
    names = [f"x{i}" for i in range(1, k + 1)]
    poly = parse_polynomial(text, 2, k, names)
    return FanoutFreeFunction(0, poly, _truth_table_expr(poly))


def _truth_table_expr(poly: Polynomial) -> Expr:
    """Disjunctive normal form of ``poly`` (not fanout-free in general)."""
    k = poly.n
    clauses = []
    for pt in product((0, 1), repeat=k):
        if poly.evaluate(pt):
            lits = [var(i + 1) if b else NOT(var(i + 1)) for i, b in enumerate(pt)]
            clauses.append(AND(*lits))
    if not clauses:
        return AND(var(1), NOT(var(1)))
    return OR(*clauses)
