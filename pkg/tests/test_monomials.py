from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from wiringdesign.monomials import (
    Minset,
    SFIdeal,
    SqFreeMonomial,
    is_prime,
    minimal_generators,
    pair_monomial,
    primary_decomposition,
)


def ideal(*gens, n=3):
    return SFIdeal.from_vars(gens, n)


def as_vars(ms):
    return [m.vars for m in ms]


@pytest.mark.parametrize("a, b, expected", [
    ((0, 0, 0), (1, 1, 0), (1, 2)),
    ((0, 1, 0), (2, 1, 2), (1, 3)),
    ((2, 1, 1), (0, 0, 2), (1, 2, 3)),
])
def test_pair_monomial(a, b, expected):
    assert pair_monomial(a, b).vars == expected


def test_pair_monomial_equal_points():
    with pytest.raises(ValueError):
        pair_monomial((1, 0), (1, 0))


def test_printing():
    assert str(SqFreeMonomial.from_vars([1, 3])) == "x1x3"
    assert str(Minset.from_vars([1, 3])) == "{x1,x3}"
    assert str(SqFreeMonomial(0)) == "1"


@pytest.mark.parametrize("gens, expected", [
    ([(1, 2), (2, 3), (1, 3)], [(1, 2), (1, 3), (2, 3)]),
    ([(1, 2), (2, 3), (1, 3), (2,), (1, 2, 3), (3,)], [(2,), (3,)]),
    ([(1,)], [(1,)]),
])
def test_minimal_generators(gens, expected):
    assert [g.vars for g in minimal_generators(ideal(*gens)).generators()] == expected


def test_is_prime():
    assert not is_prime(ideal((1, 2), (2, 3), (1, 3)))
    assert is_prime(ideal((2,), (3,)))
    assert is_prime(ideal())
    with pytest.raises(ValueError):
        is_prime(SFIdeal(frozenset({0}), 3))


@pytest.mark.parametrize("gens, expected", [
    ([(1, 2), (2, 3), (1, 3)], [(1, 2), (1, 3), (2, 3)]),
    ([(1, 2), (2, 3), (1, 3), (2,)], [(1, 2), (2, 3)]),
    ([(2,), (3,)], [(2, 3)]),
    ([], [()]),
])
def test_primary_decomposition(gens, expected):
    assert as_vars(primary_decomposition(ideal(*gens))) == expected


def brute_minimal_transversals(gens, n):
    """Scan all 2^n subsets; keep hitting sets with no hitting proper subset."""
    subsets = [frozenset(s) for k in range(n + 1) for s in combinations(range(1, n + 1), k)]
    hits = [s for s in subsets if all(s & set(g) for g in gens)]
    minimal = [s for s in hits if not any(t < s for t in hits)]
    return sorted((tuple(sorted(s)) for s in minimal), key=lambda t: (len(t), t))


ideals = st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.sets(st.integers(1, n), min_size=1), max_size=8),
))


@given(ideals)
def test_decomposition_matches_brute_force(data):
    n, gens = data
    I = SFIdeal.from_vars(gens, n)
    assert as_vars(primary_decomposition(I)) == brute_minimal_transversals(gens, n)


@given(ideals)
def test_minsets_hit_everything_and_are_minimal(data):
    n, gens = data
    I = SFIdeal.from_vars(gens, n)
    mingens = minimal_generators(I).generators()
    for ms in primary_decomposition(I):
        assert all(ms.mask & g.mask for g in mingens)
        for v in ms.vars:
            smaller = ms.mask & ~(1 << (v - 1))
            assert any(not smaller & g.mask for g in mingens)


@given(ideals)
def test_minimal_generators_idempotent_antichain(data):
    n, gens = data
    once = minimal_generators(SFIdeal.from_vars(gens, n))
    assert minimal_generators(once) == once
    for a, b in combinations(once.generators(), 2):
        assert not a.divides(b) and not b.divides(a)


@given(ideals)
def test_prime_iff_single_component(data):
    n, gens = data
    I = SFIdeal.from_vars(gens, n)
    assert is_prime(I) == (len(primary_decomposition(I)) == 1)


def test_too_many_variables():
    with pytest.raises(ValueError):
        SFIdeal.from_vars([(65,)], 64)
    with pytest.raises(ValueError):
        pair_monomial((0,) * 65, (1,) * 65)
