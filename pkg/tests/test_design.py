import itertools

import pytest
from hypothesis import given, settings

from conftest import EGFR, EX32_U, EX32_V, data_sets, input_sets
from wiringdesign.design import (
    DataSet,
    InputSet,
    ParseError,
    brute_force_counterexample,
    brute_force_unique,
    find_diagonals,
    guaranteed_unique_minset,
    minsets,
    nondisposable_ideal,
    pair_monomials,
    read_data,
    read_points,
)
from wiringdesign.gf import ResourceLimitError, parse_point
from wiringdesign.monomials import minimal_generators


def strs(items):
    return [str(x) for x in items]


def data(*rows, p=2):
    return DataSet.from_pairs([(parse_point(s, p), t) for s, t in rows], p)


def test_pair_monomials_unique_example():
    recs = pair_monomials(EX32_V)
    assert [(r.i, r.j) for r in recs] == list(itertools.combinations(range(4), 2))
    assert strs(r.monomial for r in recs) == ["x1", "x1", "x1x3", "x1", "x1x3", "x3"]


def test_pair_monomials_nonunique_example():
    # (002, 200) and (002, 201) both differ in x1 and x3
    recs = pair_monomials(EX32_U)
    assert strs(r.monomial for r in recs) == ["x1x2x3", "x2x3", "x2", "x1x3", "x1x3", "x3"]


def test_pair_monomials_single_pair():
    assert strs(r.monomial for r in pair_monomials(InputSet(((0, 0), (0, 1))))) == ["x2"]


def test_nondisposable_ideal_egfr():
    D = DataSet.from_pairs(EGFR)
    assert str(minimal_generators(nondisposable_ideal(D))) == "<x1x2, x1x3, x2x3>"


def test_nondisposable_ideal_constant_outputs():
    D = data(("000", 1), ("101", 1), ("110", 1))
    assert nondisposable_ideal(D).is_zero
    assert strs(minsets(D)) == ["{}"]


def test_nondisposable_ideal_extra_point():
    D = DataSet.from_pairs(EGFR + [((0, 1, 0), 0)])
    gens = strs(nondisposable_ideal(D).generators())
    for g in ("x2", "x1x2x3", "x3"):
        assert g in gens


def test_minsets_examples():
    assert strs(minsets(DataSet.from_pairs(EGFR))) == ["{x1,x2}", "{x1,x3}", "{x2,x3}"]
    D1 = data(("000", 1), ("001", 1), ("010", 0), ("100", 1))
    assert strs(minsets(D1)) == ["{x2}"]
    D2 = data(("000", 1), ("101", 1), ("110", 0), ("011", 1))
    assert strs(minsets(D2)) == ["{x1,x2}", "{x1,x3}", "{x2,x3}"]


def test_guaranteed_unique_example_v():
    assert guaranteed_unique_minset(EX32_V).guaranteed_unique


def test_guaranteed_unique_example_u():
    verdict = guaranteed_unique_minset(EX32_U)
    assert not verdict.guaranteed_unique
    assert str(verdict.monomial) == "x1x2x3"
    assert verdict.pair == (0, 1)
    # t1 = t4 from x2, t3 = t4 from x3
    assert sorted(verdict.equalities) == [(0, 3), (2, 3)]
    assert len(minsets(DataSet(EX32_U, verdict.witness))) >= 2


def test_guaranteed_unique_hamming_ball():
    V = InputSet(((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)))
    assert guaranteed_unique_minset(V).guaranteed_unique
    # the oracle: all 16 output assignments give one minset
    assert all(len(minsets(DataSet(V, T))) == 1 for T in itertools.product((0, 1), repeat=4))


def test_single_point_is_unique():
    assert guaranteed_unique_minset(InputSet(((1, 0),))).guaranteed_unique
    assert strs(minsets(DataSet(InputSet(((1, 0),)), (1,)))) == ["{}"]


def test_brute_force_examples():
    assert brute_force_unique(EX32_V)
    assert not brute_force_unique(EX32_U)
    assert brute_force_unique(InputSet(((0, 0), (0, 1))))


def test_u_with_outputs_0200():
    # the two minsets are {x1} and {x3}; no output assignment on U gives {x2}, {x3}
    assert strs(minsets(DataSet(EX32_U, (0, 2, 0, 0)))) == ["{x1}", "{x3}"]
    for T in itertools.product(range(3), repeat=4):
        assert strs(minsets(DataSet(EX32_U, T))) != ["{x2}", "{x3}"]


def test_brute_force_guard():
    V = InputSet(tuple(itertools.product(range(2), repeat=5)))
    with pytest.raises(ResourceLimitError):
        brute_force_unique(V, limit=1000)


def test_find_diagonals():
    assert find_diagonals(EX32_U) == [(0, 0, 2)]
    assert find_diagonals(EX32_V) == []
    V2 = InputSet(((0, 0, 0), (1, 0, 1), (1, 1, 0), (0, 1, 1)))
    assert find_diagonals(V2) == list(V2.points)


@settings(max_examples=150, deadline=None)
@given(input_sets(max_n=4, max_m=5))
def test_decision_matches_brute_force(V):
    verdict = guaranteed_unique_minset(V)
    assert verdict.guaranteed_unique == brute_force_unique(V)
    if not verdict.guaranteed_unique:
        assert len(minsets(DataSet(V, verdict.witness))) >= 2


@settings(max_examples=150, deadline=None)
@given(input_sets(max_n=4, max_m=5))
def test_diagonals_force_multiple_minsets(V):
    unique = guaranteed_unique_minset(V).guaranteed_unique
    if find_diagonals(V):
        assert not unique
        assert brute_force_counterexample(V) is not None
    if unique:
        assert find_diagonals(V) == []


@settings(max_examples=200, deadline=None)
@given(data_sets(max_n=4, max_m=6))
def test_minsets_nonempty_antichain(D):
    ms = minsets(D)
    assert ms
    for a, b in itertools.combinations(ms, 2):
        assert not a.divides(b) and not b.divides(a)


def test_input_set_validation():
    with pytest.raises(ValueError):
        InputSet(((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        InputSet(((0, 1), (0, 1, 1)))
    with pytest.raises(ValueError):
        DataSet(InputSet(((0, 1),)), (0, 1))


def test_read_files():
    D = read_data(["# EGFR", "000 1", "101 1", "", "110 0", "011 1"])
    assert D == DataSet.from_pairs(EGFR)
    V = read_points(["211", "002", "200", "201"], p=3)
    assert V == EX32_U
    with pytest.raises(ParseError, match="line 2"):
        read_data(["000 1", "10 1 1"])
    with pytest.raises(ParseError, match="line 1"):
        read_points(["0a1"])
