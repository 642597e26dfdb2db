import itertools
from fractions import Fraction as Q

import pytest

from ehrhart.corpus import CORPUS, by_name
from ehrhart.oracle import (
    CLOSED,
    INTERIOR,
    CountRequest,
    EnumerationTooLarge,
    boundary_count,
    closed_count,
    count,
    interior_count,
)
from ehrhart.polytope import Polytope

SIMPLEX_2 = Polytope([(0, 0), (1, 0), (0, 1)])


def test_examples():
    assert count(CountRequest(SIMPLEX_2, 2, CLOSED)) == 6
    assert count(CountRequest(SIMPLEX_2, 3, INTERIOR)) == 1
    for e in CORPUS:
        assert closed_count(e.polytope, 0) == 1
    assert boundary_count(Polytope([(0,), (1,)]), 5) == 2
    square = by_name("unit-square")
    assert (closed_count(square, 2), interior_count(square, 2), boundary_count(square, 2)) == (9, 1, 8)


def test_points():
    P = Polytope([(Q(1, 2), Q(3, 2))])
    assert [closed_count(P, t) for t in range(5)] == [1, 0, 1, 0, 1]
    assert [interior_count(P, t) for t in range(5)] == [1, 0, 1, 0, 1]
    assert all(boundary_count(P, t) == 0 for t in range(5))


def test_relative_interior_of_flat_polytopes():
    seg = Polytope([(0, 0, 0), (2, 2, 2)])
    assert [interior_count(seg, t) for t in range(1, 4)] == [1, 3, 5]
    tri = by_name("triangle-in-3d")
    # points of x+y+z = t with every coordinate positive
    for t in range(1, 6):
        expected = sum(1 for x, y in itertools.product(range(1, t), repeat=2) if t - x - y >= 1)
        assert interior_count(tri, t) == expected
    # a hull without lattice points at odd dilates
    lifted = by_name("triangle-at-height-half")
    assert closed_count(lifted, 3) == 0 and closed_count(lifted, 2) == 6


def test_request_validation():
    with pytest.raises(ValueError):
        CountRequest(SIMPLEX_2, -1)
    with pytest.raises(ValueError):
        CountRequest(SIMPLEX_2, 1, "open")


def test_cap(monkeypatch):
    monkeypatch.setenv("EHRHART_ORACLE_CAP", "100")
    with pytest.raises(EnumerationTooLarge, match="exceed the cap 100"):
        closed_count(by_name("unit-cube"), 10)


@pytest.mark.parametrize("entry", [e for e in CORPUS if e.polytope.denominator == 1], ids=lambda e: e.name)
def test_monotone_for_integral(entry):
    counts = [closed_count(entry.polytope, t) for t in range(5)]
    assert counts == sorted(counts)


def test_closed_is_interior_plus_boundary():
    for e in CORPUS[:25]:
        for t in range(1, 4):
            P = e.polytope
            assert closed_count(P, t) == interior_count(P, t) + boundary_count(P, t)
