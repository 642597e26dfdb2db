import itertools
import math
import random
from fractions import Fraction as Q

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ehrhart.arith import det, matvec, rational_solve
from ehrhart.corpus import CORPUS
from ehrhart.oracle import EnumerationTooLarge, closed_count
from ehrhart.polytope import (
    Chart,
    Polytope,
    PolytopeError,
    affine_index,
    classify_faces,
    contains,
    face_lattice,
    faces,
    facets,
    general_position_translate,
    hyperplane_normalize,
    i_index,
    i_indices,
    lattice_normalize,
    unimodular_completion,
)

SQUARE = Polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
SQUARE_12 = Polytope([(1, 1), (2, 1), (1, 2), (2, 2)])
SIMPLEX_3 = Polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def simplex(d):
    return Polytope([tuple(int(i == j) for j in range(d)) for i in range(-1, d)])


rationals = st.builds(Q, st.integers(-4, 8), st.sampled_from([1, 2, 3, 4]))
small_rationals = st.builds(Q, st.integers(-2, 4), st.sampled_from([1, 2]))


@st.composite
def polytopes(draw, max_dim=3, full=False, coords=rationals):
    n = draw(st.integers(1, max_dim))
    k = draw(st.integers(1, n + 3))
    pts = draw(st.lists(st.tuples(*[coords] * n), min_size=k, max_size=k))
    P = Polytope(pts)
    if full and P.dim < n:
        # a simplex always works as a fallback
        P = Polytope([tuple(Q(int(i == j)) + pts[0][j] for j in range(n)) for i in range(-1, n)])
    return P


def test_constructor_reduces_to_vertices():
    P = Polytope([(0, 0), (2, 0), (0, 2), (1, 1), (1, 0), (Q(1, 2), Q(1, 2))])
    assert P.vertices == ((0, 0), (0, 2), (2, 0))
    assert P.dim == 2 and P.is_full_dimensional
    assert Polytope([(1, 1), (1, 1)]).dim == 0
    assert Polytope([("1/2", "3")]).vertices == ((Q(1, 2), 3),)
    with pytest.raises(PolytopeError):
        Polytope([(0.5, 1)])
    with pytest.raises(PolytopeError):
        Polytope([(0, 0), (1,)])
    with pytest.raises(PolytopeError):
        Polytope([])


def test_facets_examples():
    fs = facets(SQUARE)
    assert sorted(f.normal for f in fs) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert len(facets(SIMPLEX_3)) == 4
    got = sorted((f.normal, f.offset) for f in facets(SQUARE_12))
    assert got == [((-1, 0), -1), ((0, -1), -1), ((0, 1), 2), ((1, 0), 2)]
    with pytest.raises(PolytopeError):
        facets(Polytope([(0, 0), (1, 1)]))


def test_face_lattice_examples():
    assert len(face_lattice(SQUARE)) == 9
    for d in range(1, 5):
        counts = {}
        for f in face_lattice(simplex(d)):
            counts[f.dim] = counts.get(f.dim, 0) + 1
        assert counts == {k: math.comb(d + 1, k + 1) for k in range(d + 1)}


@pytest.mark.parametrize("entry", [e for e in CORPUS if e.polytope.dim >= 1], ids=lambda e: e.name)
def test_euler_relation(entry):
    P = entry.polytope
    proper = [f for f in faces(P) if f.dim < P.dim]
    assert sum((-1) ** f.dim for f in proper) == 1 - (-1) ** P.dim


def _in_hull_barycentric(P, x):
    d = P.dim
    for simplex_ in itertools.combinations(P.vertices, d + 1):
        M = [[v[i] for v in simplex_] for i in range(P.ambient_dim)] + [[1] * (d + 1)]
        lam = rational_solve(M, list(x) + [1])
        if lam is not None and all(c >= 0 for c in lam):
            # rational_solve fixes free variables at 0, so degenerate simplices are fine
            return True
    return False


@pytest.mark.parametrize("name", ["hexagon", "cross-polytope", "random-3d-0", "triangle-quarter"])
def test_facet_membership_matches_barycentric(name):
    P = next(e.polytope for e in CORPUS if e.name == name)
    rng = random.Random(name)
    lo = [min(v[i] for v in P.vertices) - 1 for i in range(P.ambient_dim)]
    hi = [max(v[i] for v in P.vertices) + 1 for i in range(P.ambient_dim)]
    fs = facets(P)
    for _ in range(250):
        x = tuple(l + (h - l) * Q(rng.randint(0, 24), 24) for l, h in zip(lo, hi))
        by_facets = all(f.value(x) <= f.offset for f in fs)
        assert by_facets == _in_hull_barycentric(P, x)
        assert contains(P, x) == by_facets


@settings(max_examples=40, deadline=None)
@given(polytopes(full=True))
def test_facets_are_sound(P):
    for f in facets(P):
        assert math.gcd(*f.normal) == 1
        for k, v in enumerate(P.vertices):
            assert f.value(v) <= f.offset
            assert (f.value(v) == f.offset) == (k in f.incident_vertices)


def test_classify_square_12():
    visible, hidden = classify_faces(SQUARE_12)
    fs = facets(SQUARE_12)

    def verts(face):
        return sorted(SQUARE_12.vertices[k] for k in face.vertex_indices)

    assert sorted(fs[next(iter(f.containing_facets))].normal for f in visible if f.dim == 1) == [(-1, 0), (0, -1)]
    assert sorted(fs[next(iter(f.containing_facets))].normal for f in hidden if f.dim == 1) == [(0, 1), (1, 0)]
    assert [verts(f) for f in visible if f.dim == 0] == [[(1, 1)]]
    assert [verts(f) for f in hidden if f.dim == 0] == [[(2, 2)]]
    with pytest.raises(PolytopeError):
        classify_faces(SQUARE)
    with pytest.raises(PolytopeError):
        classify_faces(Polytope([(1, 1), (2, 3)]))


@settings(max_examples=30, deadline=None)
@given(polytopes(full=True))
def test_classify_partition_and_visibility(P):
    shifted, z = general_position_translate(P)
    assert all(isinstance(c, int) for c in z)
    visible, hidden = classify_faces(shifted)
    assert not set(map(id, visible)) & set(map(id, hidden))
    fs = facets(shifted)
    d = shifted.dim
    facet_faces = [f for f in visible + hidden if f.dim == d - 1]
    assert len(facet_faces) == len(fs)
    # for a visible face, segments from the origin to its points stay outside P
    for F in visible:
        a = [sum(shifted.vertices[k][i] for k in F.vertex_indices) / len(F.vertex_indices)
             for i in range(d)]
        for lam in (Q(1, 3), Q(2, 3), Q(99, 100)):
            assert not contains(shifted, [lam * c for c in a])


def test_general_position_square():
    shifted, z = general_position_translate(SQUARE)
    assert shifted == SQUARE.translate(z)
    origin = (0, 0)
    assert not contains(shifted, origin)
    for f in faces(shifted):
        if f.dim < 2:
            pts = [shifted.vertices[k] for k in f.vertex_indices]
            M = [[p[i] - pts[0][i] for p in pts[1:]] for i in range(2)]
            # the origin is not of the form pts[0] + M lam
            if M[0]:
                assert rational_solve(M, [-pts[0][0], -pts[0][1]]) is None
            else:
                assert pts[0] != origin


@settings(max_examples=30, deadline=None)
@given(polytopes(full=True))
def test_general_position_invariant(P):
    shifted, _ = general_position_translate(P)
    origin = (0,) * P.ambient_dim
    assert not contains(shifted, origin)
    for f in faces(shifted):
        if f.dim < shifted.dim:
            assert not Chart([shifted.vertices[k] for k in f.vertex_indices]).contains(origin)


def test_general_position_is_deterministic():
    P = next(e.polytope for e in CORPUS if e.name == "random-3d-1")
    assert general_position_translate(P) == general_position_translate(P)


def test_lattice_normalize_examples():
    T, image = lattice_normalize(Polytope([(0, Q(1, 2)), (Q(1, 2), 0)]))
    assert T.s_prime == 2 and image.ambient_dim == 1 and image.is_full_dimensional
    assert affine_index([(0, Q(1, 2)), (Q(1, 2), 0)]) == 2
    T, image = lattice_normalize(SQUARE_12)
    assert T.s_prime == 1 and abs(det(T.R)) == 1 and image == SQUARE_12
    T, image = lattice_normalize(Polytope([(Q(1, 2), Q(1, 3))]))
    assert T.s_prime == 6 and image.ambient_dim == 0 and image.vertices == ((),)


@pytest.mark.parametrize("entry", [e for e in CORPUS if 0 < e.polytope.dim < e.polytope.ambient_dim],
                         ids=lambda e: e.name)
def test_lattice_normalize_bijective(entry):
    P = entry.polytope
    T, image = lattice_normalize(P)
    s = T.s_prime
    assert image.is_full_dimensional and image.ambient_dim == P.dim
    chart = Chart([tuple(s * x for x in v) for v in P.vertices])
    # lattice points of the hull map to lattice points and back
    hits = 0
    for z in itertools.product(range(-6, 7), repeat=P.ambient_dim):
        if chart.contains(z):
            hits += 1
            w = T.forward(z)
            assert all(c.denominator == 1 for c in w)
            assert T.inverse(w) == tuple(Q(c) for c in z)
    assert hits > 0
    for w in itertools.product(range(-3, 4), repeat=P.dim):
        x = T.inverse(w)
        assert all(c.denominator == 1 for c in x) and chart.contains(x)
        assert T.forward(x) == tuple(Q(c) for c in w)
    # and the counts of the dilates agree
    for t in range(1, 5):
        assert closed_count(image, t) == closed_count(Polytope([tuple(s * x for x in v) for v in P.vertices]), t)


def test_i_index_examples():
    half = Polytope([(0,), (Q(1, 2),)])
    assert i_index(half, 1) == 1 and i_index(half, 0) == 2
    assert i_indices(SIMPLEX_3) == [1, 1, 1, 1]
    with pytest.raises(PolytopeError):
        i_index(half, 2)


@settings(max_examples=40, deadline=None)
@given(polytopes())
def test_i_index_divisibility_chain(P):
    s = i_indices(P)
    for i in range(len(s) - 1):
        assert s[i] % s[i + 1] == 0


def test_hyperplane_normalize_examples():
    U, a, b, qbar = hyperplane_normalize(Polytope([(0, 0), (0, 1), (1, 1)]))
    assert U[-1] == [0, 1] and (a, b) == (1, 1)
    assert sorted(v[-1] for v in qbar.vertices) == [1, 1]
    # base on 2x + 3y = 5/2
    pyr = Polytope([(0, 0), (Q(5, 4), 0), (Q(-1, 4), 1)])
    U, a, b, qbar = hyperplane_normalize(pyr)
    assert (a, b) == (5, 2) and U[-1] == [2, 3] and abs(det(U)) == 1
    assert all(v[-1] == 1 for v in qbar.vertices)
    with pytest.raises(PolytopeError):
        hyperplane_normalize(Polytope([(1, 0), (0, 1), (1, 1)]))
    with pytest.raises(PolytopeError):
        hyperplane_normalize(Polytope([(0, 0), (1, 0)]))


@settings(max_examples=25, deadline=None)
@given(polytopes(max_dim=3, full=True, coords=small_rationals))
def test_hyperplane_normalize_preserves_counts(P):
    shifted, _ = general_position_translate(P)
    F = max((f for f in face_lattice(shifted) if f.dim == shifted.dim - 1),
            key=lambda f: sorted(f.vertex_indices))
    origin = (Q(0),) * shifted.ambient_dim
    pyr = Polytope([origin] + [shifted.vertices[k] for k in F.vertex_indices])
    U, a, b, qbar = hyperplane_normalize(pyr)
    assert all(v[-1] == 1 for v in qbar.vertices)
    image = Polytope([matvec(U, v) for v in pyr.vertices])
    for t in range(1, 7):
        try:
            expected = closed_count(pyr, t)
            got = closed_count(image, t)
        except EnumerationTooLarge:
            assume(False)
        assert expected == got


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4).filter(lambda c: math.gcd(*c) == 1))
def test_unimodular_completion(c):
    W = unimodular_completion(c)
    assert W[-1] == list(c) and abs(det(W)) == 1
