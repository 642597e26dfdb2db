"""Rational polytopes in V-representation and the lattice geometry around them.

Facets come from a brute-force search over affinely independent vertex
subsets; faces are intersections of facet vertex sets.  That is plenty for
the low dimensions this package targets and keeps everything exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .arith import (
    affine_rank,
    divisors,
    hermite_normal_form,
    integer_inverse,
    kernel_basis,
    lcm,
    lcm_denominators,
    lll_reduce,
    matmul,
    matvec,
    primitive,
    rank,
    rational_solve,
    rref,
    solve_integer_affine,
    transpose,
)


class PolytopeError(ValueError):
    pass


def _vec(p) -> tuple[Fraction, ...]:
    if any(isinstance(x, float) for x in p):
        # 0.1 would silently become 3602879701896397/36028797018963968
        raise PolytopeError("coordinates must be exact (int, Fraction or 'p/q'), not float")
    return tuple(Fraction(x) for x in p)


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: Fraction
    incident_vertices: frozenset

    def value(self, x) -> Fraction:
        return _dot(self.normal, x)


@dataclass(frozen=True)
class Face:
    vertex_indices: frozenset
    dim: int
    containing_facets: frozenset


def _hull_facets(points: Sequence[tuple], d: int) -> list[Facet]:
    """Facets of the hull of a full-dimensional point set in R^d."""
    if d == 0:
        return []
    found: dict[tuple, Facet] = {}
    for subset in itertools.combinations(range(len(points)), d):
        base = points[subset[0]]
        diffs = [[x - y for x, y in zip(points[k], base)] for k in subset[1:]]
        if diffs and rank(diffs) != d - 1:
            continue
        ker = kernel_basis(diffs, d)
        if len(ker) != 1:
            continue
        normal = ker[0]
        off = _dot(normal, base)
        vals = [_dot(normal, p) for p in points]
        if all(v <= off for v in vals):
            pass
        elif all(v >= off for v in vals):
            normal = tuple(-c for c in normal)
            off = -off
        else:
            continue
        key = (normal, off)
        if key not in found:
            inc = frozenset(k for k, p in enumerate(points) if _dot(normal, p) == off)
            found[key] = Facet(normal, off, inc)
    return sorted(found.values(), key=lambda f: (sorted(f.incident_vertices), f.normal))


class Chart:
    """Affine hull of a point set: its equations and an injective projection.

    ``equations`` is ``(A, beta)`` with ``aff = {x : A x = beta}`` and ``A``
    primitive integer rows.  ``coords`` lists the coordinate indices that
    parametrize the hull, so ``project`` is an affine bijection onto R^dim.
    """

    def __init__(self, points: Sequence[tuple]):
        self.ambient_dim = len(points[0])
        self.base = points[0]
        diffs = [[x - y for x, y in zip(p, self.base)] for p in points[1:]]
        if diffs and any(any(r) for r in diffs):
            _, pivots = rref(diffs)
        else:
            pivots = []
        self.coords = list(pivots)
        self.dim = len(pivots)
        if self.dim == self.ambient_dim:
            self.A: list[tuple[int, ...]] = []
        elif diffs and pivots:
            self.A = kernel_basis(diffs, self.ambient_dim)
        else:
            self.A = kernel_basis([], self.ambient_dim)
        self.beta = tuple(_dot(row, self.base) for row in self.A)

    def project(self, x) -> tuple[Fraction, ...]:
        return tuple(Fraction(x[i]) for i in self.coords)

    def contains(self, x) -> bool:
        return all(_dot(row, x) == b for row, b in zip(self.A, self.beta))


@dataclass(frozen=True, eq=True)
class Polytope:
    """Convex hull of finitely many rational points, stored by its vertices."""

    ambient_dim: int
    vertices: tuple

    def __init__(self, points: Iterable[Sequence], ambient_dim: Optional[int] = None):
        pts = sorted(set(_vec(p) for p in points))
        if not pts:
            raise PolytopeError("a polytope needs at least one point")
        n = len(pts[0]) if ambient_dim is None else ambient_dim
        if any(len(p) != n for p in pts):
            raise PolytopeError("points have inconsistent dimensions")
        object.__setattr__(self, "ambient_dim", n)
        object.__setattr__(self, "vertices", tuple(_extreme_points(pts)))

    @classmethod
    def trusted(cls, vertices: Iterable[Sequence], ambient_dim: Optional[int] = None) -> "Polytope":
        """Skip vertex reduction; callers guarantee every point is a vertex."""
        pts = sorted(set(_vec(p) for p in vertices))
        self = object.__new__(cls)
        object.__setattr__(self, "ambient_dim", len(pts[0]) if ambient_dim is None else ambient_dim)
        object.__setattr__(self, "vertices", tuple(pts))
        return self

    def __repr__(self) -> str:
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope([{vs}])"

    @cached_property
    def chart(self) -> Chart:
        return Chart(self.vertices)

    @property
    def dim(self) -> int:
        return self.chart.dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def denominator(self) -> int:
        """Smallest ``D`` with ``D * P`` integral."""
        return lcm_denominators(x for v in self.vertices for x in v)

    def translate(self, shift) -> "Polytope":
        return Polytope.trusted([tuple(x + s for x, s in zip(v, shift)) for v in self.vertices],
                                self.ambient_dim)

    def dilate(self, r) -> "Polytope":
        r = Fraction(r)
        if r <= 0:
            raise PolytopeError("dilation factor must be positive")
        return Polytope.trusted([tuple(r * x for x in v) for v in self.vertices], self.ambient_dim)

    def subpolytope(self, indices) -> "Polytope":
        return Polytope.trusted([self.vertices[k] for k in sorted(indices)], self.ambient_dim)

    @cached_property
    def _facets(self) -> list[Facet]:
        return _hull_facets(list(self.vertices), self.ambient_dim)

    @cached_property
    def _faces(self) -> list[Face]:
        return _face_lattice(self)


def _extreme_points(pts: list[tuple]) -> list[tuple]:
    if len(pts) == 1:
        return pts
    chart = Chart(pts)
    d = chart.dim
    proj = [chart.project(p) for p in pts]
    if d == 0:
        return pts[:1]
    fs = _hull_facets(proj, d)
    keep = []
    for k, p in enumerate(pts):
        normals = [f.normal for f in fs if k in f.incident_vertices]
        if normals and rank(normals) == d:
            keep.append(p)
    return keep


def facets(P: Polytope) -> list[Facet]:
    """Facets ``<normal, x> <= offset`` of a full-dimensional polytope."""
    if not P.is_full_dimensional:
        raise PolytopeError("facets() needs a full-dimensional polytope")
    return P._facets


def relative_facets(P: Polytope) -> list[Facet]:
    """Facets of P inside its affine hull, in ``P.chart`` coordinates."""
    if P.is_full_dimensional:
        return P._facets
    return _hull_facets([P.chart.project(v) for v in P.vertices], P.dim)


def _face_lattice(P: Polytope) -> list[Face]:
    d = P.dim
    everything = frozenset(range(len(P.vertices)))
    if d == 0:
        return [Face(everything, 0, frozenset())]
    fs = relative_facets(P)
    sets = [f.incident_vertices for f in fs]
    seen = set(sets)
    frontier = list(seen)
    while frontier:
        new = []
        for face in frontier:
            for fac in sets:
                meet = face & fac
                if meet and meet not in seen:
                    seen.add(meet)
                    new.append(meet)
        frontier = new
    out = []
    for vs in seen:
        pts = [P.vertices[k] for k in sorted(vs)]
        out.append(Face(vs, affine_rank(pts), frozenset(k for k, s in enumerate(sets) if vs <= s)))
    out.append(Face(everything, d, frozenset()))
    return sorted(out, key=lambda f: (f.dim, sorted(f.vertex_indices)))


def face_lattice(P: Polytope) -> list[Face]:
    """All nonempty faces of ``P``, ``P`` itself last."""
    if not P.is_full_dimensional:
        raise PolytopeError("face_lattice() needs a full-dimensional polytope")
    return P._faces


def faces(P: Polytope) -> list[Face]:
    """Like :func:`face_lattice` but accepts lower-dimensional polytopes."""
    return P._faces


def face_polytope(P: Polytope, face: Face) -> Polytope:
    return P.subpolytope(face.vertex_indices)


def classify_faces(P: Polytope) -> tuple[list[Face], list[Face]]:
    """Split proper faces into those visible and hidden from the origin."""
    if not P.is_full_dimensional:
        raise PolytopeError("classify_faces() needs a full-dimensional polytope")
    fs = facets(P)
    if any(f.offset == 0 for f in fs):
        raise PolytopeError("origin lies on a facet hyperplane")
    facet_visible = [f.offset < 0 for f in fs]
    if not any(facet_visible):
        raise PolytopeError("origin lies inside the polytope")
    visible, hidden = [], []
    for face in face_lattice(P):
        if face.dim == P.dim:
            continue
        flags = [facet_visible[k] for k in face.containing_facets]
        if all(flags):
            visible.append(face)
        elif not any(flags):
            hidden.append(face)
    return visible, hidden


def _box_vectors(n: int, r: int):
    if r == 0:
        yield (0,) * n
        return
    for z in itertools.product(range(-r, r + 1), repeat=n):
        if max(abs(c) for c in z) == r:
            yield z


_SHIFT_BOX_LIMIT = 100000


def _shift_costs(fs):
    # the slice polytope of the pyramid over a facet at lattice height a/b is
    # scaled by b/a, so its denominators (and the periods) pick up a factor a
    data = [(f.normal, f.offset.numerator, f.offset.denominator) for f in fs]

    def cost(z) -> int:
        out = 1
        for n, p, q in data:
            num = p + q * sum(c * x for c, x in zip(n, z))
            out *= abs(num) // math.gcd(num, q)
        return out

    return cost


def _shift_candidates(P: Polytope):
    """Lattice points of the bounding box of ``P`` grown by one, or (for huge
    boxes) the max-norm rings around the origin until two rings past one that
    leaves ``P``."""
    ranges = [range(math.floor(min(v[i] for v in P.vertices)) - 1,
                    math.ceil(max(v[i] for v in P.vertices)) + 2)
              for i in range(P.ambient_dim)]
    if math.prod(len(r) for r in ranges) <= _SHIFT_BOX_LIMIT:
        yield from itertools.product(*ranges)
        return
    fs = facets(P)
    r, stop = 0, None
    while stop is None or r <= stop:
        for x in _box_vectors(P.ambient_dim, r):
            if stop is None and any(f.value(x) > f.offset for f in fs):
                stop = r + 1
            yield x
        r += 1


def general_position_translate(P: Polytope) -> tuple[Polytope, tuple[int, ...]]:
    """Integer shift ``z`` so the origin is outside ``P + z`` and off every
    proper face's affine hull.

    Candidates for ``-z`` are the lattice points of the bounding box of ``P``
    grown by one.  The winner minimizes the product of the facet offset
    numerators (smaller is cheaper downstream), then the max-norm of ``z``,
    then ``z`` lexicographically.
    """
    if not P.is_full_dimensional:
        raise PolytopeError("general_position_translate() needs a full-dimensional polytope")
    hulls = [Chart([P.vertices[k] for k in sorted(f.vertex_indices)])
             for f in face_lattice(P) if f.dim < P.dim]
    fs = facets(P)
    cost = _shift_costs(fs)

    def valid(x):
        return any(f.value(x) > f.offset for f in fs) and not any(h.contains(x) for h in hulls)

    best = None
    for x in _shift_candidates(P):
        z = tuple(-c for c in x)
        key = (cost(z), max(map(abs, z), default=0), z)
        if (best is None or key < best) and valid(x):
            best = key
    if best is None:  # pragma: no cover - some candidate always lies outside
        raise AssertionError("no general-position origin among the candidates")
    z = best[2]
    return P.translate(z), z


# ---------------------------------------------------------------------------
# lattice normalization of affine hulls
# ---------------------------------------------------------------------------

def affine_index(points: Sequence[Sequence]) -> int:
    """Smallest ``s >= 1`` such that ``aff(s * points)`` meets ``Z^n``."""
    chart = Chart([_vec(p) for p in points])
    if not chart.A:
        return 1
    # s * v is integral for s = lcm of the vertex denominators, and the
    # working s form a subgroup of Z, so the minimum divides that lcm
    D = lcm_denominators(x for p in points for x in p)
    for s in divisors(D):
        if solve_integer_affine(chart.A, [s * b for b in chart.beta]) is not None:
            return s
    raise AssertionError("unreachable: D itself works")  # pragma: no cover


@dataclass(frozen=True)
class LatticeNormalization:
    """``T(x) = R (x - base)`` from ``aff(s' P)`` onto ``R^m``, with inverse
    ``T^{-1}(y) = base + B y``.  Both linear parts are integer matrices and
    ``base`` is a lattice point, so ``T`` bijects the lattice points."""

    s_prime: int
    base: tuple[int, ...]
    R: tuple
    B: tuple

    @property
    def target_dim(self) -> int:
        return len(self.R)

    def forward(self, x) -> tuple[Fraction, ...]:
        return matvec(self.R, [Fraction(a) - b for a, b in zip(x, self.base)])

    def inverse(self, y) -> tuple[Fraction, ...]:
        return tuple(Fraction(b) + v for b, v in zip(self.base, matvec(self.B, y)))


def lattice_normalize(P: Polytope) -> tuple[LatticeNormalization, Polytope]:
    n = P.ambient_dim
    chart = P.chart
    s = affine_index(P.vertices)
    if not chart.A:
        eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        T = LatticeNormalization(1, (0,) * n, eye, eye)
    else:
        base = solve_integer_affine(chart.A, [s * b for b in chart.beta])
        H, U = hermite_normal_form(transpose(chart.A))
        idx = [i for i, row in enumerate(H) if not any(row)]
        # x - base = U^T y  with y supported on the zero rows of H
        UinvT = transpose(integer_inverse(U))
        # short basis vectors keep the image polytope from being needlessly skewed
        rows, V = lll_reduce([U[i] for i in idx])
        Vinv_T = transpose(integer_inverse(V)) if idx else []
        R = tuple(tuple(x) for x in matmul(Vinv_T, [UinvT[i] for i in idx])) if idx else ()
        B = tuple(tuple(col) for col in transpose(rows)) if idx else tuple(
            () for _ in range(n))
        T = LatticeNormalization(s, tuple(base), R, B)
    image = Polytope.trusted([T.forward([s * x for x in v]) for v in P.vertices], T.target_dim)
    return T, image


def i_index(P: Polytope, i: int) -> int:
    """lcm over ``i``-dimensional faces ``F`` of the least ``s`` with
    ``aff(s F)`` containing a lattice point."""
    if not 0 <= i <= P.dim:
        raise PolytopeError(f"face dimension {i} outside 0..{P.dim}")
    return lcm(*(affine_index([P.vertices[k] for k in sorted(f.vertex_indices)])
                 for f in faces(P) if f.dim == i))


def i_indices(P: Polytope) -> list[int]:
    return [i_index(P, i) for i in range(P.dim + 1)]


# ---------------------------------------------------------------------------
# pyramid normalization
# ---------------------------------------------------------------------------

def unimodular_completion(c: Sequence[int]) -> list[list[int]]:
    """Unimodular integer matrix whose last row is the primitive vector ``c``."""
    _, V = hermite_normal_form([[x] for x in c])
    W = transpose(integer_inverse(V))  # first row of W is c
    if tuple(W[0]) != tuple(c):
        raise PolytopeError("vector is not primitive")
    # any unimodular mix of the other rows, plus multiples of c, keeps the
    # last row c; reduce them so the slice coordinates stay small
    others, _ = lll_reduce(W[1:])
    cc = sum(x * x for x in c)
    others = [[x - round(Fraction(sum(a * b for a, b in zip(r, c)), cc)) * y
               for x, y in zip(r, c)] for r in others]
    return others + [list(c)]


def hyperplane_normalize(pyr: Polytope):
    """Normalize ``conv{0, Q}`` so the base lies on ``x_d = 1`` after scaling.

    Returns ``(U, a, b, Qbar)``: ``U`` unimodular with last row the primitive
    normal ``c`` of ``aff(Q)``, ``<c, Q> = a/b > 0``, and
    ``Qbar = (b/a) U(Q)``.
    """
    d = pyr.ambient_dim
    if not pyr.is_full_dimensional:
        raise PolytopeError("pyramid must be full-dimensional")
    origin = (Fraction(0),) * d
    if origin not in pyr.vertices:
        raise PolytopeError("pyramid apex must be the origin")
    base = [v for v in pyr.vertices if v != origin]
    if affine_rank(base) != d - 1:
        raise PolytopeError("pyramid base is not a facet")
    diffs = [[x - y for x, y in zip(v, base[0])] for v in base[1:]]
    (c,) = kernel_basis(diffs, d)
    q = _dot(c, base[0])
    if q == 0:
        raise PolytopeError("affine hull of the base contains the origin")
    if q < 0:
        c, q = tuple(-x for x in c), -q
    a, b = q.numerator, q.denominator
    U = unimodular_completion(c)
    scale = Fraction(b, a)
    qbar = Polytope.trusted([tuple(scale * x for x in matvec(U, v)) for v in base], d)
    return U, a, b, qbar


def pyramid(P: Polytope, face: Face) -> Polytope:
    """``conv{0, F}``; the caller guarantees the origin is off ``aff(F)``."""
    origin = (Fraction(0),) * P.ambient_dim
    return Polytope.trusted([origin] + [P.vertices[k] for k in face.vertex_indices],
                            P.ambient_dim)


def contains(P: Polytope, x, strict: bool = False) -> bool:
    """Exact membership in ``P`` (``strict``: relative interior)."""
    x = _vec(x)
    if not P.chart.contains(x):
        return False
    if P.dim == 0:
        return True
    y = P.chart.project(x)
    if strict:
        return all(f.value(y) < f.offset for f in relative_facets(P))
    return all(f.value(y) <= f.offset for f in relative_facets(P))
