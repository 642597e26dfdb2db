"""The fixed test corpus: small rational polytopes of dimension 0 to 4.

Hand-picked entries cover every dimension/ambient-dimension pair up to 3,
lattice and non-lattice affine hulls, and vertex denominators up to 4.  A few
seeded random polytopes and random 4-simplices are appended; the seeds are
fixed, so the corpus is the same on every run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as Q

from .polytope import Polytope


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    polytope: Polytope


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240611
    random_2d: int = 3
    random_3d: int = 3
    random_4d_simplices: int = 3
    denominators: tuple = (1, 2, 4)
    coord_range: tuple = (-2, 4)
    simplex_range: tuple = (0, 2)


def _h(x: int) -> Q:
    return Q(x, 2)


_HAND_PICKED = [
    # dimension 0
    ("point-integral", [(3,)]),
    ("point-half", [(Q(1, 2),)]),
    ("point-half-half", [(Q(1, 2), Q(1, 2))]),
    ("point-quarters-3d", [(Q(1, 4), Q(1, 2), Q(3, 4))]),
    # dimension 1
    ("unit-segment", [(0,), (1,)]),
    ("half-segment", [(0,), (Q(1, 2),)]),
    ("segment-third-to-two", [(Q(1, 3),), (2,)]),
    ("segment-diagonal-2d", [(0, 0), (1, 2)]),
    ("segment-offset-2d", [(Q(1, 2), 0), (Q(3, 2), 1)]),
    ("segment-3d", [(0, 0, 0), (Q(1, 2), Q(1, 4), 1)]),
    ("segment-vertical-3d", [(Q(1, 2), Q(1, 2), 0), (Q(1, 2), Q(1, 2), 1)]),
    # dimension 2
    ("simplex-2", [(0, 0), (1, 0), (0, 1)]),
    ("unit-square", [(0, 0), (1, 0), (0, 1), (1, 1)]),
    ("square-1-2", [(1, 1), (2, 1), (1, 2), (2, 2)]),
    ("rectangle-half-third", [(0, 0), (Q(1, 2), 0), (0, Q(1, 3)), (Q(1, 2), Q(1, 3))]),
    ("triangle-rational", [(0, 0), (Q(3, 2), 0), (0, Q(3, 4))]),
    ("triangle-quarter", [(Q(1, 4), 0), (1, Q(3, 4)), (0, 1)]),
    ("triangle-half", [(Q(1, 2), 0), (0, Q(1, 2)), (Q(3, 2), Q(3, 2))]),
    ("hexagon", [(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]),
    ("triangle-in-3d", [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ("triangle-at-height-half", [(0, 0, Q(1, 2)), (1, 0, Q(1, 2)), (0, 1, Q(1, 2))]),
    ("quadrilateral-tilted-3d", [(0, 0, 0), (1, 0, Q(1, 4)), (0, 1, Q(1, 4)), (1, 1, Q(1, 2))]),
    # dimension 3
    ("simplex-3", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ("unit-cube", [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]),
    ("cross-polytope", [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]),
    ("reeve-2", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)]),
    ("half-cube", [(_h(x), _h(y), _h(z)) for x in (0, 1) for y in (0, 1) for z in (0, 1)]),
    ("half-cross-polytope", [(_h(1), 0, 0), (_h(-1), 0, 0), (0, _h(1), 0), (0, _h(-1), 0),
                             (0, 0, _h(1)), (0, 0, _h(-1))]),
    ("tetrahedron-2-3-4", [(0, 0, 0), (Q(1, 2), 0, 0), (0, Q(1, 3), 0), (0, 0, Q(1, 4))]),
    ("simplex-centered-half", [(_h(1), _h(1), _h(1)), (_h(3), _h(1), _h(1)),
                               (_h(1), _h(3), _h(1)), (_h(1), _h(1), _h(3))]),
    ("prism-half", [(x, y, z) for (x, y) in ((0, 0), (1, 0), (0, 1)) for z in (0, Q(1, 2))]),
    # dimension 4
    ("simplex-4", [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
]


def _random_polytope(rng: random.Random, n: int, k: int, cfg: CorpusConfig) -> Polytope:
    lo, hi = cfg.coord_range
    while True:
        pts = [tuple(Q(rng.randint(lo, hi), rng.choice(cfg.denominators)) for _ in range(n))
               for _ in range(k)]
        P = Polytope(pts)
        if P.dim == n:
            return P


def random_simplex(rng: random.Random, n: int, lo: int, hi: int) -> Polytope:
    """A full-dimensional lattice simplex with coordinates in ``[lo, hi]``."""
    while True:
        P = Polytope([tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(n + 1)])
        if P.dim == n and len(P.vertices) == n + 1:
            return P


def build_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[CorpusEntry]:
    out = [CorpusEntry(name, Polytope(pts)) for name, pts in _HAND_PICKED]
    rng = random.Random(cfg.seed)
    for i in range(cfg.random_2d):
        out.append(CorpusEntry(f"random-2d-{i}", _random_polytope(rng, 2, 4, cfg)))
    for i in range(cfg.random_3d):
        out.append(CorpusEntry(f"random-3d-{i}", _random_polytope(rng, 3, 4, cfg)))
    lo, hi = cfg.simplex_range
    for i in range(cfg.random_4d_simplices):
        out.append(CorpusEntry(f"random-simplex-4d-{i}", random_simplex(rng, 4, lo, hi)))
    return out


CORPUS = build_corpus()


def by_name(name: str) -> Polytope:
    for entry in CORPUS:
        if entry.name == name:
            return entry.polytope
    raise KeyError(name)
