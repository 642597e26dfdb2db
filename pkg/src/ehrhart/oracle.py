"""Brute-force lattice point counts of dilates, the ground truth for tests.

Deliberately simple: walk every integer point in the bounding box of ``tP``
and test membership exactly.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

from .polytope import Polytope, relative_facets

CLOSED = "closed"
INTERIOR = "relative-interior"

DEFAULT_CAP = 10**7


class EnumerationTooLarge(RuntimeError):
    pass


def enumeration_cap() -> int:
    return int(os.environ.get("EHRHART_ORACLE_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class CountRequest:
    polytope: Polytope
    dilate: int
    mode: str = CLOSED

    def __post_init__(self):
        if self.dilate < 0:
            raise ValueError("dilate must be nonnegative")
        if self.mode not in (CLOSED, INTERIOR):
            raise ValueError(f"unknown mode {self.mode!r}")


def count(req: CountRequest) -> int:
    P, t = req.polytope, req.dilate
    strict = req.mode == INTERIOR
    n = P.ambient_dim
    if P.dim == 0:
        return int(all((t * x).denominator == 1 for x in P.vertices[0]))
    if t == 0:
        # tP is the origin; its relative interior is empty unless dim 0
        return 0 if strict else 1
    chart = P.chart
    fs = relative_facets(P)
    lo = [math.floor(min(t * v[i] for v in P.vertices)) for i in range(n)]
    hi = [math.ceil(max(t * v[i] for v in P.vertices)) for i in range(n)]
    size = math.prod(h - l + 1 for l, h in zip(lo, hi))
    if size > enumeration_cap():
        raise EnumerationTooLarge(f"{size} candidate points exceed the cap {enumeration_cap()}")
    # clear denominators so the inner loop compares integers only
    eqs = [(row, t * b) for row, b in zip(chart.A, chart.beta)]
    if any(b.denominator != 1 for _, b in eqs):
        return 0
    eqs = [(row, int(b)) for row, b in eqs]
    ineqs = [(tuple(f.offset.denominator * a for a in f.normal), t * f.offset.numerator)
             for f in fs]
    coords = chart.coords
    total = 0
    for x in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if any(sum(a * c for a, c in zip(row, x)) != b for row, b in eqs):
            continue
        y = [x[i] for i in coords]
        ok = True
        for normal, off in ineqs:
            v = sum(a * c for a, c in zip(normal, y))
            if (v >= off) if strict else (v > off):
                ok = False
                break
        total += ok
    return total


def closed_count(P: Polytope, t: int) -> int:
    return count(CountRequest(P, t, CLOSED))


def interior_count(P: Polytope, t: int) -> int:
    return count(CountRequest(P, t, INTERIOR))


def boundary_count(P: Polytope, t: int) -> int:
    if P.dim == 0:
        return 0
    return closed_count(P, t) - interior_count(P, t)


__all__ = [
    "CLOSED",
    "INTERIOR",
    "CountRequest",
    "EnumerationTooLarge",
    "boundary_count",
    "closed_count",
    "count",
    "interior_count",
]
