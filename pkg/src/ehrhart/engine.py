"""Ehrhart quasi-polynomials by induction on dimension.

The recursion:

* a point with denominator ``D`` contributes the indicator of ``D | t``;
* a lower-dimensional polytope is carried onto a full-dimensional one in its
  own lattice, and the answer is stretched back with ``t -> t / s'``;
* a full-dimensional polytope is shifted so the origin sees it from outside,
  and split by inclusion-exclusion into pyramids ``conv{0, F}`` over its
  visible and hidden faces, plus the visible faces themselves;
* a pyramid is sliced parallel to its base, which turns its count into a
  discrete sum of the (one dimension lower) base's quasi-polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import det
from .polytope import (
    Face,
    Polytope,
    PolytopeError,
    classify_faces,
    face_lattice,
    face_polytope,
    general_position_translate,
    hyperplane_normalize,
    i_indices,
    lattice_normalize,
    pyramid,
)
from .quasipoly import (
    QuasiPolynomial,
    discrete_sum,
    minimal_period,
    qp_compose_div,
    qp_reflect,
    qp_scale,
    qp_sum,
)


@dataclass(frozen=True)
class DecompositionTerm:
    """``sign * L_{conv{0,F}}`` (kind ``"pyramid"``) or ``sign * L_F`` (``"face"``)."""

    sign: int
    kind: str
    face: Face


def signed_terms(P: Polytope) -> list[DecompositionTerm]:
    """Inclusion-exclusion terms for a full-dimensional ``P`` whose position
    relative to the origin is already general:

        L_P = sum_hidden s_F L_{conv(0,F)} - sum_visible s_F (L_{conv(0,F)} - L_F),

    with ``s_F = (-1)^(d - 1 - dim F)``.
    """
    visible, hidden = classify_faces(P)
    d = P.dim
    terms = []
    for F in hidden:
        terms.append(DecompositionTerm((-1) ** (d - 1 - F.dim), "pyramid", F))
    for F in visible:
        sign = (-1) ** (d - 1 - F.dim)
        terms.append(DecompositionTerm(-sign, "pyramid", F))
        terms.append(DecompositionTerm(sign, "face", F))
    return terms


def decomposition(P: Polytope):
    """Signed inclusion-exclusion of a full-dimensional ``P`` into pyramids.

    Returns ``(shifted, shift, terms)``; the terms describe ``shifted``,
    which has the same lattice-point counts as ``P`` for every dilate.
    """
    shifted, shift = general_position_translate(P)
    return shifted, shift, signed_terms(shifted)


def evaluate_decomposition(P: Polytope, t: int, counter) -> int:
    """Right-hand side of the inclusion-exclusion at ``t``, with every term
    counted by ``counter(polytope, t)`` (e.g. the brute-force oracle)."""
    shifted, _, terms = decomposition(P)
    total = 0
    for term in terms:
        poly = pyramid(shifted, term.face) if term.kind == "pyramid" else face_polytope(shifted, term.face)
        total += term.sign * counter(poly, t)
    return total


def _canonical_shift(P: Polytope) -> Polytope:
    low = [min(math.floor(v[i]) for v in P.vertices) for i in range(P.ambient_dim)]
    if not any(low):
        return P
    return P.translate([-x for x in low])


def _fold(f: QuasiPolynomial, period: int) -> QuasiPolynomial:
    """Restrict ``f`` to residues below ``gcd(period(f), period)``; only valid
    when that gcd is already a period of ``f``."""
    p = math.gcd(f.period, period)
    return f if p == f.period else QuasiPolynomial(f.coeffs[:p])


class _Recursion:
    """One top-level computation; memoizes sub-polytopes it has already seen."""

    def __init__(self):
        self.memo: dict = {}
        self.pyramid_memo: dict = {}

    def ehrhart(self, P: Polytope) -> QuasiPolynomial:
        P = _canonical_shift(P)
        key = (P.ambient_dim, P.vertices)
        if key not in self.memo:
            self.memo[key] = self._ehrhart(P)
        return self.memo[key]

    def _ehrhart(self, P: Polytope) -> QuasiPolynomial:
        if P.dim == 0:
            return QuasiPolynomial.indicator(P.denominator)
        if not P.is_full_dimensional:
            T, image = lattice_normalize(P)
            return qp_compose_div(self.ehrhart(image), T.s_prime)
        shifted, _, terms = decomposition(P)
        parts = []
        for term in terms:
            if term.kind == "pyramid":
                q = self.pyramid(pyramid(shifted, term.face))
            else:
                q = self.ehrhart(face_polytope(shifted, term.face))
            parts.append(qp_scale(q, term.sign))
        return _fold(qp_sum(parts), P.denominator)

    def pyramid(self, pyr: Polytope) -> QuasiPolynomial:
        key = (pyr.ambient_dim, pyr.vertices)
        if key not in self.pyramid_memo:
            self.pyramid_memo[key] = self._pyramid(pyr)
        return self.pyramid_memo[key]

    def _pyramid(self, pyr: Polytope) -> QuasiPolynomial:
        if not pyr.is_full_dimensional:
            # the apex is a lattice point of the hull, so this map is linear
            T, image = lattice_normalize(pyr)
            assert T.s_prime == 1 and not any(T.base)
            return self.pyramid(image)
        _, a, b, qbar = hyperplane_normalize(pyr)
        return discrete_sum(self.ehrhart(qbar), a, b, period=pyr.denominator)


def ehrhart_qp(P: Polytope) -> QuasiPolynomial:
    return _Recursion().ehrhart(P)


def pyramid_ehrhart(pyr: Polytope) -> QuasiPolynomial:
    """``L`` of ``conv{0, Q}`` by summing slices ``i * Qbar`` for ``i <= at/b``."""
    if not pyr.is_full_dimensional:
        raise PolytopeError("pyramid_ehrhart() needs a full-dimensional pyramid")
    return _Recursion().pyramid(pyr)


def interior_from(qp: QuasiPolynomial, dim: int) -> QuasiPolynomial:
    return qp_scale(qp_reflect(qp), (-1) ** dim)


def interior_ehrhart(P: Polytope) -> QuasiPolynomial:
    """``L_{P°}(t) = (-1)^dim(P) L_P(-t)``."""
    return interior_from(ehrhart_qp(P), P.dim)


def _pulling_triangulation(faces_below, face: Face) -> list[tuple[int, ...]]:
    if face.dim == 0:
        return [tuple(face.vertex_indices)]
    apex = min(face.vertex_indices)
    out = []
    for sub in faces_below[face.dim - 1]:
        if apex not in sub.vertex_indices and sub.vertex_indices < face.vertex_indices:
            out.extend((apex,) + simplex for simplex in _pulling_triangulation(faces_below, sub))
    return out


def exact_volume(P: Polytope) -> Fraction:
    """Euclidean volume: signed cones from an outside origin over facets."""
    if not P.is_full_dimensional:
        raise PolytopeError("exact_volume() needs a full-dimensional polytope")
    d = P.ambient_dim
    if d == 0:
        return Fraction(1)
    shifted, _ = general_position_translate(P)
    visible, hidden = classify_faces(shifted)
    by_dim: dict[int, list[Face]] = {}
    for f in face_lattice(shifted):
        by_dim.setdefault(f.dim, []).append(f)
    total = Fraction(0)
    for sign, group in ((1, hidden), (-1, visible)):
        for F in group:
            if F.dim != d - 1:
                continue
            for simplex in _pulling_triangulation(by_dim, F):
                total += sign * abs(det([shifted.vertices[k] for k in simplex]))
    return total / math.factorial(d)


@dataclass(frozen=True)
class EhrhartResult:
    qp: QuasiPolynomial
    dim: int
    ambient_dim: int
    i_indices: tuple
    interior_qp: QuasiPolynomial
    volume: Optional[Fraction] = None


def ehrhart(P: Polytope) -> EhrhartResult:
    qp = ehrhart_qp(P)
    return EhrhartResult(
        qp=qp,
        dim=P.dim,
        ambient_dim=P.ambient_dim,
        i_indices=tuple(i_indices(P)),
        interior_qp=interior_from(qp, P.dim),
        volume=exact_volume(P) if P.is_full_dimensional else None,
    )


@dataclass
class McMullenReport:
    i_indices: list
    minimal_periods: list
    leading_coefficient: Optional[Fraction] = None
    volume: Optional[Fraction] = None
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def mcmullen_check(P: Polytope, qp: Optional[QuasiPolynomial] = None) -> McMullenReport:
    """Check that ``s_i`` is a period of ``c_i`` for every ``i``."""
    if qp is None:
        qp = ehrhart_qp(P)
    s = i_indices(P)
    periods = [minimal_period(qp, i) for i in range(P.dim + 1)]
    report = McMullenReport(s, periods)
    for i, (p, si) in enumerate(zip(periods, s)):
        if si % p:
            report.violations.append(f"c_{i} has minimal period {p}, which does not divide s_{i} = {si}")
    if qp.degree > P.dim:
        report.violations.append(f"degree {qp.degree} exceeds dimension {P.dim}")
    if P.is_full_dimensional:
        lead = {qp.coefficient(P.dim, r) for r in range(qp.period)}
        vol = exact_volume(P)
        report.volume = vol
        if len(lead) != 1:
            report.violations.append("leading coefficient depends on the residue class")
        else:
            (report.leading_coefficient,) = lead
            if report.leading_coefficient != vol:
                report.violations.append(
                    f"leading coefficient {report.leading_coefficient} != volume {vol}")
    return report
