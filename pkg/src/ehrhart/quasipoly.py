"""Quasi-polynomials with rational coefficients and their discrete sums.

A quasi-polynomial of period ``p`` is stored as one coefficient row per
residue class ``j`` in ``0..p-1``; row ``j`` holds ``(c_0, ..., c_D)`` and
``f(t) = sum_i c_i t^i`` whenever ``t % p == j``.  Python's ``%`` already
gives the nonnegative residue, so evaluation is total on all of Z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .arith import divisors, falling_factorial, lcm


def _trim(rows):
    width = max(len(r) for r in rows)
    rows = [list(r) + [Fraction(0)] * (width - len(r)) for r in rows]
    while width > 1 and all(r[width - 1] == 0 for r in rows):
        width -= 1
    return [r[:width] for r in rows]


def _shrink_period(rows):
    p = len(rows)
    for q in divisors(p):
        if all(rows[j] == rows[j % q] for j in range(p)):
            return rows[:q]
    return rows


@dataclass(frozen=True)
class QuasiPolynomial:
    """Canonical form: minimal common period, no trailing zero columns."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Sequence]):
        rows = [[Fraction(c) for c in row] for row in coeffs]
        if not rows or not all(rows):
            raise ValueError("need at least one residue row with one coefficient")
        rows = _shrink_period(_trim(rows))
        object.__setattr__(self, "coeffs", tuple(tuple(r) for r in rows))

    @classmethod
    def polynomial(cls, coeffs: Sequence) -> "QuasiPolynomial":
        """Period-1 quasi-polynomial from ascending coefficients."""
        return cls([coeffs])

    @classmethod
    def constant(cls, value) -> "QuasiPolynomial":
        return cls([[value]])

    @classmethod
    def zero(cls) -> "QuasiPolynomial":
        return cls([[0]])

    @classmethod
    def indicator(cls, s: int, j: int = 0) -> "QuasiPolynomial":
        """``chi_{s,j}``: 1 on ``t = j mod s``, else 0."""
        return cls([[int(r == j % s)] for r in range(s)])

    @property
    def period(self) -> int:
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs[0]) - 1

    def is_zero(self) -> bool:
        return self.degree == 0 and self.period == 1 and self.coeffs[0][0] == 0

    def coefficient(self, i: int, t: int) -> Fraction:
        """``c_i(t)``."""
        row = self.coeffs[t % self.period]
        return row[i] if i < len(row) else Fraction(0)

    def __call__(self, t: int) -> Fraction:
        return qp_eval(self, t)

    def __add__(self, other):
        return qp_add(self, other)

    def __sub__(self, other):
        return qp_sub(self, other)

    def __neg__(self):
        return qp_scale(self, -1)

    def __mul__(self, r):
        return qp_scale(self, r)

    __rmul__ = __mul__

    def __str__(self) -> str:
        from .formats import render_qp

        return render_qp(self)


@dataclass(frozen=True)
class GBasisTerm:
    """``coefficient * g_{d,s,j}`` where ``g_{d,s,j}(ms + j) = m^(d)``."""

    d: int
    s: int
    j: int
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        if self.d < 0 or self.s < 1 or not 0 <= self.j < self.s:
            raise ValueError(f"invalid g-basis index {(self.d, self.s, self.j)}")

    def __call__(self, t: int) -> Fraction:
        if (t - self.j) % self.s:
            return Fraction(0)
        return self.coefficient * falling_factorial(Fraction(t - self.j, self.s), self.d)

    def as_qp(self) -> QuasiPolynomial:
        # (t - j)/s - k expanded as a polynomial in t, multiplied out
        poly = [Fraction(1)]
        for k in range(self.d):
            lin = [Fraction(-self.j, self.s) - k, Fraction(1, self.s)]
            poly = _poly_mul(poly, lin)
        rows = [[0] for _ in range(self.s)]
        rows[self.j] = [self.coefficient * c for c in poly]
        return QuasiPolynomial(rows)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for k, b in enumerate(q):
            out[i + k] += a * b
    return out


def _horner(row, t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(row):
        acc = acc * t + c
    return acc


def interpolate(xs: Sequence, ys: Sequence) -> list[Fraction]:
    """Ascending coefficients of the unique polynomial through the points."""
    n = len(xs)
    xs = [Fraction(x) for x in xs]
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    poly = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        # poly = poly * (t - xs[i]) + dd[i]
        poly = _poly_mul(poly, [-xs[i], Fraction(1)])
        poly[0] += dd[i]
    return poly


def qp_eval(f: QuasiPolynomial, t: int) -> Fraction:
    return _horner(f.coeffs[t % f.period], t)


def _aligned(f, g):
    p = lcm(f.period, g.period)
    width = max(f.degree, g.degree) + 1

    def rows(q):
        return [list(q.coeffs[r % q.period]) + [Fraction(0)] * (width - q.degree - 1)
                for r in range(p)]

    return rows(f), rows(g)


def qp_add(f: QuasiPolynomial, g: QuasiPolynomial) -> QuasiPolynomial:
    a, b = _aligned(f, g)
    return QuasiPolynomial([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def qp_sub(f: QuasiPolynomial, g: QuasiPolynomial) -> QuasiPolynomial:
    a, b = _aligned(f, g)
    return QuasiPolynomial([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])


def qp_scale(f: QuasiPolynomial, r) -> QuasiPolynomial:
    r = Fraction(r)
    return QuasiPolynomial([[r * c for c in row] for row in f.coeffs])


def qp_sum(parts: Iterable[QuasiPolynomial]) -> QuasiPolynomial:
    """Add many quasi-polynomials with one alignment instead of pairwise."""
    parts = list(parts)
    if not parts:
        return QuasiPolynomial.zero()
    p = lcm(*(q.period for q in parts))
    width = max(q.degree for q in parts) + 1
    rows = [[Fraction(0)] * width for _ in range(p)]
    for q in parts:
        for r in range(p):
            row = rows[r]
            for i, c in enumerate(q.coeffs[r % q.period]):
                row[i] += c
    return QuasiPolynomial(rows)


def qp_compose_div(f: QuasiPolynomial, s: int) -> QuasiPolynomial:
    """``t -> f(t/s)`` on multiples of ``s``, zero elsewhere."""
    if s < 1:
        raise ValueError("s must be positive")
    if s == 1:
        return f
    p = f.period
    rows = []
    for r in range(s * p):
        if r % s:
            rows.append([0])
        else:
            row = f.coeffs[(r // s) % p]
            rows.append([c / s**i for i, c in enumerate(row)])
    return QuasiPolynomial(rows)


def qp_reflect(f: QuasiPolynomial) -> QuasiPolynomial:
    """``t -> f(-t)``."""
    p = f.period
    return QuasiPolynomial(
        [[c if i % 2 == 0 else -c for i, c in enumerate(f.coeffs[(-r) % p])] for r in range(p)]
    )


def minimal_period(f: QuasiPolynomial, i: int) -> int:
    """Smallest period of the coefficient function ``c_i``."""
    if i > f.degree:
        return 1
    col = [row[i] for row in f.coeffs]
    p = len(col)
    for q in divisors(p):
        if all(col[r] == col[r % q] for r in range(p)):
            return q
    return p  # pragma: no cover


def to_g_basis(f: QuasiPolynomial) -> list[GBasisTerm]:
    """Write ``f`` in the basis ``g_{d,s,j}`` with ``s = period(f)``.

    On residue ``j``, ``h(m) = f(ms + j)`` is a polynomial in ``m`` whose
    Newton series ``sum_k (Delta^k h)(0) / k! * m^(k)`` gives the weights.
    """
    s, D = f.period, f.degree
    terms = []
    for j in range(s):
        h = [qp_eval(f, m * s + j) for m in range(D + 1)]
        for k in range(D + 1):
            if h[0]:
                terms.append(GBasisTerm(k, s, j, h[0] / math.factorial(k)))
            h = [b - a for a, b in zip(h, h[1:])]
    return terms


def _reduce(a: int, b: int) -> tuple[int, int]:
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    g = math.gcd(a, b)
    return a // g, b // g


def _floor_sum_closed_form(d: int, s: int, j: int, a: int, b: int, t: int) -> Fraction:
    """``sum_{i=0}^{floor(at/b)} g_{d,s,j}(i)`` for ``t >= 0``."""
    m = ((a * t) // b - j) // s
    return falling_factorial(m + 1, d + 1) / (d + 1)


def g_discrete_sum(term: GBasisTerm, a: int, b: int) -> QuasiPolynomial:
    """Quasi-polynomial ``G(t) = sum_{i=0}^{floor(at/b)} term(i)``.

    Period ``S = s b / gcd(s, a)``; each residue class is recovered by exact
    interpolation of the closed form at ``d + 2`` nonnegative sample points.
    """
    a, b = _reduce(a, b)
    d, s, j = term.d, term.s, term.j
    S = s * b // math.gcd(s, a)
    rows = []
    for k in range(S):
        xs = [k + r * S for r in range(d + 2)]
        ys = [term.coefficient * _floor_sum_closed_form(d, s, j, a, b, x) for x in xs]
        rows.append(interpolate(xs, ys))
    return QuasiPolynomial(rows)


def discrete_sum(f: QuasiPolynomial, a: int = 1, b: int = 1,
                 period: Optional[int] = None) -> QuasiPolynomial:
    """``F(t) = sum_{i=0}^{floor(at/b)} f(i)`` as a quasi-polynomial.

    ``f`` is expanded in the g-basis and each term summed in closed form
    ``(M + 1)^(d+1) / (d+1)`` with ``M = floor((floor(at/b) - j)/s)``.  On the
    residue class ``t = mS + k`` (``S = s b / gcd(s, a)``) the quantity
    ``M + 1`` is the linear polynomial ``A (t - k) + B`` in ``t``, where
    ``A = gcd``-reduced ``a / S`` and ``B = floor((floor(ak/b) - j)/s) + 1``.
    For fixed ``k``, ``B`` only takes two values as ``j`` runs over
    ``0..s-1``, so the g-basis weights are grouped by prefix sums over ``j``.

    ``period``, when the caller already knows a period of the result, limits
    the work to ``gcd(S, period)`` residue classes.
    """
    a, b = _reduce(a, b)
    s = f.period
    top = f.degree + 1
    # prefix[j][d] = sum over residues < j of weight(g_{d,s,j'}) / (d + 1)
    prefix = [[Fraction(0)] * top]
    weights = [[Fraction(0)] * top for _ in range(s)]
    for term in to_g_basis(f):
        weights[term.j][term.d] += term.coefficient / (term.d + 1)
    for j in range(s):
        prefix.append([x + y for x, y in zip(prefix[-1], weights[j])])
    total = prefix[-1]
    g = math.gcd(s, a)
    S = s * b // g
    A = Fraction(a // g, S)
    rows = []
    for k in range(S if period is None else math.gcd(S, period)):
        q, r = divmod((a * k) // b, s)
        row = [Fraction(0)] * (top + 1)
        # residues j <= r have B = q + 1, the rest B = q
        low = prefix[r + 1]
        high = [x - y for x, y in zip(total, low)]
        for B, w in ((q + 1, low), (q, high)):
            if not any(w):
                continue
            c0 = B - A * k
            power = [Fraction(1)]
            for d in range(top):
                power = _poly_mul(power, [c0 - d, A])
                if w[d]:
                    for i, c in enumerate(power):
                        row[i] += w[d] * c
        rows.append(row)
    return QuasiPolynomial(rows)


def discrete_sum_interpolated(f: QuasiPolynomial, a: int = 1, b: int = 1) -> QuasiPolynomial:
    """Same as :func:`discrete_sum`, summing :func:`g_discrete_sum` termwise."""
    return qp_sum(g_discrete_sum(term, a, b) for term in to_g_basis(f))


def negative_sum_check(f: QuasiPolynomial, t: int) -> tuple[Fraction, Fraction]:
    """``(p(-t), -sum_{i=-t+1}^{-1} f(i))`` with ``p = discrete_sum(f)``."""
    if t <= 0:
        raise ValueError("t must be positive")
    p = discrete_sum(f, 1, 1)
    return qp_eval(p, -t), -sum((qp_eval(f, i) for i in range(-t + 1, 0)), Fraction(0))
