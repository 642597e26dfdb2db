"""Exact scalar arithmetic and integer/rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples; matrices are
lists of rows.  Nothing here ever touches floating point.

Hermite normal form convention (used by every lattice routine): *row style*.
``H = U @ M`` with ``U`` unimodular, ``H`` in row echelon form, every pivot
positive, and every entry above a pivot reduced into ``[0, pivot)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

Rational = Fraction
Vector = tuple
Matrix = list


def lcm(*values: int) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def lcm_denominators(values) -> int:
    return lcm(*(Fraction(v).denominator for v in values))


def divisors(n: int) -> list[int]:
    small = [k for k in range(1, math.isqrt(n) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


# ---------------------------------------------------------------------------
# finite calculus primitives
# ---------------------------------------------------------------------------

def falling_factorial(t, d: int) -> Fraction:
    """``t (t-1) ... (t-d+1)``; the empty product for ``d == 0``."""
    if d < 0:
        raise ValueError("falling factorial needs d >= 0")
    out = Fraction(1)
    for k in range(d):
        out *= t - k
    return out


def sum_falling_factorial(t: int, d: int) -> Fraction:
    """``sum_{i=0}^{t} i^(d)``, via the power rule for falling factorials."""
    if t < 0 or d < 0:
        raise ValueError("t and d must be nonnegative")
    return falling_factorial(t + 1, d + 1) / (d + 1)


# ---------------------------------------------------------------------------
# integer lattice algebra
# ---------------------------------------------------------------------------

def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B) -> list[list]:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def matvec(A, x) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def transpose(A) -> list[list]:
    return [list(col) for col in zip(*A)]


def hermite_normal_form(M) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style HNF.  Returns ``(H, U)`` with ``H == U @ M``, ``det U == +-1``."""
    if not M or not M[0]:
        raise ValueError("empty matrix")
    m, n = len(M), len(M[0])
    H = [[int(x) for x in row] for row in M]
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][c]
            if b == 0:
                continue
            a = H[r][c]
            g, x, y = xgcd(a, b)
            p, q = -b // g, a // g
            H[r], H[i] = ([x * u + y * v for u, v in zip(H[r], H[i])],
                          [p * u + q * v for u, v in zip(H[r], H[i])])
            U[r], U[i] = ([x * u + y * v for u, v in zip(U[r], U[i])],
                          [p * u + q * v for u, v in zip(U[r], U[i])])
        piv = H[r][c]
        if piv == 0:
            continue
        if piv < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
            piv = -piv
        for i in range(r):
            k = H[i][c] // piv
            if k:
                H[i] = [u - k * v for u, v in zip(H[i], H[r])]
                U[i] = [u - k * v for u, v in zip(U[i], U[r])]
        r += 1
    return H, U


def is_hermite_normal_form(H) -> bool:
    last = -1
    seen_zero = False
    for i, row in enumerate(H):
        nz = [j for j, v in enumerate(row) if v]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        c = nz[0]
        if c <= last or row[c] <= 0:
            return False
        if any(not 0 <= H[k][c] < row[c] for k in range(i)):
            return False
        last = c
    return True


def solve_integer_affine(A, b) -> Optional[tuple[int, ...]]:
    """Some integer ``x`` with ``A x == b``, or ``None`` when none exists.

    ``b`` may hold rationals; a non-integral entry that cannot be matched just
    makes the system infeasible.
    """
    k = len(A)
    if k == 0:
        return None
    n = len(A[0])
    if n == 0:
        return () if all(v == 0 for v in b) else None
    # U A^T = H  =>  A = H^T U^{-T};  x = U^T y  turns A x = b into H^T y = b
    H, U = hermite_normal_form(transpose(A))
    residual = [Fraction(v) for v in b]
    y = [0] * n
    for i, row in enumerate(H):
        nz = [j for j, v in enumerate(row) if v]
        if not nz:
            break
        c = nz[0]
        q = residual[c] / row[c]
        if q.denominator != 1:
            return None
        y[i] = int(q)
        residual = [r - y[i] * h for r, h in zip(residual, row)]
    if any(residual):
        return None
    return tuple(sum(U[i][j] * y[i] for i in range(n)) for j in range(n))


def integer_kernel_basis(A, n: Optional[int] = None) -> list[tuple[int, ...]]:
    """A basis of the lattice ``{x in Z^n : A x = 0}`` (saturated)."""
    if not A:
        return [tuple(row) for row in identity(n)]
    H, U = hermite_normal_form(transpose(A))
    return [tuple(U[i]) for i, row in enumerate(H) if not any(row)]


def lll_reduce(basis, delta=Fraction(3, 4)):
    """LLL-reduce linearly independent integer row vectors.  Returns
    ``(reduced, V)`` with ``reduced == V @ basis`` and ``V`` unimodular."""
    b = [list(map(int, row)) for row in basis]
    m = len(b)
    if m and rank(b) < m:
        raise ValueError("lll_reduce() needs linearly independent rows")
    V = identity(m)
    if m < 2:
        return b, V

    def gram_schmidt():
        star, mu = [], [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = sum(Fraction(x) * y for x, y in zip(b[i], star[j])) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
            star.append(v)
            norms[i] = sum(x * x for x in v)
        return star, mu

    norms = [Fraction(0)] * m
    star, mu = gram_schmidt()
    k = 1
    while k < m:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                V[k] = [x - q * y for x, y in zip(V[k], V[j])]
                star, mu = gram_schmidt()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            V[k], V[k - 1] = V[k - 1], V[k]
            star, mu = gram_schmidt()
            k = max(k - 1, 1)
    return b, V


def integer_inverse(U) -> list[list[int]]:
    inv = inverse(U)
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular")
    return [[int(v) for v in row] for row in inv]


# ---------------------------------------------------------------------------
# rational linear algebra
# ---------------------------------------------------------------------------

def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    R = [[Fraction(v) for v in row] for row in M]
    pivots: list[int] = []
    if not R:
        return R, pivots
    m, n = len(R), len(R[0])
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [v * inv for v in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [u - f * v for u, v in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(M) -> int:
    return len(rref(M)[1]) if M else 0


def primitive(v) -> tuple[int, ...]:
    """Scale a nonzero rational vector to an integer vector of content 1."""
    v = [Fraction(x) for x in v]
    den = lcm_denominators(v)
    ints = [int(x * den) for x in v]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)


def kernel_basis(M, n: Optional[int] = None) -> list[tuple[int, ...]]:
    """Rational null space of ``M``, each basis vector primitive integer."""
    if not M:
        return [tuple(row) for row in identity(n)]
    R, pivots = rref(M)
    n = len(M[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, c in zip(R, pivots):
            v[c] = -row[f]
        basis.append(primitive(v))
    return basis


def rational_solve(A, b) -> Optional[tuple[Fraction, ...]]:
    """Some rational solution of ``A x = b`` (free variables zero), or None."""
    n = len(A[0])
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(R, pivots):
        x[c] = row[n]
    return tuple(x)


def inverse(M) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def det(M) -> Fraction:
    A = [[Fraction(v) for v in row] for row in M]
    n = len(A)
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            out = -out
        out *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] / A[c][c]
                A[i] = [u - f * v for u, v in zip(A[i], A[c])]
    return out


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    base = points[0]
    diffs = [[Fraction(x) - Fraction(y) for x, y in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0
