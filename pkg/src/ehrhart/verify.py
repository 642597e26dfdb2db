"""Check an :class:`EhrhartResult` against brute-force counts.

Used by ``ehrhart verify`` and by the test suite.  Every check records the
first offending ``t`` together with the expected (oracle) and computed values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .engine import EhrhartResult, ehrhart, mcmullen_check
from .oracle import closed_count, enumeration_cap, interior_count
from .polytope import Polytope, i_indices
from .quasipoly import qp_eval


@dataclass(frozen=True)
class VerifyConfig:
    tmax: Optional[int] = None   # None: 2 * denominator * period, capped by the oracle
    reciprocity: bool = True
    mcmullen: bool = True


@dataclass(frozen=True)
class Mismatch:
    check: str
    t: Optional[int]
    expected: object
    got: object

    def __str__(self) -> str:
        at = "" if self.t is None else f" at t = {self.t}"
        return f"{self.check}: mismatch{at}: expected {self.expected}, got {self.got}"


@dataclass
class VerifyReport:
    tmax: int
    passed: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def largest_safe_dilate(P: Polytope, limit: int) -> int:
    """Largest ``t <= limit`` whose enumeration box stays under the oracle cap."""
    n = P.ambient_dim
    widths = [max(v[i] for v in P.vertices) - min(v[i] for v in P.vertices) for i in range(n)]
    cap = enumeration_cap()
    t = limit
    while t > 1 and math.prod(int(t * w) + 2 for w in widths) > cap:
        t -= 1
    return t


def default_tmax(P: Polytope, period: int) -> int:
    return largest_safe_dilate(P, 2 * P.denominator * period)


def verify(P: Polytope, result: Optional[EhrhartResult] = None,
           cfg: VerifyConfig = VerifyConfig()) -> VerifyReport:
    if result is None:
        result = ehrhart(P)
    qp = result.qp
    T = cfg.tmax if cfg.tmax is not None else default_tmax(P, qp.period)
    report = VerifyReport(T)

    def run(name, failure):
        if failure is None:
            report.passed.append(name)
        else:
            report.failures.append(failure)

    def first(name, ts, expected, got):
        for t in ts:
            e, g = expected(t), got(t)
            if e != g:
                return Mismatch(name, t, e, g)
        return None

    run("constant-term", None if qp_eval(qp, 0) == 1 else Mismatch("constant-term", 0, 1, qp_eval(qp, 0)))
    run("oracle", first("oracle", range(T + 1), lambda t: closed_count(P, t), qp))
    if cfg.reciprocity:
        sign = (-1) ** P.dim
        run("reciprocity", first("reciprocity", range(1, T + 1),
                                 lambda t: interior_count(P, t), lambda t: sign * qp_eval(qp, -t)))
        run("interior", first("interior", range(1, T + 1),
                              lambda t: interior_count(P, t), result.interior_qp))
    if cfg.mcmullen:
        indices = tuple(i_indices(P))
        got = tuple(result.i_indices)
        run("i-indices", None if got == indices else Mismatch("i-indices", None, indices, got))
        m = mcmullen_check(P, qp)
        run("mcmullen", None if m.ok else Mismatch("mcmullen", None, "no violations", "; ".join(m.violations)))
    return report
