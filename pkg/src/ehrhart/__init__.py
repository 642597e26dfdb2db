"""Ehrhart quasi-polynomials of rational polytopes via finite calculus."""

from .engine import EhrhartResult, ehrhart, ehrhart_qp, exact_volume, interior_ehrhart, mcmullen_check
from .polytope import Polytope
from .quasipoly import GBasisTerm, QuasiPolynomial, discrete_sum, qp_eval

__all__ = [
    "EhrhartResult",
    "GBasisTerm",
    "Polytope",
    "QuasiPolynomial",
    "discrete_sum",
    "ehrhart",
    "ehrhart_qp",
    "exact_volume",
    "interior_ehrhart",
    "mcmullen_check",
    "qp_eval",
]
