"""Exact commutative substrate: scalars, polynomials, gcd, Groebner bases."""

from .scalars import GaussRat, I, ONE, ZERO, gauss_sqrt
from .poly import (
    GREVLEX,
    LEX,
    BlockElim,
    MonomialOrder,
    Poly,
    canonical_ring,
    exact_divide,
    order_by_tag,
    render,
    render_coeff,
)
from .gcd import gcd_poly
from .groebner import IdealPres, groebner_basis, normal_form, reduce_full
from .linsolve import kernel_basis, rref, solve_linear
from .solve import SolutionFamily, solve_system, univariate_roots

__all__ = [
    "GaussRat",
    "I",
    "ONE",
    "ZERO",
    "gauss_sqrt",
    "GREVLEX",
    "LEX",
    "BlockElim",
    "MonomialOrder",
    "Poly",
    "canonical_ring",
    "exact_divide",
    "order_by_tag",
    "render",
    "render_coeff",
    "gcd_poly",
    "IdealPres",
    "groebner_basis",
    "normal_form",
    "reduce_full",
    "kernel_basis",
    "rref",
    "solve_linear",
    "SolutionFamily",
    "solve_system",
    "univariate_roots",
]
