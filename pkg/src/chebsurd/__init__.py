"""Exact Chebyshev-polynomial convergents of x - sqrt(x^2-1), Vajda-type identities,
and a Pascal-like triangle of generalized binomial sums."""

from .chebyshev import (
    ChebKind,
    T,
    U,
    cheb,
    cheb_coeffs_binomial,
    cheb_compose_check,
    cheb_eval_big,
    cheb_eval_pair,
)
from .contfrac import CFrac, cf_eval, cf_theorem5, convergent_index, convergents, surd_expand, surd_expansion
from .errors import (
    ChebsurdError,
    DegreeOverflow,
    DomainError,
    MalformedCF,
    NegativeIndex,
    PoleError,
    UnknownSequence,
    ZeroDenominator,
)
from .identities import DEFAULT_BOUNDS, IdentityTag, identity_residual, identity_sweep
from .kernel import Poly, RatFunc, gen_binomial, poly_add, poly_compose, poly_eval, poly_mul, ratfunc_make
from .surd import gap_certificate, quadratic_value, s_closed, s_eval, s_recursive, s_series, theorem1_residual
from .binom_triangle import (
    SEQUENCES,
    FParams,
    TriArray,
    binom_l_identity,
    f_eval,
    f_identity_residuals,
    l_via_f,
    lu_check,
    matrix_M,
    power_identity_residual,
    q_poly,
    sequences,
    triangle,
)

__version__ = "0.1.0"
