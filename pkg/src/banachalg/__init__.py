"""Exact symbolic computation in an l1-normed polynomial algebra with
countably many indeterminates, its binomial quotient, and disc-algebra
residual checks.

The package verifies, in exact rational arithmetic:

  * that the binomial families F and G form a Gröbner basis, via
    S-polynomial identities and reductions to zero;
  * unique normal forms on standard monomials, with replayable traces and
    norm-nonincreasing reduction steps;
  * the recursive solution f_k = k! * w_k of (x - y*t) f(t) = z^2 over the
    quotient, together with an integer-arithmetic divergence certificate;
  * residual t-orders of square-root approximants over disc algebras.
"""

__version__ = "0.1.0"

from .poly import (
    Monomial,
    ParseError,
    Polynomial,
    Term,
    Variable,
    W,
    X,
    Y,
    Z,
    compare,
    l1_norm,
    parse,
    to_str,
)
from .ideal import (
    F,
    G,
    GeneratorId,
    ReductionTrace,
    generator,
    groebner_certificate,
    is_standard_monomial,
    leading_term,
    nf,
    normal_form,
    s_polynomial,
)
from .quotient import RElement, divide_by_x, equal_mod_I, project, r_add, r_mul
from .series import (
    TruncatedSeriesR,
    divergence_certificate,
    residual,
    solve_equation,
)
from .disc import (
    BRhoElement,
    BRhoSeries,
    brho_norm,
    example1_residual,
    example1_solutions,
    example2_residual,
    example2_solutions,
    remark_growth,
    sqrt_coeffs,
)

__all__ = [
    "__version__",
    "Monomial", "ParseError", "Polynomial", "Term", "Variable",
    "W", "X", "Y", "Z", "compare", "l1_norm", "parse", "to_str",
    "F", "G", "GeneratorId", "ReductionTrace", "generator",
    "groebner_certificate", "is_standard_monomial", "leading_term",
    "nf", "normal_form", "s_polynomial",
    "RElement", "divide_by_x", "equal_mod_I", "project", "r_add", "r_mul",
    "TruncatedSeriesR", "divergence_certificate", "residual", "solve_equation",
    "BRhoElement", "BRhoSeries", "brho_norm",
    "example1_residual", "example1_solutions",
    "example2_residual", "example2_solutions",
    "remark_growth", "sqrt_coeffs",
]
