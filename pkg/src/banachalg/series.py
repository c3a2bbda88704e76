"""Truncated power series in t over the quotient algebra, the recursive
solver for (x - y*t) * f(t) = z^2, and the divergence certificate.

Matching coefficients of t^k turns the equation into

    x*f_0 = z^2,          x*f_k = y*f_{k-1}   (k >= 1),

and each step is solved exactly with ``divide_by_x``.  The solution is
f_k = k! * w_k, whose exact quotient norm is k! (bare w_k monomials survive
in every representative), so the k-th root of the coefficient norm grows
without bound: the series solves the equation in formal power series but
converges on no disc of positive radius.  The certificate pins this down by
pure integer comparisons k! >= bound^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .poly import Monomial, Polynomial
from .quotient import R_ZERO, RElement, divide_by_x, project, r_mul

Rational = Union[int, Fraction]

_X = Polynomial.monomial(Monomial.build(x=1))
_Y = Polynomial.monomial(Monomial.build(y=1))
_Z2 = Polynomial.monomial(Monomial.build(z=2))


@dataclass(frozen=True)
class TruncatedSeriesR:
    """Coefficients f_0 .. f_K of a series over the quotient, truncated at K."""

    coeffs: tuple[RElement, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series has at least the order-0 coefficient")

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def to_json(self) -> list[dict]:
        return [
            {"k": k, "coeff": str(c), "norm": str(c.norm_upper_bound)}
            for k, c in enumerate(self.coeffs)
        ]


def zero_series(order: int) -> TruncatedSeriesR:
    return TruncatedSeriesR((R_ZERO,) * (order + 1))


def solve_equation(order: int) -> TruncatedSeriesR:
    """Solve (x - y*t) f(t) = z^2 coefficient by coefficient up to t^order.

    Every division by x must succeed; a failure would be an internal error,
    not a caller mistake.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = []
    current = divide_by_x(project(_Z2))
    for k in range(order + 1):
        if current is None:
            raise RuntimeError(f"division by x unexpectedly failed at order {k}")
        coeffs.append(current)
        current = divide_by_x(r_mul(project(_Y), current))
    return TruncatedSeriesR(tuple(coeffs))


def expected_coefficient(k: int) -> RElement:
    """k! * w_k, the closed form the solver must reproduce."""
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return project(Polynomial.monomial(Monomial.build(w={k: 1}), fact))


def residual(f: TruncatedSeriesR) -> TruncatedSeriesR:
    """Coefficients of (x - y*t) * f - z^2 modulo t^(K+1), projected.

    All zero exactly when f solves the equation through order K.
    """
    out = [project(_X * f.coeffs[0].poly - _Z2)]
    for k in range(1, f.truncation_order + 1):
        out.append(project(_X * f.coeffs[k].poly - _Y * f.coeffs[k - 1].poly))
    return TruncatedSeriesR(tuple(out))


@dataclass(frozen=True)
class DivergenceCertificate:
    """Least k with norm(f_k)^(1/k) >= bound, or None if the truncation is
    too short; ``table`` lists (k, exact norm of f_k)."""

    bound: Fraction
    reached_at: Optional[int]
    table: tuple[tuple[int, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "bound": str(self.bound),
            "reached": self.reached_at is not None,
            "k": self.reached_at,
            "norms": [{"k": k, "norm": str(n)} for k, n in self.table],
        }


def divergence_certificate(
    f: TruncatedSeriesR, bound: Rational
) -> DivergenceCertificate:
    """Certify coefficient-norm growth using exact rational comparisons.

    Requires every coefficient to be a plain multiple of a single w_k (the
    shape ``solve_equation`` produces), because only there is the quotient
    norm known exactly rather than as an upper bound.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    norms = []
    for k, c in enumerate(f.coeffs):
        exact = c.exact_norm
        if exact is None:
            raise ValueError(
                f"coefficient of t^{k} is not c*w_k; exact norms unavailable"
            )
        norms.append(exact)
    reached = None
    for k in range(1, f.truncation_order + 1):
        # norm^(1/k) >= bound  <=>  norm >= bound^k, exact in QQ
        if norms[k] >= bound**k:
            reached = k
            break
    return DivergenceCertificate(bound, reached, tuple(enumerate(norms)))
