"""Elements of the quotient of the l1-completed polynomial algebra by the
closure of the binomial ideal, represented by their normal forms.

The l1 norm of the normal form is an upper bound for the quotient norm (each
reduction step multiplies a coefficient by a factor in (0, 1]).  For an
element c*w_k the bound is exact: no combination of the generators can
produce a bare w_k monomial, so every representative carries the coefficient
c and the quotient norm is |c|.

``divide_by_x`` inverts multiplication by x on normal forms.  Multiplication
by x sends a standard monomial either to another standard monomial that
still contains x, or (when the monomial is x-free and touches some w_i with
i >= 1) through one x*w_j rewrite and a chain of G rewrites to

    r * z^eps * y^(b+1) * (w-part of the same size s, mass one lower)

where the w-part of any standard monomial with y present is supported on a
window {a, a+1}, hence determined by its size and mass, and the scalar is

    r = Wfact(target w-part) / Wfact(source w-part),   Wfact = prod(index!^exp),

because every rewrite step multiplies Wfact by exactly its step factor.
Inverting is therefore term-by-term arithmetic on (size, mass) data.

Caveat, checked by the test suite: multiplication by x is *not* injective on
the quotient.  For example x*(3*w0*w3 - w1*w2) = w2*F1 - w0*F3 lies in the
ideal while 3*w0*w3 - w1*w2 is a nonzero normal form.  Distinct y-free
monomials with equal size and mass map to the same window monomial, so a
quotient by x is in general one representative of an affine family;
``divide_by_x`` returns the window-shaped one.  For inputs whose terms all
contain x, or y, with the y-free w-part confined to w0, the preimage is
unique and the round trip is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .ideal import is_standard, nf
from .poly import Monomial, Polynomial, l1_norm, to_str


@dataclass(frozen=True)
class RElement:
    """A residue class, held as its unique normal form."""

    poly: Polynomial

    def __post_init__(self):
        if not is_standard(self.poly):
            raise ValueError(
                "RElement requires a normal form; use project() to reduce first"
            )

    @property
    def norm_upper_bound(self) -> Fraction:
        """l1 norm of the normal form; an upper bound for the quotient norm."""
        return l1_norm(self.poly)

    @property
    def exact_norm(self) -> Optional[Fraction]:
        """The exact quotient norm, available for c*w_k and 0 only."""
        if self.poly.is_zero():
            return Fraction(0)
        if len(self.poly.terms) == 1:
            t = self.poly.terms[0]
            m = t.monomial
            if (
                m.z_exp == 0
                and m.x_exp == 0
                and m.y_exp == 0
                and len(m.w) == 1
                and m.w[0][1] == 1
            ):
                return abs(t.coefficient)
        return None

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def to_json(self) -> dict:
        return {"poly": to_str(self.poly), "norm_bound": str(self.norm_upper_bound)}

    def __str__(self) -> str:
        return to_str(self.poly)


R_ZERO = RElement(Polynomial.zero())


def project(p: Polynomial) -> RElement:
    """The class of p, i.e. the wrapper around its normal form."""
    return RElement(nf(p))


def equal_mod_I(p: Polynomial, q: Polynomial) -> bool:
    """True iff p and q have the same image in the quotient."""
    return nf(p) == nf(q)


def r_add(a: RElement, b: RElement) -> RElement:
    # normal forms are closed under addition
    return RElement(a.poly + b.poly)


def r_mul(a: RElement, b: RElement) -> RElement:
    return project(a.poly * b.poly)


def _window(size: int, mass: int) -> Monomial:
    """The unique w-monomial of the given size whose support lies in some
    {a, a+1}: a = mass // size copies shifted so the total index sum is mass.
    """
    a, hi = divmod(mass, size)
    w = {a: size - hi}
    if hi:
        w[a + 1] = hi
    return Monomial.build(w=w)


def _wfact(m: Monomial) -> int:
    out = 1
    for i, e in m.w:
        out *= factorial(i) ** e
    return out


def divide_by_x(g: RElement) -> Optional[RElement]:
    """Return h with project(x) * h == g, or None when no such h exists.

    Works term by term on the normal form of g:
      * a term with an x pulls back by dividing one x out;
      * an x-free term with y and at least one w-factor pulls back to
        z^eps * y^(b-1) * window(size, mass+1), rescaled by the Wfact ratio;
      * any other term (pure powers of y, or monomials free of x and y that
        still contain w or z only) certifies that no quotient exists.

    When several preimages exist (see the module caveat) the window-shaped
    one is returned; x * result == g holds in the quotient in every case.
    """
    parts: list[tuple[Fraction, Monomial]] = []
    for t in g.poly.terms:
        m = t.monomial
        if m.x_exp >= 1:
            parts.append((t.coefficient, m / Monomial.build(x=1)))
            continue
        size = m.w_size()
        if m.y_exp >= 1 and size >= 1:
            mass = m.w_mass()
            source = _window(size, mass + 1)
            scalar = Fraction(_wfact(m), _wfact(source))
            pulled = Monomial.build(z=m.z_exp, y=m.y_exp - 1) * source
            parts.append((t.coefficient / scalar, pulled))
            continue
        return None
    return RElement(Polynomial.from_terms(parts))
