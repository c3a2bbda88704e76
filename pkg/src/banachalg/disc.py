"""The disc algebra of radius rho and the approximate-solution residuals.

An element is a polynomial in a single variable x with rational
coefficients, normed by ||f||_rho = sum |a_n| rho^n; rho is carried on the
element and kept exact.  Series in t over this algebra are plain coefficient
lists, so every expansion below is an identity in QQ[x][t] with no rounding
and no hidden truncation.

Two families of approximate solutions are built from the truncated square
root of 1 + t:

  * family 1 solves x*y1^2 = (x + t)*y2^2 approximately:
        y2 = x^c,  y1 = x^c + sum_{n=1..c} a_n x^(c-n) t^n,
    with residual t-order exactly c + 1;
  * family 2 replaces the explicit t by a third unknown held at y3 = t and
    evaluates x*y1^2 - (x + y3)*y2^2, with guaranteed order at least c.

The truncations approximate to arbitrarily high t-order, yet the only exact
solution with coefficients in the disc algebra is zero; the residual orders
computed here are the quantitative half of that phenomenon.  ``remark_growth``
tabulates ||x^(k!)||_2 = 2^(k!), a coefficient sequence that defeats every
geometric bound, separating series with summable coefficient norms from
plain convergent power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class BRhoElement:
    """Polynomial in x with exact coefficients and the norm weight rho.

    ``coeffs`` holds (exponent, coefficient) pairs, ascending, no zeros.
    """

    coeffs: tuple[tuple[int, Fraction], ...]
    rho: Fraction

    @staticmethod
    def from_dict(d: dict[int, Rational], rho: Rational) -> BRhoElement:
        rho = Fraction(rho)
        if rho <= 0:
            raise ValueError("rho must be positive")
        pairs = tuple(
            sorted((e, Fraction(c)) for e, c in d.items() if Fraction(c) != 0)
        )
        if any(e < 0 for e, _ in pairs):
            raise ValueError("negative exponent")
        return BRhoElement(pairs, rho)

    @staticmethod
    def zero(rho: Rational) -> BRhoElement:
        return BRhoElement.from_dict({}, rho)

    @staticmethod
    def x_power(e: int, rho: Rational, c: Rational = 1) -> BRhoElement:
        return BRhoElement.from_dict({e: c}, rho)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: BRhoElement):
        if self.rho != other.rho:
            raise ValueError("mixed rho values")

    def __add__(self, other: BRhoElement) -> BRhoElement:
        self._check(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs:
            d[e] = d.get(e, Fraction(0)) + c
        return BRhoElement.from_dict(d, self.rho)

    def __neg__(self) -> BRhoElement:
        return BRhoElement(tuple((e, -c) for e, c in self.coeffs), self.rho)

    def __sub__(self, other: BRhoElement) -> BRhoElement:
        return self + (-other)

    def __mul__(self, other: BRhoElement) -> BRhoElement:
        self._check(other)
        d: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return BRhoElement.from_dict(d, self.rho)

    def scale(self, c: Rational) -> BRhoElement:
        c = Fraction(c)
        if c == 0:
            return BRhoElement.zero(self.rho)
        return BRhoElement(tuple((e, cc * c) for e, cc in self.coeffs), self.rho)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, (e, c) in enumerate(reversed(self.coeffs)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag) if mag.denominator == 1 else f"({mag})"
            else:
                xs = "x" if e == 1 else f"x^{e}"
                if mag == 1:
                    body = xs
                elif mag.denominator == 1:
                    body = f"{mag}*{xs}"
                else:
                    body = f"({mag})*{xs}"
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def brho_norm(f: BRhoElement) -> Fraction:
    """Exact weighted l1 norm: sum |a_e| * rho^e."""
    return sum((abs(c) * f.rho**e for e, c in f.coeffs), Fraction(0))


@dataclass(frozen=True)
class BRhoSeries:
    """Polynomial in t with BRhoElement coefficients (index = t-power)."""

    coeffs: tuple[BRhoElement, ...]
    rho: Fraction

    @staticmethod
    def from_elements(elements: Sequence[BRhoElement], rho: Rational) -> BRhoSeries:
        rho = Fraction(rho)
        for e in elements:
            if e.rho != rho:
                raise ValueError("mixed rho values")
        return BRhoSeries(tuple(elements), rho)

    @staticmethod
    def constant(element: BRhoElement) -> BRhoSeries:
        return BRhoSeries((element,), element.rho)

    def __add__(self, other: BRhoSeries) -> BRhoSeries:
        if self.rho != other.rho:
            raise ValueError("mixed rho values")
        n = max(len(self.coeffs), len(other.coeffs))
        zero = BRhoElement.zero(self.rho)
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else zero
            b = other.coeffs[i] if i < len(other.coeffs) else zero
            out.append(a + b)
        return BRhoSeries(tuple(out), self.rho)

    def __neg__(self) -> BRhoSeries:
        return BRhoSeries(tuple(-c for c in self.coeffs), self.rho)

    def __sub__(self, other: BRhoSeries) -> BRhoSeries:
        return self + (-other)

    def __mul__(self, other: BRhoSeries) -> BRhoSeries:
        if self.rho != other.rho:
            raise ValueError("mixed rho values")
        zero = BRhoElement.zero(self.rho)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BRhoSeries(tuple(out), self.rho)

    def t_order(self) -> Optional[int]:
        """Least t-power with nonzero coefficient; None when identically 0."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None


def sqrt_coeffs(count: int) -> list[Fraction]:
    """Coefficients a_1 .. a_count of the square root of 1 + t.

    The unique power series with constant term 1 squaring to 1 + t; the
    recursion matches the t^n coefficient of the square for each n.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    a = [Fraction(1)]
    for n in range(1, count + 1):
        acc = sum((a[i] * a[n - i] for i in range(1, n)), Fraction(0))
        target = Fraction(1) if n == 1 else Fraction(0)
        a.append((target - acc) / 2)
    return a[1:]


def sqrt_truncation_residual(count: int) -> list[Fraction]:
    """Coefficients of (1 + sum a_n t^n)^2 - (1 + t); first count+1 entries
    vanish, which the tests assert."""
    a = [Fraction(1)] + sqrt_coeffs(count)
    square = [Fraction(0)] * (2 * count + 1)
    for i, ai in enumerate(a):
        for j, aj in enumerate(a):
            square[i + j] += ai * aj
    square[0] -= 1
    if len(square) > 1:
        square[1] -= 1
    return square


DEFAULT_RHO = Fraction(2)


def example1_solutions(
    c: int, rho: Rational = DEFAULT_RHO
) -> tuple[BRhoSeries, BRhoSeries]:
    """(y1, y2) with y2 = x^c and y1 = x^c + sum_{n<=c} a_n x^(c-n) t^n."""
    if c < 0:
        raise ValueError("c must be nonnegative")
    rho = Fraction(rho)
    a = sqrt_coeffs(c)
    y1 = [BRhoElement.x_power(c, rho)]
    y1 += [BRhoElement.x_power(c - n, rho, a[n - 1]) for n in range(1, c + 1)]
    y2 = BRhoSeries.constant(BRhoElement.x_power(c, rho))
    return BRhoSeries.from_elements(y1, rho), y2


def _shifted_residual(
    y1: BRhoSeries, y2: BRhoSeries, shift: BRhoSeries
) -> BRhoSeries:
    """x*y1^2 - (x + shift)*y2^2, exact in QQ[x][t]."""
    rho = y1.rho
    x = BRhoSeries.constant(BRhoElement.x_power(1, rho))
    return x * y1 * y1 - (x + shift) * y2 * y2


def example1_residual(
    c: int, rho: Rational = DEFAULT_RHO
) -> tuple[Optional[int], BRhoElement]:
    """(t-order, leading coefficient) of x*y1^2 - (x+t)*y2^2 at the order-c
    approximants; the order is at least c + 1, and None would mean an
    identically zero residual (which does not occur)."""
    y1, y2 = example1_solutions(c, rho)
    rho = Fraction(rho)
    t = BRhoSeries.from_elements(
        [BRhoElement.zero(rho), BRhoElement.from_dict({0: 1}, rho)], rho
    )
    res = _shifted_residual(y1, y2, t)
    order = res.t_order()
    lead = BRhoElement.zero(rho) if order is None else res.coeffs[order]
    return order, lead


def example2_solutions(
    c: int, rho: Rational = DEFAULT_RHO
) -> tuple[BRhoSeries, BRhoSeries, BRhoSeries]:
    """(y1, y2, y3): the pair of family 1 together with y3 = t."""
    y1, y2 = example1_solutions(c, rho)
    rho = Fraction(rho)
    y3 = BRhoSeries.from_elements(
        [BRhoElement.zero(rho), BRhoElement.from_dict({0: 1}, rho)], rho
    )
    return y1, y2, y3


def example2_residual(
    c: int, rho: Rational = DEFAULT_RHO
) -> tuple[Optional[int], BRhoElement]:
    """(t-order, leading coefficient) of x*y1^2 - (x+y3)*y2^2 with y3 = t;
    guaranteed order at least c."""
    y1, y2, y3 = example2_solutions(c, rho)
    res = _shifted_residual(y1, y2, y3)
    order = res.t_order()
    lead = BRhoElement.zero(y1.rho) if order is None else res.coeffs[order]
    return order, lead


REMARK_KMAX = 6


def remark_growth(kmax: int) -> list[tuple[int, Fraction]]:
    """Exact table of ||x^(k!)||_2 = 2^(k!) for k = 0..kmax.

    kmax is capped at 6 because the values grow as 2^(k!).
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    if kmax > REMARK_KMAX:
        raise ValueError(f"kmax must be at most {REMARK_KMAX}; 2^(k!) explodes")
    out = []
    for k in range(kmax + 1):
        norm = brho_norm(BRhoElement.x_power(factorial(k), 2))
        out.append((k, norm))
    return out
