"""The binomial ideal, its rewriting system and the Gröbner certificate.

The ideal is generated by two families of homogeneous binomials:

    F0      = x*w0 - z^2
    F_{k+1} = y*w_k - (k+1)*x*w_{k+1}          for k >= 0
    G_{k,l} = (l+1)*y*w_k*w_{l+1} - (k+1)*y*w_l*w_{k+1}   for 0 <= k < l

The G family consists of the S-polynomials S(F_{k+1}, F_{l+1}); together the
two families form a Gröbner basis for the order of ``poly.compare``.  The
leading monomials are z^2, x*w_{k+1} and y*w_k*w_{l+1}, so a monomial is
*standard* iff it is divisible by none of those, and every polynomial has a
unique normal form supported on standard monomials.

Reduction replaces a term c*m by c'*m' with m' < m, |c'| <= |c| and the same
total degree, and never raises a w-index, so it terminates without any
Noetherian assumption.  ``normal_form`` records a replayable trace.

S-polynomials use the fraction-free convention

    S(p, q) = lc(p) * (L/lm(q)) * q  -  lc(q) * (L/lm(p)) * p,

with L the lcm of the leading monomials.  Under this convention
S(F_{k+1}, F_{l+1}) equals G_{k,l} exactly and the division identities
checked by ``groebner_certificate`` are exact scalar-for-scalar.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .poly import Monomial, Polynomial, Term, to_str

STEP_CEILING_ENV = "BANACHALG_MAX_REDUCTION_STEPS"
DEFAULT_STEP_CEILING = 10**6


class ReductionLimitError(RuntimeError):
    """The reduction step ceiling was hit; this indicates an internal bug."""


@dataclass(frozen=True, order=True)
class GeneratorId:
    """F(j) or G(k, l) with k < l; ordered and hashable."""

    kind: str
    a: int
    b: int = -1

    def __post_init__(self):
        if self.kind not in ("F", "G"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "F" and (self.a < 0 or self.b != -1):
            raise ValueError(f"invalid F index {self.a}")
        if self.kind == "G" and not 0 <= self.a < self.b:
            raise ValueError(f"G requires 0 <= k < l, got k={self.a}, l={self.b}")

    def __str__(self) -> str:
        return f"F{self.a}" if self.kind == "F" else f"G{self.a},{self.b}"


def F(j: int) -> GeneratorId:
    return GeneratorId("F", j)


def G(k: int, l: int) -> GeneratorId:
    return GeneratorId("G", k, l)


def parse_generator_id(text: str) -> GeneratorId:
    text = text.strip()
    try:
        if text[:1] in ("F", "f"):
            return F(int(text[1:]))
        if text[:1] in ("G", "g"):
            k, l = text[1:].split(",")
            return G(int(k), int(l))
    except (ValueError, IndexError):
        pass
    raise ValueError(f"cannot parse generator id {text!r} (expected F<j> or G<k>,<l>)")


@lru_cache(maxsize=None)
def generator(gid: GeneratorId) -> Polynomial:
    """The exact binomial for the id; rejects malformed ids on construction."""
    if gid.kind == "F":
        j = gid.a
        if j == 0:
            return Polynomial.from_terms(
                [(1, Monomial.build(x=1, w={0: 1})), (-1, Monomial.build(z=2))]
            )
        return Polynomial.from_terms(
            [
                (1, Monomial.build(y=1, w={j - 1: 1})),
                (-j, Monomial.build(x=1, w={j: 1})),
            ]
        )
    k, l = gid.a, gid.b
    second: dict[int, int] = {}  # w_l * w_{k+1}; the indices coincide when l = k+1
    for i in (l, k + 1):
        second[i] = second.get(i, 0) + 1
    return Polynomial.from_terms(
        [
            (l + 1, Monomial.build(y=1, w={k: 1, l + 1: 1})),
            (-(k + 1), Monomial.build(y=1, w=second)),
        ]
    )


def leading_term(p: Polynomial) -> Term:
    """Maximal term under the monomial order; error on the zero polynomial."""
    return p.leading_term()


@lru_cache(maxsize=None)
def _leading_monomial(gid: GeneratorId) -> Monomial:
    return generator(gid).leading_term().monomial


_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def _rewrite_rule(gid: GeneratorId) -> tuple[Monomial, Fraction, Monomial, Fraction]:
    """(leading monomial, leading coeff, tail monomial, tail coeff).

    Every generator is a binomial, so a reduction step is one division, one
    multiplication and one coefficient update.
    """
    g = generator(gid)
    lt, tail = g.terms
    return lt.monomial, lt.coefficient, tail.monomial, tail.coefficient


def s_polynomial(p: Polynomial, q: Polynomial) -> Polynomial:
    """Fraction-free S-polynomial; the leading terms cancel exactly."""
    ltp = p.leading_term()
    ltq = q.leading_term()
    big = ltp.monomial.lcm(ltq.monomial)
    up = big / ltp.monomial
    uq = big / ltq.monomial
    pairs = [(ltp.coefficient * t.coefficient, t.monomial * uq) for t in q.terms]
    pairs += [(-ltq.coefficient * t.coefficient, t.monomial * up) for t in p.terms]
    return Polynomial.from_terms(pairs)


def is_standard_monomial(m: Monomial) -> bool:
    """True iff m is divisible by none of z^2, x*w_{k+1}, y*w_k*w_{l+1} (k<l)."""
    if m.z_exp >= 2:
        return False
    idx = m.w_indices()
    if m.x_exp >= 1 and any(i >= 1 for i in idx):
        return False
    if m.y_exp >= 1:
        # two distinct support indices at distance >= 2
        for lo, hi in zip(idx, idx[1:]):
            if hi - lo >= 2:
                return False
        if len(idx) >= 3:
            return False
    return True


def is_standard(p: Polynomial) -> bool:
    return all(is_standard_monomial(t.monomial) for t in p.terms)


@lru_cache(maxsize=65536)
def divisor_generators(m: Monomial) -> tuple[GeneratorId, ...]:
    """Generators whose leading monomial divides m, largest leading monomial
    first.  Only finitely many can apply; they are read off the w-support.
    """
    out: list[GeneratorId] = []
    idx = m.w_indices()
    if m.y_exp >= 1:
        for i_pos, lo in enumerate(idx):
            for hi in idx[i_pos + 1 :]:
                if hi - lo >= 2:
                    out.append(G(lo, hi - 1))
    if m.x_exp >= 1:
        for j in idx:
            if j >= 1:
                out.append(F(j))
    if m.z_exp >= 2:
        out.append(F(0))
    # largest leading monomial first; equal leading monomials cannot occur
    # across distinct generators, but break such ties by smallest id anyway
    out.sort()
    out.sort(key=lambda g: _leading_monomial(g).key, reverse=True)
    return tuple(out)


@dataclass(frozen=True)
class ReductionStep:
    """One division step: subtract scalar * multiplier * generator(gen)."""

    generator: GeneratorId
    multiplier: Monomial
    scalar: Fraction


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    result: Polynomial

    def replay(self, start: Polynomial) -> Polynomial:
        """Apply the recorded steps to ``start``; equals ``result`` when
        ``start`` is the polynomial the trace was computed from."""
        p = start
        for s in self.steps:
            p = p - generator(s.generator).mul_term(s.scalar, s.multiplier)
        return p


def _step_ceiling(limit: Optional[int]) -> int:
    if limit is not None:
        return limit
    raw = os.environ.get(STEP_CEILING_ENV)
    return int(raw) if raw else DEFAULT_STEP_CEILING


def normal_form(
    p: Polynomial,
    *,
    strategy: str = "largest",
    rng: Optional[random.Random] = None,
    max_steps: Optional[int] = None,
) -> tuple[Polynomial, ReductionTrace]:
    """Reduce p to its unique standard-monomial representative modulo the
    ideal, returning the result together with a replayable trace.

    strategy 'largest' (default, deterministic): reduce the largest reducible
    monomial by the applicable generator with the largest leading monomial.
    strategy 'random': reduce a uniformly chosen reducible term by a uniformly
    chosen applicable generator (pass ``rng``); the result is identical by
    confluence, which the test suite checks rather than assumes.
    """
    if strategy not in ("largest", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "random" and rng is None:
        rng = random.Random()
    ceiling = _step_ceiling(max_steps)
    steps: list[ReductionStep] = []
    # dict-backed worklist; each step touches two entries, so the canonical
    # Polynomial is rebuilt only once at the end
    work: dict[Monomial, Fraction] = {t.monomial: t.coefficient for t in p.terms}
    while True:
        choice = None
        if strategy == "largest":
            for m in sorted(work, key=lambda m: m.key, reverse=True):
                gens = divisor_generators(m)
                if gens:
                    choice = (m, gens[0])
                    break
        else:
            reducible = [
                (m, gens) for m in work if (gens := divisor_generators(m))
            ]
            if reducible:
                m, gens = reducible[rng.randrange(len(reducible))]
                choice = (m, gens[rng.randrange(len(gens))])
        if choice is None:
            result = Polynomial.from_terms((c, m) for m, c in work.items())
            return result, ReductionTrace(tuple(steps), result)
        if len(steps) >= ceiling:
            raise ReductionLimitError(
                f"no normal form after {ceiling} steps; raise "
                f"{STEP_CEILING_ENV} or report a bug"
            )
        m, gid = choice
        lm, lc, tail_m, tail_c = _rewrite_rule(gid)
        multiplier = m / lm
        scalar = work.pop(m) / lc
        target = multiplier * tail_m
        c = work.get(target, _ZERO) - scalar * tail_c
        if c:
            work[target] = c
        else:
            work.pop(target, None)
        steps.append(ReductionStep(gid, multiplier, scalar))


def nf(p: Polynomial) -> Polynomial:
    """Normal form without the trace."""
    return normal_form(p)[0]


def reduce_by_single(p: Polynomial, gid: GeneratorId) -> tuple[Polynomial, Polynomial]:
    """Divide p by the one generator gid: returns (quotient, remainder) with
    p = quotient * generator(gid) + remainder and no remainder monomial
    divisible by the generator's leading monomial.
    """
    lm, lc, tail_m, tail_c = _rewrite_rule(gid)
    quotient: list[tuple[Fraction, Monomial]] = []
    work: dict[Monomial, Fraction] = {t.monomial: t.coefficient for t in p.terms}
    while True:
        m = None
        for cand in sorted(work, key=lambda m: m.key, reverse=True):
            if lm.divides(cand):
                m = cand
                break
        if m is None:
            return (
                Polynomial.from_terms(quotient),
                Polynomial.from_terms((c, mm) for mm, c in work.items()),
            )
        multiplier = m / lm
        scalar = work.pop(m) / lc
        quotient.append((scalar, multiplier))
        target = multiplier * tail_m
        c = work.get(target, _ZERO) - scalar * tail_c
        if c:
            work[target] = c
        else:
            work.pop(target, None)


# ---------------------------------------------------------------------------
# Gröbner certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    indices: tuple[int, ...]
    passed: bool
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "indices": list(self.indices),
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class CertificateReport:
    max_index: int
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "max_index": self.max_index,
            "identities": [c.to_json() for c in self.checks],
            "summary": {
                "checked": len(self.checks),
                "passed": self.passed,
                "failed": self.failed,
                "all_passed": self.all_passed,
            },
        }

    def to_text(self, verbose: bool = False) -> str:
        lines = []
        for c in self.checks:
            if verbose or not c.passed:
                status = "ok  " if c.passed else "FAIL"
                lines.append(f"{status} {c.identity} {list(c.indices)}: {c.lhs} = {c.rhs}")
        lines.append(
            f"groebner certificate (w-indices <= {self.max_index}): "
            f"{self.passed}/{len(self.checks)} identities hold"
        )
        return "\n".join(lines)


def _noncoprime_pairs(max_index: int) -> Iterator[tuple[GeneratorId, GeneratorId]]:
    """All unordered generator pairs with non-coprime leading monomials,
    every w-index bounded by max_index.  F0's leading monomial z^2 is coprime
    to every other leading monomial, so F0 never appears.
    """
    fs = [F(j) for j in range(1, max_index + 1)]
    gs = [G(k, l) for k in range(0, max_index - 1) for l in range(k + 1, max_index)]
    for i, f1 in enumerate(fs):
        for f2 in fs[i + 1 :]:
            yield f1, f2  # share x
    for g in gs:
        k, l = g.a, g.b
        yield g, F(l + 1)  # share w_{l+1}
        if k >= 1:
            yield g, F(k)  # share w_k
    for i, g1 in enumerate(gs):
        for g2 in gs[i + 1 :]:
            yield g1, g2  # share y


def groebner_certificate(max_index: int) -> CertificateReport:
    """Buchberger-style certificate with every w-index bounded by max_index.

    Checks, exactly in rational arithmetic:
      (i)   S(F_{k+1}, F_{l+1}) == G_{k,l}
      (ii)  S(G_{k,l}, F_{l+1}) == (l+1)*y*w_l * F_{k+1}, i.e. dividing by
            F_{k+1} alone leaves remainder 0 with quotient (l+1)*y*w_l
      (iii) the remainder of S(G_{k,l}, F_k) under division by F_{k+1}
            equals y * G_{k-1,l}            (k >= 1)
      (iv)  the S-polynomial of every pair with non-coprime leading
            monomials reduces to 0 under normal_form
    Failures are reported in the result, never raised.
    """
    if max_index < 2:
        raise ValueError("max_index must be at least 2")
    checks: list[IdentityCheck] = []

    for k in range(0, max_index - 1):
        for l in range(k + 1, max_index):
            s = s_polynomial(generator(F(k + 1)), generator(F(l + 1)))
            g = generator(G(k, l))
            checks.append(
                IdentityCheck(
                    "S(F_{k+1},F_{l+1}) = G_{k,l}",
                    (k, l),
                    s == g,
                    to_str(s),
                    to_str(g),
                )
            )

    for k in range(0, max_index - 1):
        for l in range(k + 1, max_index):
            s = s_polynomial(generator(G(k, l)), generator(F(l + 1)))
            quotient, remainder = reduce_by_single(s, F(k + 1))
            expected_q = Polynomial.monomial(
                Monomial.build(y=1, w={l: 1}), l + 1
            )
            ok = remainder.is_zero() and quotient == expected_q
            checks.append(
                IdentityCheck(
                    "S(G_{k,l},F_{l+1}) = (l+1)*y*w_l * F_{k+1}",
                    (k, l),
                    ok,
                    f"quotient {to_str(quotient)}, remainder {to_str(remainder)}",
                    f"quotient {to_str(expected_q)}, remainder 0",
                )
            )

    for k in range(1, max_index - 1):
        for l in range(k + 1, max_index):
            s = s_polynomial(generator(G(k, l)), generator(F(k)))
            _, remainder = reduce_by_single(s, F(k + 1))
            expected = generator(G(k - 1, l)).mul_term(1, Monomial.build(y=1))
            checks.append(
                IdentityCheck(
                    "rem(S(G_{k,l},F_k), F_{k+1}) = y*G_{k-1,l}",
                    (k, l),
                    remainder == expected,
                    to_str(remainder),
                    to_str(expected),
                )
            )

    for p_id, q_id in _noncoprime_pairs(max_index):
        s = s_polynomial(generator(p_id), generator(q_id))
        result = nf(s)
        checks.append(
            IdentityCheck(
                "nf(S(p,q)) = 0",
                _pair_indices(p_id, q_id),
                result.is_zero(),
                f"S({p_id},{q_id}) = {to_str(s)}",
                "0",
            )
        )

    return CertificateReport(max_index, tuple(checks))


def _pair_indices(p_id: GeneratorId, q_id: GeneratorId) -> tuple[int, ...]:
    out = [p_id.a] + ([p_id.b] if p_id.kind == "G" else [])
    out += [q_id.a] + ([q_id.b] if q_id.kind == "G" else [])
    return tuple(out)
