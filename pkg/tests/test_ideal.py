"""Generators, S-polynomials, standard monomials, normal forms, certificate."""

import random
from fractions import Fraction

import pytest

from banachalg.ideal import (
    F,
    G,
    GeneratorId,
    ReductionLimitError,
    STEP_CEILING_ENV,
    divisor_generators,
    generator,
    groebner_certificate,
    is_standard_monomial,
    leading_term,
    nf,
    normal_form,
    parse_generator_id,
    reduce_by_single,
    s_polynomial,
)
from banachalg.poly import Monomial, Polynomial, l1_norm, parse

from conftest import nonzero_random_polynomial, random_polynomial


def m(text):
    (term,) = parse(text).terms
    return term.monomial


# --- generators -------------------------------------------------------------


def test_generator_f0():
    assert generator(F(0)) == parse("x*w0 - z^2")


def test_generator_f_family():
    assert generator(F(1)) == parse("y*w0 - x*w1")
    assert generator(F(4)) == parse("y*w3 - 4*x*w4")


def test_generator_g_family():
    assert generator(G(0, 1)) == parse("2*y*w0*w2 - y*w1^2")
    assert generator(G(1, 3)) == parse("4*y*w1*w4 - 2*y*w2*w3")


def test_generator_binomial_shape():
    for gid in [F(0), F(1), F(7), G(0, 1), G(2, 5), G(3, 4)]:
        assert len(generator(gid).terms) == 2


def test_generator_rejects_bad_ids():
    with pytest.raises(ValueError):
        G(1, 1)
    with pytest.raises(ValueError):
        G(3, 2)
    with pytest.raises(ValueError):
        GeneratorId("F", -1)


def test_parse_generator_id():
    assert parse_generator_id("F3") == F(3)
    assert parse_generator_id("g0,2") == G(0, 2)
    with pytest.raises(ValueError):
        parse_generator_id("H1")
    with pytest.raises(ValueError):
        parse_generator_id("G2")


# --- leading terms ----------------------------------------------------------


def test_leading_terms_of_generators():
    lt = leading_term(generator(F(0)))
    assert (lt.coefficient, lt.monomial) == (Fraction(-1), m("z^2"))
    lt = leading_term(generator(F(1)))
    assert (lt.coefficient, lt.monomial) == (Fraction(-1), m("x*w1"))
    lt = leading_term(generator(G(0, 1)))
    assert (lt.coefficient, lt.monomial) == (Fraction(2), m("y*w0*w2"))


def test_leading_term_zero_raises():
    with pytest.raises(ValueError):
        leading_term(Polynomial.zero())


# --- S-polynomials ----------------------------------------------------------


def test_spoly_ff_equals_g():
    assert s_polynomial(generator(F(1)), generator(F(2))) == generator(G(0, 1))
    assert s_polynomial(generator(F(2)), generator(F(4))) == generator(G(1, 3))


def test_spoly_gf():
    # equals (l+1) * y*w_l * F_{k+1}; at k=0, l=1 the quotient is 2*y*w1
    s = s_polynomial(generator(G(0, 1)), generator(F(2)))
    assert s == parse("2*y^2*w0*w1 - 2*x*y*w1^2")
    assert s == generator(F(1)).mul_term(2, m("y*w1"))


def test_spoly_self_is_zero():
    p = generator(F(3))
    assert s_polynomial(p, p).is_zero()


def test_spoly_leading_terms_cancel():
    rng = random.Random(11)
    for _ in range(50):
        p = nonzero_random_polynomial(rng)
        q = nonzero_random_polynomial(rng)
        s = s_polynomial(p, q)
        big = leading_term(p).monomial.lcm(leading_term(q).monomial)
        if not s.is_zero():
            assert leading_term(s).monomial.key < big.key


# --- standard monomials -----------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("w0*w3", True),
        ("x*w2", False),
        ("y*w0*w2", False),
        ("z^3", False),
        ("w5", True),
        ("x*y*w0", True),      # x next to w0 only is fine
        ("x^3*y^2*w0^4", True),
        ("x*w0*w1", False),    # x with any w index >= 1
        ("y*w1^2", True),
        ("y*w0*w1", True),     # adjacent support window
        ("y*w1*w2^3", True),
        ("y*w0*w1*w2", False), # three support indices
        ("y^2*w3*w5", False),  # gap two
        ("z*w0*w4", True),     # y-free: any support
        ("z^2*w0", False),
        ("1", True),
        ("z", True),
    ],
)
def test_is_standard_monomial(text, expected):
    assert is_standard_monomial(m(text)) is expected


def test_divisor_generators_ordering():
    # x*w1*w2 is divisible by the leading monomials of F1 and F2; x*w2 is the
    # larger, so F2 comes first for the deterministic strategy
    gens = divisor_generators(m("x*w1*w2"))
    assert gens == (F(2), F(1))
    assert divisor_generators(m("y*w0^2*w2*w4")) == (
        G(2, 3),
        G(0, 3),
        G(0, 1),
    )
    assert divisor_generators(m("w0*w9")) == ()


# --- normal form ------------------------------------------------------------


@pytest.mark.parametrize(
    "source,target",
    [
        ("z^2", "x*w0"),
        ("y*w0*w2", "(1/2)*y*w1^2"),
        ("z^2*w1", "y*w0^2"),
        ("w5", "w5"),
        ("x*w0*w3", "(1/6)*y*w1^2"),
        ("x*w1*w2", "(1/2)*y*w1^2"),
        ("x*w1", "y*w0"),
        ("x^2*w2", "(1/2)*y^2*w0"),
        ("0", "0"),
    ],
)
def test_normal_form_examples(source, target):
    assert nf(parse(source)) == parse(target)


def test_normal_form_of_generators_is_zero():
    for gid in [F(0), F(1), F(5), G(0, 1), G(0, 4), G(2, 3), G(3, 7)]:
        assert nf(generator(gid)).is_zero()


def test_normal_form_result_is_standard():
    rng = random.Random(23)
    for _ in range(200):
        p = random_polynomial(rng)
        result = nf(p)
        assert all(is_standard_monomial(t.monomial) for t in result.terms)


def test_confluence_of_strategies():
    rng = random.Random(5)
    for _ in range(200):
        p = random_polynomial(rng)
        deterministic = nf(p)
        randomized, _ = normal_form(p, strategy="random", rng=random.Random(rng.random()))
        assert deterministic == randomized


def test_idempotence():
    rng = random.Random(29)
    for _ in range(100):
        p = random_polynomial(rng)
        once = nf(p)
        assert nf(once) == once


def test_trace_replays_and_certifies_membership():
    rng = random.Random(31)
    for _ in range(100):
        p = random_polynomial(rng)
        result, trace = normal_form(p)
        assert trace.result == result
        assert trace.replay(p) == result
        # p - result is an explicit combination of generators, so reduces to 0
        assert nf(p - result).is_zero()


def test_norm_monotonicity_and_degree_preservation():
    rng = random.Random(37)
    for _ in range(150):
        p = random_polynomial(rng)
        result = nf(p)
        assert l1_norm(result) <= l1_norm(p)
        if not result.is_zero():
            assert result.total_degree() <= p.total_degree()


def test_per_step_factor_in_unit_interval():
    # each rewrite multiplies the moved coefficient by |tail/lead| in (0, 1]
    for gid in [F(0)] + [F(j) for j in range(1, 12)] + [
        G(k, l) for k in range(0, 6) for l in range(k + 1, 7)
    ]:
        lead, tail = generator(gid).terms
        r = abs(tail.coefficient / lead.coefficient)
        assert 0 < r <= 1


def test_homogeneous_steps():
    # generators are homogeneous, so every intermediate keeps term degrees
    p = parse("z^2*w3 + x*w1*w4 - 2*y*w0*w5")
    result, trace = normal_form(p)
    for step in trace.steps:
        g = generator(step.generator)
        degs = {t.monomial.degree for t in g.terms}
        assert len(degs) == 1


def test_step_ceiling_guard():
    with pytest.raises(ReductionLimitError):
        normal_form(parse("z^2"), max_steps=0)


def test_step_ceiling_env_override(monkeypatch):
    monkeypatch.setenv(STEP_CEILING_ENV, "0")
    with pytest.raises(ReductionLimitError):
        normal_form(parse("z^2"))
    monkeypatch.setenv(STEP_CEILING_ENV, "10")
    assert nf(parse("z^2")) == parse("x*w0")


# --- finite orbits ----------------------------------------------------------


def forward_backward_orbit(start: Monomial, index_bound: int, cap: int = 20000):
    """All monomials reachable from ``start`` by forward or backward rewrite
    steps keeping every w-index <= index_bound (scalars ignored)."""
    seen = {start}
    frontier = [start]
    while frontier:
        assert len(seen) <= cap, "orbit exploded"
        mono = frontier.pop()
        neighbours = []
        for gid in divisor_generators(mono):
            lead, _, tail, _ = _rule(gid)
            neighbours.append((mono / lead) * tail)
        for gid in _all_gids(index_bound):
            lead, _, tail, _ = _rule(gid)
            if tail.divides(mono) and max(
                [i for i, _ in ((mono / tail) * lead).w] or [0]
            ) <= index_bound:
                neighbours.append((mono / tail) * lead)
        for n in neighbours:
            if n not in seen:
                seen.add(n)
                frontier.append(n)
    return seen


def _rule(gid):
    g = generator(gid)
    lead, tail = g.terms
    return lead.monomial, lead.coefficient, tail.monomial, tail.coefficient


def _all_gids(index_bound):
    out = [F(j) for j in range(index_bound + 1)]
    out += [G(k, l) for k in range(index_bound - 1) for l in range(k + 1, index_bound)]
    return out


@pytest.mark.parametrize("text", ["y*w0*w2", "z^2*w3", "x*w1*w2", "w0*w3"])
def test_orbits_are_finite_and_homogeneous(text):
    start = m(text)
    orbit = forward_backward_orbit(start, index_bound=8)
    assert len(orbit) < 500
    assert {mono.degree for mono in orbit} == {start.degree}


# --- certificate ------------------------------------------------------------


def test_certificate_small_index_passes():
    report = groebner_certificate(3)
    assert report.all_passed
    # F-F pairs with w-indices <= 3: C(3,2); G's: (0,1),(0,2),(1,2)
    assert len(report.checks) >= 3 + 3 + 2 + 3 + 3
    assert report.to_json()["summary"]["all_passed"] is True


def test_certificate_identity_counts():
    report = groebner_certificate(4)
    by_name = {}
    for c in report.checks:
        by_name.setdefault(c.identity, []).append(c)
    assert len(by_name["S(F_{k+1},F_{l+1}) = G_{k,l}"]) == 6  # pairs k<l<=3
    assert len(by_name["S(G_{k,l},F_{l+1}) = (l+1)*y*w_l * F_{k+1}"]) == 6
    assert len(by_name["rem(S(G_{k,l},F_k), F_{k+1}) = y*G_{k-1,l}"]) == 3
    # non-coprime pairs: 6 F-F, 6 G-F(l+1), 3 G-F(k), 15 G-G
    assert len(by_name["nf(S(p,q)) = 0"]) == 6 + 6 + 3 + 15


def test_certificate_remainder_identity_example():
    # k=1, l=2: remainder of S(G_{1,2}, F_1) under division by F_2 is y*G_{0,2}
    s = s_polynomial(generator(G(1, 2)), generator(F(1)))
    assert s == parse("3*y^2*w0*w3 - 2*x*y*w2^2")
    quotient, remainder = reduce_by_single(s, F(2))
    assert remainder == generator(G(0, 2)).mul_term(1, m("y"))
    assert quotient == parse("y*w2")


def test_certificate_rejects_tiny_index():
    with pytest.raises(ValueError):
        groebner_certificate(1)


def test_certificate_text_rendering():
    report = groebner_certificate(2)
    text = report.to_text()
    assert "identities hold" in text
    assert report.failed == 0
