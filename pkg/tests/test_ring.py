"""Coordinate ring: normal forms against the Groebner oracle, star, evaluation."""
import numpy as np
import pytest
from hypothesis import given

from su2particle.core import Matrix2, basis_element
from su2particle.rational import I, ComplexRational
from su2particle.ring import (GroupPolynomial, evaluate, is_normal, multiply, normalize, star,
                             trace_polynomial, translate, variable_matrix)

from conftest import poly_from_terms, polynomials, random_group_point

u11, u12, u21, u22 = variable_matrix()


def _parse(text):
    env = {"u11": u11, "u12": u12, "u21": u21, "u22": u22, "I": GroupPolynomial.constant(I)}
    return eval(text, {}, env)  # noqa: S307 - fixed strings from the frozen oracle file


def test_normal_forms_match_frozen_oracle(frozen):
    for case in frozen["normal_forms"]:
        assert _parse(case["input"]) == poly_from_terms(case["terms"]), case["input"]


def test_det_relation():
    assert u11 * u22 == GroupPolynomial.constant(1) + u12 * u21
    assert multiply(u11, u22) == 1 + u12 * u21
    assert u11 * u11 * u22 == u11 + u11 * u12 * u21
    assert u12 * u21 == GroupPolynomial.monomial((0, 1, 1, 0))


def test_normalize_raw_dict():
    raw = {(2, 0, 0, 2): 1, (0, 0, 0, 0): -1}
    p = normalize(raw)
    assert all(is_normal(m) for m, _ in p.items())
    # u11^2 u22^2 - 1 = (1 + u12 u21)^2 - 1
    assert p == 2 * (u12 * u21) + (u12 * u21) ** 2


@given(polynomials)
def test_normalize_idempotent(p):
    assert normalize(p) == p
    assert all(is_normal(m) for m, _ in p.items())


@given(polynomials, polynomials, polynomials)
def test_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * 1 == p


@given(polynomials, polynomials)
def test_evaluate_is_a_homomorphism(p, q):
    g = random_group_point(np.random.default_rng(len(p.terms) * 7 + len(q.terms)))
    assert abs(evaluate(p * q, g) - evaluate(p, g) * evaluate(q, g)) < 1e-9 * (1 + abs(evaluate(p * q, g)))
    assert abs(evaluate(p + q, g) - evaluate(p, g) - evaluate(q, g)) < 1e-9


def test_star_examples():
    assert star(u11 * u12) == -(u21 * u22)
    assert star(GroupPolynomial.constant(I)) == GroupPolynomial.constant(-I)


@given(polynomials)
def test_star_is_an_involution(p):
    assert star(star(p)) == p


@given(polynomials, polynomials)
def test_star_is_multiplicative(p, q):
    assert star(p * q) == star(p) * star(q)


@given(polynomials)
def test_star_is_pointwise_conjugation(p):
    """Oracle: complex conjugation of values on sampled group points."""
    rng = np.random.default_rng(3)
    for _ in range(3):
        g = random_group_point(rng)
        assert abs(evaluate(star(p), g) - evaluate(p, g).conjugate()) < 1e-9 * (1 + abs(evaluate(p, g)))


def test_evaluate_basics():
    assert evaluate(u11, np.eye(2)) == 1
    assert evaluate(GroupPolynomial.zero(), np.eye(2)) == 0
    with pytest.raises(ValueError):
        evaluate(u11, 2 * np.eye(2))


def test_trace_polynomials():
    half = ComplexRational(-1) / 2
    assert trace_polynomial(Matrix2.identity()) == (u11 + u22).scale(half)
    t = (Matrix2.identity() + basis_element(3).scale(I))
    assert trace_polynomial(t @ t) == -(u11 + u22 - u12 - u21)
    assert trace_polynomial(Matrix2.zero()) == GroupPolynomial.zero()


def test_translate_by_identity_and_minus_identity():
    p = u11 * u12 + u21 ** 3
    assert translate(p, Matrix2.identity()) == p
    assert translate(p, Matrix2.identity().scale(-1), "right") == u11 * u12 - u21 ** 3


def test_json_round_trip():
    p = (u11 + I * u21) ** 2 - GroupPolynomial.constant(ComplexRational(1, -3) / 7)
    obj = p.to_json()
    assert GroupPolynomial.from_json(obj) == p
    assert all(set(t) == {"m", "re", "im"} for t in obj["terms"])


def test_polynomials_are_immutable_and_hashable():
    p = u11 + u12
    with pytest.raises(AttributeError):
        p.foo = 1
    assert hash(p) == hash(u12 + u11)
