from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from su2particle import _kernels
from su2particle.haar import (gram_matrix, hermiticity_check, inner_product, integrate,
                              monomial_integral, norm_squared, quadrature_oracle, sample_group)
from su2particle.core import Matrix2, basis_element
from su2particle.operators import ladder, quantum_L, quantum_R
from su2particle.rational import ComplexRational
from su2particle.ring import GroupPolynomial, monomial_basis, translate, variable_matrix
from su2particle.spectra import SpinLabel, build_eigenfunction, seed_function

from conftest import polynomials

u11, u12, u21, u22 = variable_matrix()


def grid_integral(p: GroupPolynomial, n: int = 12) -> complex:
    """Deterministic tensor-product rule in the (s, phi1, phi2) chart.

    Gauss-Legendre on s in [0, 1] and n equispaced phases are exact for the
    polynomial and trigonometric factors that appear below degree n.
    """
    x, w = np.polynomial.legendre.leggauss(n)
    s, ws = (x + 1) / 2, w / 2
    phi = 2 * np.pi * np.arange(n) / n
    S, P1, P2 = np.meshgrid(s, phi, phi, indexing="ij")
    W = np.broadcast_to(ws[:, None, None], S.shape) / n ** 2
    alpha, beta = np.sqrt(S) * np.exp(1j * P1), np.sqrt(1 - S) * np.exp(1j * P2)
    g = np.stack([np.stack([alpha, beta], -1), np.stack([-beta.conj(), alpha.conj()], -1)], -2)
    vals = _kernels.evaluate_many(p, g.reshape(-1, 2, 2))
    return complex(np.sum(vals * W.ravel()))


def test_monomial_integrals_match_frozen_oracle(frozen):
    for case in frozen["haar"]:
        assert str(monomial_integral(tuple(case["m"]))) == case["value"].removesuffix("/1")


def test_small_integrals():
    assert integrate(GroupPolynomial.constant(1)) == 1
    assert integrate(u11 * u22) == Fraction(1, 2)
    assert integrate(u12 * u21) == Fraction(-1, 2)
    assert integrate(u11) == 0


def test_grid_rule_agrees_to_1e9():
    assert abs(grid_integral(u11 * u22) - 0.5) < 1e-9
    for m in monomial_basis(4):
        p = GroupPolynomial.monomial(m)
        assert abs(grid_integral(p) - complex(integrate(p))) < 1e-9, m


@given(polynomials)
@settings(max_examples=30)
def test_integral_is_bi_invariant(p):
    """Left and right translation by the exact elements I, -I, T1, T2, T3."""
    ref = integrate(p)
    one = Matrix2.identity()
    for h in (one, one.scale(-1), basis_element(1), basis_element(2), basis_element(3)):
        assert integrate(translate(p, h, "left")) == ref
        assert integrate(translate(p, h, "right")) == ref


@given(polynomials)
@settings(max_examples=30)
def test_inner_product_positive(p):
    n = norm_squared(p)
    assert n >= 0
    assert (n == 0) == (not p)


@given(polynomials, polynomials)
@settings(max_examples=30)
def test_inner_product_hermitian_symmetry(p, q):
    assert inner_product(p, q) == inner_product(q, p).conjugate()


def test_seed_norm(frozen):
    f = seed_function()
    assert inner_product(f, f) == 2
    assert str(norm_squared(f)) == frozen["seed_norm"].removesuffix("/1")
    assert inner_product(GroupPolynomial.constant(1), GroupPolynomial.constant(1)) == 1


def test_distinct_labels_are_orthogonal():
    a = build_eigenfunction(SpinLabel.of("1/2", "1/2", "1/2")).poly
    b = build_eigenfunction(SpinLabel.of("1/2", "-1/2", "1/2")).poly
    assert inner_product(a, b) == 0


@pytest.mark.parametrize("op", [quantum_R(3), quantum_L(2), quantum_R(1), quantum_L(3)],
                         ids=lambda o: o.label)
def test_hermiticity_degree3(op):
    samples = [GroupPolynomial.monomial(m) for m in monomial_basis(3)]
    assert hermiticity_check(op, samples).passed


def test_hermiticity_failure_has_witness():
    samples = [GroupPolynomial.monomial(m) for m in monomial_basis(1)]
    rep = hermiticity_check(ladder("R", "+"), samples)
    assert rep.status == "fail" and rep.witness is not None


def test_gram_half():
    g = gram_matrix("1/2")
    assert len(g.labels) == 5
    assert g.diagonal_positive and g.off_diagonal_zero
    assert g.matrix[0][0] == 1
    assert g.to_json()["matrix"][1][1] == "2/1"


# -- quadrature -------------------------------------------------------------------


def test_sampled_points_are_in_su2():
    g = sample_group(500, seed=4)
    gh = np.conj(np.swapaxes(g, 1, 2))
    assert np.allclose(gh @ g, np.eye(2), atol=1e-14)
    assert np.allclose(np.linalg.det(g), 1, atol=1e-14)


def test_quadrature_constant_is_exact():
    q = quadrature_oracle(GroupPolynomial.constant(1), 2000)
    assert q.estimate == 1.0 and q.standard_error == 0.0


@pytest.mark.parametrize("p", [u11 * u22, u11, u12 * u21 * u11 * u22], ids=["u11u22", "u11", "deg4"])
def test_quadrature_within_three_se(p):
    q = quadrature_oracle(p, 50_000, seed=1)
    assert abs(q.estimate - complex(integrate(p))) <= 3 * q.standard_error


def test_quadrature_is_reproducible():
    a = quadrature_oracle(u11 * u22, 5000, seed=9)
    b = quadrature_oracle(u11 * u22, 5000, seed=9)
    assert a == b


def test_quadrature_sample_floor():
    with pytest.raises(ValueError):
        quadrature_oracle(u11, 999)


def test_complex_rational_result_type():
    assert isinstance(integrate(u11 * u22), ComplexRational)


def test_fifty_random_monomials_within_four_se():
    rng = np.random.default_rng(50)
    basis = monomial_basis(6)
    picks = rng.choice(len(basis), size=50, replace=False)
    for k in picks:
        p = GroupPolynomial.monomial(basis[k])
        q = quadrature_oracle(p, 20_000, seed=int(k))
        assert abs(q.estimate - complex(integrate(p))) <= 4 * q.standard_error + 1e-15, basis[k]
