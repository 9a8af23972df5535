"""Exact integration against the normalized Haar measure of SU(2).

With ``g = [[alpha, beta], [-conj(beta), conj(alpha)]]`` a monomial integrates
to zero unless its torus weights cancel (a == d, b == c); then
``|alpha|^2`` is uniform on [0, 1] and the Beta integral gives
``(-1)^c a! b! / (a+b+1)!``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

import numpy as np

from . import _kernels
from .operators import Operator
from .rational import ComplexRational, format_fraction
from .ring import GroupPolynomial, Monomial, _mono_mul, star
from .spectra import (DEFAULT_BUDGET, SpinLabel, build_multiplet, check_budget,
                      parse_half_integer)

MIN_QUADRATURE_SAMPLES = 1000


def monomial_integral(m: Monomial) -> Fraction:
    a, b, c, d = m
    if a != d or b != c:
        return Fraction(0)
    sign = -1 if c % 2 else 1
    return Fraction(sign * factorial(a) * factorial(b), factorial(a + b + 1))


def integrate(p: GroupPolynomial) -> ComplexRational:
    total = ComplexRational(0)
    for m, c in p.items():
        w = monomial_integral(m)
        if w:
            total = total + c * w
    return total


def inner_product(p: GroupPolynomial, q: GroupPolynomial) -> ComplexRational:
    """``<p|q> = integral of conj(p) q``, computed on raw monomial products."""
    sp = star(p)
    total = ComplexRational(0)
    for m, c in sp._terms.items():
        for n, e in q._terms.items():
            w = monomial_integral(_mono_mul(m, n))
            if w:
                total = total + c * e * w
    return total


def norm_squared(p: GroupPolynomial) -> Fraction:
    v = inner_product(p, p)
    if v.im:
        raise ArithmeticError("<p|p> has a nonzero imaginary part")  # pragma: no cover
    return v.re


@dataclass
class HermiticityReport:
    operator: str
    pairs_checked: int
    status: str
    witness: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"operator": self.operator, "pairs": self.pairs_checked, "status": self.status,
                "witness": None if self.witness is None else
                [str(self.witness[0]), str(self.witness[1])]}


def adjoint_check(op: Operator, adjoint: Operator, samples: Sequence[GroupPolynomial],
                  name: str | None = None) -> HermiticityReport:
    """Check ``<op P|Q> == <P|adjoint Q>`` for every ordered sample pair."""
    if not samples:
        raise ValueError("need at least one sample polynomial")
    images = [op.apply(p) for p in samples]
    adj_images = images if adjoint is op else [adjoint.apply(q) for q in samples]
    count = 0
    for i, p in enumerate(samples):
        for k, q in enumerate(samples):
            count += 1
            if inner_product(images[i], q) != inner_product(p, adj_images[k]):
                return HermiticityReport(name or op.label, count, "fail", (p, q))
    return HermiticityReport(name or op.label, count, "pass")


def hermiticity_check(op: Operator, samples: Sequence[GroupPolynomial]) -> HermiticityReport:
    return adjoint_check(op, op, samples, name=f"{op.label} hermitian")


@dataclass
class GramReport:
    labels: list
    matrix: list = field(repr=False)

    @property
    def diagonal_positive(self) -> bool:
        return all(self.matrix[i][i].is_real() and self.matrix[i][i].re > 0
                   for i in range(len(self.labels)))

    @property
    def off_diagonal_zero(self) -> bool:
        n = len(self.labels)
        return all(not self.matrix[i][k] for i in range(n) for k in range(n) if i != k)

    @property
    def passed(self) -> bool:
        return self.diagonal_positive and self.off_diagonal_zero

    def to_json(self) -> dict:
        def cell(v: ComplexRational) -> str:
            if v.im:
                return f"{format_fraction(v.re)}+{format_fraction(v.im)}i"
            return format_fraction(v.re)
        return {"labels": [lab.to_json() for lab in self.labels],
                "matrix": [[cell(v) for v in row] for row in self.matrix]}


def gram_matrix(j_max="3/2", a: int = 3, b: int = 3,
                budget: Fraction = DEFAULT_BUDGET) -> GramReport:
    two_jmax = parse_half_integer(j_max)
    check_budget(two_jmax, budget)
    funcs = [ef for two_j in range(two_jmax + 1) for ef in build_multiplet(two_j, a, b, budget)]
    n = len(funcs)
    matrix = [[ComplexRational(0)] * n for _ in range(n)]
    for i in range(n):
        for k in range(i, n):
            v = inner_product(funcs[i].poly, funcs[k].poly)
            matrix[i][k] = v
            matrix[k][i] = v.conjugate()
    return GramReport([ef.label for ef in funcs], matrix)


@dataclass(frozen=True)
class QuadratureResult:
    estimate: complex
    standard_error: float
    n_samples: int
    seed: int

    def to_json(self) -> dict:
        return {"estimate": {"re": self.estimate.real, "im": self.estimate.imag},
                "standard_error": self.standard_error, "n_samples": self.n_samples,
                "seed": self.seed}


def sample_group(n: int, seed: int = 0) -> np.ndarray:
    """``n`` Haar-distributed SU(2) matrices, shape (n, 2, 2).

    Chart: alpha = sqrt(s) e^{i phi1}, beta = sqrt(1-s) e^{i phi2} with s, phi1,
    phi2 independent uniform; each coordinate gets its own spawned stream.
    """
    streams = [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(3)]
    s = streams[0].random(n)
    phi1 = streams[1].random(n) * (2 * np.pi)
    phi2 = streams[2].random(n) * (2 * np.pi)
    alpha = np.sqrt(s) * np.exp(1j * phi1)
    beta = np.sqrt(1.0 - s) * np.exp(1j * phi2)
    g = np.empty((n, 2, 2), dtype=complex)
    g[:, 0, 0] = alpha
    g[:, 0, 1] = beta
    g[:, 1, 0] = -np.conj(beta)
    g[:, 1, 1] = np.conj(alpha)
    return g


def quadrature_oracle(p: GroupPolynomial, n_samples: int = 100_000, seed: int = 0) -> QuadratureResult:
    """Monte-Carlo estimate of the Haar integral with its standard error."""
    if n_samples < MIN_QUADRATURE_SAMPLES:
        raise ValueError(f"n_samples must be at least {MIN_QUADRATURE_SAMPLES}")
    values = _kernels.evaluate_many(p, sample_group(n_samples, seed))
    mean = complex(values.mean())
    # standard error of a complex mean: spread of |v - mean|
    se = float(np.sqrt(np.sum(np.abs(values - mean) ** 2) / (n_samples - 1) / n_samples))
    return QuadratureResult(mean, se, n_samples, seed)
