"""Reduction of the SU(2) model by the left U(1) generated by T_3.

Gauge-invariant coordinates are the components of ``X = g^-1 T_3 g``; they
sweep the unit sphere.  On the quantum side the constraint ``L3 psi = 0``
keeps the integer-j, l = 0 states, which are rewritten as polynomials in x
and matched against spherical harmonics.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels
from .core import Matrix2, basis_element
from .dynamics import Trajectory, _charges
from .harmonics import (SpherePolynomial, canonical_exponents, proportionality_constant,
                        solid_harmonic)
from .linalg import InconsistentSystem, solve
from .operators import quantum_L
from .rational import ComplexRational, format_fraction
from .ring import GroupPolynomial, translate, variable_matrix
from .spectra import (DEFAULT_BUDGET, Eigenfunction, SpinLabel, build_eigenfunction,
                      build_multiplet, check_budget, parse_half_integer)

SPHERE_TOL = 1e-12


@lru_cache(maxsize=None)
def gauge_invariant_coords() -> tuple[GroupPolynomial, GroupPolynomial, GroupPolynomial]:
    """``x_a = <g^-1 T_3 g T_a>`` as canonical degree-2 polynomials."""
    u11, u12, u21, u22 = variable_matrix()
    g = Matrix2(u11, u12, u21, u22)
    g_inv = Matrix2(u22, -u12, -u21, u11)  # adjugate; det g = 1

    def const(m):
        return Matrix2(*(GroupPolynomial.constant(x) for x in m.entries()))

    x = g_inv @ const(basis_element(3)) @ g
    out = []
    for a in (1, 2, 3):
        prod = x @ const(basis_element(a))
        out.append(prod.trace().scale(ComplexRational(-1, 0) / 2))
    return tuple(out)


def sphere_relation() -> GroupPolynomial:
    """``x1^2 + x2^2 + x3^2`` reduced in the coordinate ring (equals 1)."""
    xs = gauge_invariant_coords()
    return xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2]


def gauge_field(traj: Trajectory) -> np.ndarray:
    """``b(t) = -<g R g^-1 T_3> = -L_3(t)``."""
    if len(traj) == 0:
        raise ValueError("empty trajectory")
    return -_charges(traj).L[:, 2]


@dataclass
class ReducedTrajectory:
    times: np.ndarray
    x: np.ndarray  # (n, 3)
    kinetic_times: np.ndarray
    kinetic: np.ndarray  # 0.5 |dx/dt|^2 on interior samples

    @property
    def sphere_residual(self) -> float:
        return float(np.max(np.abs(np.linalg.norm(self.x, axis=1) - 1.0)))

    @property
    def kinetic_variation(self) -> float:
        """(max - min) / mean of the kinetic energy; 0 for a resting particle."""
        lo, hi = float(self.kinetic.min()), float(self.kinetic.max())
        mean = float(self.kinetic.mean())
        if mean == 0.0:
            return 0.0
        return (hi - lo) / mean

    def to_json(self) -> dict:
        return {"sphere_residual": self.sphere_residual,
                "kinetic_variation": self.kinetic_variation,
                "columns": ["t", "x1", "x2", "x3", "kinetic"],
                "rows": [[float(t), *map(float, xi), (float(self.kinetic[i - 1])
                                                     if 0 < i < len(self.times) - 1 else None)]
                         for i, (t, xi) in enumerate(zip(self.times, self.x))]}


def reduced_trajectory(traj: Trajectory) -> ReducedTrajectory:
    """Sphere coordinates along a trajectory and the kinetic energy by central differences."""
    if len(traj) < 3:
        raise ValueError("need at least 3 samples for the kinetic-energy series")
    x = np.stack([_kernels.evaluate_many(p, traj.gs).real for p in gauge_invariant_coords()], axis=1)
    t = traj.times
    v = (x[2:] - x[:-2]) / (t[2:] - t[:-2])[:, None]
    return ReducedTrajectory(t, x, t[1:-1], 0.5 * np.sum(v * v, axis=1))


# -- quantum constraint -----------------------------------------------------


@dataclass
class ConstraintReport:
    survivors: list
    rejected: int
    energies: list
    status: str

    def to_json(self) -> dict:
        return {"survivors": [lab.to_json() for lab in self.survivors],
                "rejected": self.rejected,
                "energies": [format_fraction(e) for e in self.energies],
                "status": self.status}


def constraint_filter(j_max="3", budget: Fraction = DEFAULT_BUDGET) -> ConstraintReport:
    """Keep the labels whose eigenfunction satisfies ``L3 psi = 0`` exactly."""
    two_jmax = parse_half_integer(j_max)
    check_budget(two_jmax, budget)
    l3 = quantum_L(3)
    survivors, rejected, ok = [], 0, True
    for two_j in range(two_jmax + 1):
        for ef in build_multiplet(two_j, budget=budget):
            annihilated = not l3.apply(ef.poly)
            expected = ef.label.two_l == 0
            ok &= annihilated == expected
            if annihilated:
                survivors.append(ef.label)
            else:
                rejected += 1
    energies = sorted({lab.energy for lab in survivors})
    return ConstraintReport(survivors, rejected, energies, "pass" if ok else "fail")


@lru_cache(maxsize=None)
def _x_monomial(e: tuple) -> GroupPolynomial:
    if e == (0, 0, 0):
        return GroupPolynomial.constant(1)
    xs = gauge_invariant_coords()
    k = next(i for i in range(3) if e[i])
    rest = list(e)
    rest[k] -= 1
    return _x_monomial(tuple(rest)) * xs[k]


def rewrite_in_sphere_coords(psi: Eigenfunction, max_degree: int | None = None) -> SpherePolynomial:
    """Express an L3-invariant eigenfunction as a polynomial in x1, x2, x3.

    The unknowns are the reduced sphere monomials of degree <= ``max_degree``
    (default j, enough because each x_a has degree 2 in the entries).
    """
    if psi.l != 0 or quantum_L(3).apply(psi.poly):
        raise ValueError(f"{psi.label} is not annihilated by L3")
    degree = int(psi.label.j) if max_degree is None else max_degree
    exps = canonical_exponents(degree)
    columns = [dict(_x_monomial(e).terms) for e in exps]
    try:
        coeffs = solve(columns, dict(psi.poly.terms))
    except InconsistentSystem as exc:
        raise ValueError(f"{psi.label} is not a polynomial in the sphere coordinates") from exc
    return SpherePolynomial({e: c for e, c in zip(exps, coeffs) if c})


@dataclass
class HarmonicMatch:
    j: int
    r: int
    m: int | None
    constant: ComplexRational | None
    rewrite: SpherePolynomial = field(repr=False)

    @property
    def status(self) -> str:
        return "proportional" if self.constant is not None else "fail"

    def to_json(self) -> dict:
        return {"j": self.j, "r": self.r, "m": self.m,
                "constant": None if self.constant is None else self.constant.to_json(),
                "status": self.status}


def spherical_harmonic_match(j: int, r: int, budget: Fraction = DEFAULT_BUDGET) -> HarmonicMatch:
    """Compare the rewritten l = 0 eigenfunction with the harmonic of order m = r or -r.

    The pairing between r and the azimuthal order is measured: ``m`` in the
    report is whichever of (r, -r) gives an exact scalar multiple.
    """
    if int(j) != j or j < 0:
        raise ValueError("constrained states have integer j >= 0")
    if abs(r) > j:
        raise ValueError(f"|r| must be <= j, got r={r}, j={j}")
    psi = build_eigenfunction(SpinLabel(2 * j, 0, 2 * r), budget=budget)
    rewrite = rewrite_in_sphere_coords(psi)
    for m in dict.fromkeys((r, -r)):
        c = proportionality_constant(rewrite, solid_harmonic(j, m))
        if c is not None:
            return HarmonicMatch(j, r, m, c, rewrite)
    return HarmonicMatch(j, r, None, None, rewrite)


def harmonic_matches(j_max: int = 3, budget: Fraction = DEFAULT_BUDGET) -> list[HarmonicMatch]:
    check_budget(2 * j_max, budget)
    return [spherical_harmonic_match(j, r, budget)
            for j in range(j_max + 1) for r in range(j, -j - 1, -1)]


def invariance_check(stabilizer: Matrix2 | None = None) -> bool:
    """Each x_a is unchanged by ``g -> h g`` for the exact stabilizer element h (default T_3)."""
    h = basis_element(3) if stabilizer is None else stabilizer
    return all(translate(x, h, "left") == x for x in gauge_invariant_coords())
