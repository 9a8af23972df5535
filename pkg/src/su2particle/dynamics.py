"""Geodesic flow on SU(2), Noether charges and the Poisson structure.

The flow is ``g(t) = g0 exp(t R)`` with constant body velocity ``R = g^-1 dg/dt``;
the space velocity ``L = g R g^-1`` is conserved as well.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import _kernels
from .core import (DEFAULT_TOL, AlgebraElement, GroupPoint, algebra_matrix, exp_su2,
                   levi_civita, _group_residuals)

_T = tuple(algebra_matrix(e) for e in np.eye(3))


class Method(str, Enum):
    EXACT = "exact"
    RK4_PROJECTED = "rk4_projected"


PROJECTION = {Method.EXACT: "none", Method.RK4_PROJECTED: "row-normalize+gram-schmidt"}


def _ntrace(m: np.ndarray) -> complex:
    return -0.5 * (m[0, 0] + m[1, 1])


def components(m: np.ndarray) -> np.ndarray:
    """Real components ``<m T_n>`` of a (floating) su(2) matrix."""
    return np.array([_ntrace(m @ t).real for t in _T])


@dataclass(frozen=True)
class ClassicalState:
    g: GroupPoint
    R: AlgebraElement


@dataclass
class Trajectory:
    """Samples of the flow.  ``gs`` has shape (n, 2, 2); ``R`` is the body velocity."""

    times: np.ndarray
    gs: np.ndarray
    R: np.ndarray
    integrator: Method
    step: float
    projection: str = field(default="none")

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.gs = np.asarray(self.gs, dtype=complex)
        self.R = np.asarray(self.R, dtype=float)
        if self.gs.shape != (len(self.times), 2, 2):
            raise ValueError("times and states must have equal lengths")
        if len(self.times) > 1 and not np.all(np.diff(self.times) > 0):
            raise ValueError("trajectory times must be strictly increasing")
        self.integrator = Method(self.integrator)

    def __len__(self):
        return len(self.times)

    @property
    def states(self) -> list[ClassicalState]:
        r = AlgebraElement(tuple(self.R))
        return [ClassicalState(GroupPoint(g, tol=1e-9), r) for g in self.gs]

    def max_group_residual(self) -> float:
        return max(max(_group_residuals(g)) for g in self.gs)


def _as_matrix(g) -> np.ndarray:
    if isinstance(g, GroupPoint):
        return g.matrix
    return GroupPoint(g).matrix


def geodesic_exact(g0, R: AlgebraElement, t: float) -> GroupPoint:
    """``g0 exp(t R)``."""
    return GroupPoint(_as_matrix(g0) @ exp_su2(R.scaled(float(t))).matrix)


def integrate(g0, R0: AlgebraElement, dt: float, steps: int,
              method: Method | str = Method.EXACT) -> Trajectory:
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if int(steps) != steps or steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps}")
    method = Method(method)
    g = _as_matrix(g0)
    r = R0.as_array()
    if method is Method.EXACT:
        gs = _kernels.exact_flow(g, exp_su2(R0.scaled(dt)).matrix, steps)
    else:
        gs = _kernels.rk4_projected_flow(g, algebra_matrix(r), dt, steps)
    times = dt * np.arange(steps + 1)
    return Trajectory(times, gs, r, method, float(dt), PROJECTION[method])


@dataclass
class NoetherCharges:
    R: np.ndarray  # (n, 3)
    L: np.ndarray  # (n, 3)

    @property
    def energy(self) -> np.ndarray:
        return 0.5 * np.sum(self.R ** 2, axis=1)


def _charges(traj: Trajectory) -> NoetherCharges:
    n = len(traj)
    rs = np.tile(traj.R, (n, 1))
    return NoetherCharges(rs, _kernels.space_charges(traj.gs, traj.R))


def noether_charges(traj: Trajectory) -> NoetherCharges:
    """``R_n = <T_n R>`` and ``L_n = <T_n g R g^-1>`` at every sample."""
    if len(traj) < 2:
        raise ValueError("need a trajectory with at least 2 samples")
    return _charges(traj)


@dataclass(frozen=True)
class DriftStats:
    max_R: float
    mean_R: float
    max_L: float
    mean_L: float
    max_energy: float
    mean_energy: float
    max_group_residual: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


def conservation_report(traj: Trajectory) -> DriftStats:
    """Absolute drift of R, L and the energy ``<R^2>/2`` relative to the first sample."""
    if len(traj) == 0:
        raise ValueError("empty trajectory")
    ch = _charges(traj)
    dr = np.abs(ch.R - ch.R[0])
    dl = np.abs(ch.L - ch.L[0])
    de = np.abs(ch.energy - ch.energy[0])
    return DriftStats(float(dr.max()), float(dr.mean()), float(dl.max()), float(dl.mean()),
                      float(de.max()), float(de.mean()), float(traj.max_group_residual()))


# -- Poisson structure ------------------------------------------------------


def right_field(n: int, R: np.ndarray, g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Hamiltonian vector field of R_n: (dR, dg) = ([R, T_n], g T_n)."""
    t = _T[n - 1]
    return R @ t - t @ R, g @ t


def left_field(m: int, R: np.ndarray, g: np.ndarray, r_part: str = "zero") -> tuple[np.ndarray, np.ndarray]:
    """Hamiltonian vector field of L_m: dg = T_m g.

    ``r_part="zero"`` is the field generated by left translations (R is
    left-invariant); ``"commutator"`` uses dR = [R, g T_m g^-1] instead and is
    kept only as a diagnostic variant.
    """
    t = _T[m - 1]
    if r_part == "zero":
        dR = np.zeros((2, 2), dtype=complex)
    elif r_part == "commutator":
        a = g @ t @ g.conj().T
        dR = R @ a - a @ R
    else:
        raise ValueError(f"unknown r_part {r_part!r}")
    return dR, t @ g


def _d_R(n: int, dR: np.ndarray) -> float:
    return _ntrace(_T[n - 1] @ dR).real


def _d_L(m: int, R: np.ndarray, g: np.ndarray, dR: np.ndarray, dg: np.ndarray) -> float:
    gi = g.conj().T
    dL = dg @ R @ gi + g @ dR @ gi - g @ R @ gi @ dg @ gi
    return _ntrace(_T[m - 1] @ dL).real


@dataclass
class PoissonReport:
    max_residual: dict
    tolerance: float
    brackets: dict = field(repr=False)
    variants: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v <= self.tolerance for v in self.max_residual.values())

    def to_json(self) -> dict:
        return {"status": "pass" if self.passed else "fail", "tolerance": self.tolerance,
                "max_residual": self.max_residual, "variants": self.variants}


def poisson_structure_check(R: AlgebraElement, g, tol: float = DEFAULT_TOL) -> PoissonReport:
    """Evaluate the charge brackets at one phase-space point and compare with
    ``{R_n,R_m} = 2 eps R_k``, ``{L_n,L_m} = -2 eps L_k``, ``{R_n,L_m} = 0``,
    ``{R_n,g} = g T_n``, ``{L_m,g} = T_m g`` and Hamilton's equations."""
    gm = _as_matrix(g)
    r = R.as_array()
    rm = algebra_matrix(r)
    lvec = components(gm @ rm @ gm.conj().T)
    X = [right_field(n, rm, gm) for n in (1, 2, 3)]
    Y = [left_field(m, rm, gm) for m in (1, 2, 3)]
    res = {k: 0.0 for k in ("RR", "LL", "RL", "LR", "Rg", "Lg", "Hg", "HR")}
    brackets = {}
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            k = 6 - n - m if n != m else 0
            eps = levi_civita(n, m, k) if k else 0
            rr = _d_R(m, X[n - 1][0])
            ll = _d_L(m, rm, gm, *Y[n - 1])
            rl = _d_L(m, rm, gm, *X[n - 1])
            lr = _d_R(n, Y[m - 1][0])
            brackets[f"R{n},R{m}"], brackets[f"L{n},L{m}"] = rr, ll
            brackets[f"R{n},L{m}"] = rl
            res["RR"] = max(res["RR"], abs(rr - 2 * eps * (r[k - 1] if k else 0.0)))
            res["LL"] = max(res["LL"], abs(ll + 2 * eps * (lvec[k - 1] if k else 0.0)))
            res["RL"] = max(res["RL"], abs(rl))
            res["LR"] = max(res["LR"], abs(lr))
        res["Rg"] = max(res["Rg"], float(np.max(np.abs(X[n - 1][1] - gm @ _T[n - 1]))))
        res["Lg"] = max(res["Lg"], float(np.max(np.abs(Y[n - 1][1] - _T[n - 1] @ gm))))
    # X_H = sum_n R_n X_{R_n} for H = <R^2>/2
    hR = sum(r[n] * X[n][0] for n in range(3))
    hg = sum(r[n] * X[n][1] for n in range(3))
    res["Hg"] = float(np.max(np.abs(hg - gm @ rm)))
    res["HR"] = max(abs(_d_R(m, hR)) for m in (1, 2, 3))

    variants = {}
    for r_part in ("zero", "commutator"):
        Yv = [left_field(m, rm, gm, r_part) for m in (1, 2, 3)]
        ll = max(abs(_d_L(m, rm, gm, *Yv[n - 1])
                     + 2 * levi_civita(n, m, 6 - n - m) * (lvec[5 - n - m] if n != m else 0.0))
                 for n in (1, 2, 3) for m in (1, 2, 3))
        lr = max(abs(_d_R(n, Yv[m - 1][0])) for n in (1, 2, 3) for m in (1, 2, 3))
        variants[r_part] = {"LL_residual": ll, "LR_residual": lr,
                            "status": "pass" if max(ll, lr) <= tol else "fail"}
    return PoissonReport(res, tol, brackets, variants)


def finite_difference_velocity(g0, R: AlgebraElement, t: float, h: float = 1e-6,
                               scheme: str = "central") -> float:
    """Max-entry gap between a difference quotient of g and g(t) R.

    The forward quotient carries a truncation error of about h |R|^2 / 2,
    which already exceeds 1e-7 for |R| near 1; the central one is O(h^2).
    """
    gt = geodesic_exact(g0, R, t).matrix
    gp = geodesic_exact(g0, R, t + h).matrix
    if scheme == "forward":
        dg = (gp - gt) / h
    elif scheme == "central":
        dg = (gp - geodesic_exact(g0, R, t - h).matrix) / (2 * h)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    return float(np.max(np.abs(dg - gt @ algebra_matrix(R.as_array()))))


# -- export -----------------------------------------------------------------

COLUMNS = ["t", "g11_re", "g11_im", "g12_re", "g12_im", "g21_re", "g21_im", "g22_re", "g22_im",
           "R1", "R2", "R3", "L1", "L2", "L3", "energy"]


def trajectory_rows(traj: Trajectory) -> list[list[float]]:
    ch = _charges(traj)
    rows = []
    for i, t in enumerate(traj.times):
        g = traj.gs[i].ravel()
        row = [float(t)]
        for z in g:
            row += [float(z.real), float(z.imag)]
        row += [float(x) for x in ch.R[i]] + [float(x) for x in ch.L[i]] + [float(ch.energy[i])]
        rows.append(row)
    return rows


def trajectory_to_json(traj: Trajectory) -> dict:
    return {"integrator": traj.integrator.value, "step": traj.step, "projection": traj.projection,
            "columns": COLUMNS, "rows": trajectory_rows(traj)}


def trajectory_to_csv(traj: Trajectory) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in trajectory_rows(traj):
        w.writerow([repr(x) for x in row])
    return buf.getvalue()
