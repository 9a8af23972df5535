"""Reference implementations of the numeric kernels (no compiled code)."""
from __future__ import annotations

import math

import numpy as np


def eval_monomials(exps: np.ndarray, coeffs: np.ndarray, gs: np.ndarray) -> np.ndarray:
    u = (gs[:, 0, 0], gs[:, 0, 1], gs[:, 1, 0], gs[:, 1, 1])
    out = np.zeros(gs.shape[0], dtype=complex)
    for (a, b, c, d), coeff in zip(exps.tolist(), coeffs.tolist()):
        out += coeff * (u[0] ** a * u[1] ** b * u[2] ** c * u[3] ** d)
    return out


def _mul(x, y):
    return (x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3])


def _flat(m) -> tuple:
    return tuple(complex(v) for v in np.asarray(m, dtype=complex).ravel())


def exact_flow(g0: np.ndarray, step: np.ndarray, steps: int) -> np.ndarray:
    g = _flat(g0)
    e = _flat(step)
    out = np.empty((steps + 1, 2, 2), dtype=complex)
    out[0] = np.reshape(g, (2, 2))
    for k in range(1, steps + 1):
        g = _mul(g, e)
        out[k] = np.reshape(g, (2, 2))
    return out


def _project(g):
    a, b = g[0], g[1]
    n = math.sqrt(a.real * a.real + a.imag * a.imag + b.real * b.real + b.imag * b.imag)
    a, b = a / n, b / n
    # Gram-Schmidt on the second row plus the det = 1 phase fix reduces to this
    return (a, b, -b.conjugate(), a.conjugate())


def rk4_projected_flow(g0: np.ndarray, rmat: np.ndarray, dt: float, steps: int) -> np.ndarray:
    g = _flat(g0)
    r = _flat(rmat)
    h2, h6 = dt / 2.0, dt / 6.0
    out = np.empty((steps + 1, 2, 2), dtype=complex)
    out[0] = np.reshape(g, (2, 2))
    for k in range(1, steps + 1):
        k1 = _mul(g, r)
        k2 = _mul(tuple(g[i] + h2 * k1[i] for i in range(4)), r)
        k3 = _mul(tuple(g[i] + h2 * k2[i] for i in range(4)), r)
        k4 = _mul(tuple(g[i] + dt * k3[i] for i in range(4)), r)
        g = _project(tuple(g[i] + h6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
                           for i in range(4)))
        out[k] = np.reshape(g, (2, 2))
    return out


def space_charges(gs: np.ndarray, rvec: np.ndarray) -> np.ndarray:
    """Components of ``g R g^-1`` on T_1..T_3 for each sample."""
    r1, r2, r3 = (float(x) for x in rvec)
    rm = np.array([[1j * r1, r2 + 1j * r3], [-r2 + 1j * r3, -1j * r1]])
    lm = gs @ rm @ np.conj(np.transpose(gs, (0, 2, 1)))
    # <T_n L>: T1 -> Im(L11), T2 -> Re(L12), T3 -> Im(L12)
    return np.stack([lm[:, 0, 0].imag, lm[:, 0, 1].real, lm[:, 0, 1].imag], axis=1)
