"""Numeric hot loops with a compiled backend and a pure-Python fallback.

The compiled extension is used when it imports; set ``SU2PARTICLE_BACKEND`` to
``python`` (or call :func:`use_backend`) to force the fallback.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_active = None
BACKEND = ""


def use_backend(name: str = "auto") -> str:
    """Select the kernel backend; returns the name actually in use."""
    global _active, BACKEND
    if name == "auto":
        name = "cython" if "cython" in BACKENDS else "python"
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    _active = BACKENDS[name]
    BACKEND = name
    return name


use_backend(os.environ.get("SU2PARTICLE_BACKEND", "auto"))


def active():
    return _active


def polynomial_arrays(poly) -> tuple[np.ndarray, np.ndarray]:
    items = list(poly.items())
    exps = np.array([m for m, _ in items], dtype=np.int_).reshape(len(items), 4)
    coeffs = np.array([complex(c) for _, c in items], dtype=complex)
    return np.ascontiguousarray(exps), coeffs


def evaluate_many(poly, gs: np.ndarray) -> np.ndarray:
    """Values of an exact polynomial at many group points (shape (n, 2, 2))."""
    exps, coeffs = polynomial_arrays(poly)
    return _active.eval_monomials(exps, coeffs, np.ascontiguousarray(gs, dtype=complex))


def exact_flow(g0, step, steps: int) -> np.ndarray:
    return _active.exact_flow(np.asarray(g0, dtype=complex), np.asarray(step, dtype=complex), int(steps))


def rk4_projected_flow(g0, rmat, dt: float, steps: int) -> np.ndarray:
    return _active.rk4_projected_flow(np.asarray(g0, dtype=complex), np.asarray(rmat, dtype=complex),
                                      float(dt), int(steps))


def space_charges(gs: np.ndarray, rvec) -> np.ndarray:
    return _active.space_charges(np.ascontiguousarray(gs, dtype=complex),
                                 np.asarray(rvec, dtype=float))
