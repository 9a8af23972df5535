"""2x2 matrix algebra for SU(2) and su(2).

Matrices hold either exact :class:`ComplexRational` entries or Python/numpy
complex floats; every operation except :func:`exp_su2` works for both.
"""
from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .rational import ComplexRational, I, ONE, ZERO

DEFAULT_TOL = 1e-12
# below this norm exp_su2 switches to the Taylor form of sin(x)/x
EXP_SERIES_THRESHOLD = 1e-4


@dataclass(frozen=True)
class Matrix2:
    """Immutable 2x2 matrix ``[[a, b], [c, d]]``."""

    a: object
    b: object
    c: object
    d: object

    @classmethod
    def from_rows(cls, rows) -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def from_array(cls, arr) -> "Matrix2":
        arr = np.asarray(arr)
        if arr.shape != (2, 2):
            raise ValueError(f"expected a 2x2 array, got shape {arr.shape}")
        return cls(*(complex(x) for x in arr.ravel()))

    @classmethod
    def identity(cls, exact: bool = True) -> "Matrix2":
        one, zero = (ONE, ZERO) if exact else (1.0 + 0j, 0j)
        return cls(one, zero, zero, one)

    @classmethod
    def zero(cls, exact: bool = True) -> "Matrix2":
        z = ZERO if exact else 0j
        return cls(z, z, z, z)

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, ComplexRational) for x in self.entries())

    def to_array(self) -> np.ndarray:
        return np.array([[complex(self.a), complex(self.b)],
                         [complex(self.c), complex(self.d)]], dtype=complex)

    def __matmul__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                       self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __add__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Matrix2":
        return Matrix2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, s) -> "Matrix2":
        return Matrix2(s * self.a, s * self.b, s * self.c, s * self.d)

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def dagger(self) -> "Matrix2":
        return Matrix2(self.a.conjugate(), self.c.conjugate(),
                       self.b.conjugate(), self.d.conjugate())

    def max_abs(self) -> float:
        return max(abs(complex(x)) for x in self.entries())


def commutator(x: Matrix2, y: Matrix2) -> Matrix2:
    return x @ y - y @ x


def basis_element(n: int) -> Matrix2:
    """Exact su(2) generator ``T_n`` for n in 1..3."""
    if n == 1:
        return Matrix2(I, ZERO, ZERO, -I)
    if n == 2:
        return Matrix2(ZERO, ONE, -ONE, ZERO)
    if n == 3:
        return Matrix2(ZERO, I, I, ZERO)
    raise ValueError(f"basis index must be 1, 2 or 3, got {n}")


def levi_civita(i: int, j: int, k: int) -> int:
    """Totally antisymmetric symbol on 1..3 with eps(1,2,3) = +1."""
    return (i - j) * (j - k) * (k - i) // 2


def normalized_trace(m: Matrix2):
    """``<M> = -Tr(M)/2``."""
    t = m.trace()
    if isinstance(t, ComplexRational):
        return -t / 2
    return -0.5 * t


@dataclass(frozen=True)
class AlgebraElement:
    """Real su(2) element given by its components on T_1, T_2, T_3."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != 3:
            raise ValueError("an su(2) element has exactly 3 components")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *xs) -> "AlgebraElement":
        if len(xs) == 1 and isinstance(xs[0], (Sequence, np.ndarray)):
            xs = tuple(xs[0])
        return cls(tuple(xs))

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, k):
        return self.components[k]

    def as_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.components])

    def norm(self) -> float:
        return math.sqrt(sum(float(x) ** 2 for x in self.components))

    def scaled(self, s) -> "AlgebraElement":
        return AlgebraElement(tuple(s * x for x in self.components))

    def matrix(self) -> Matrix2:
        """``A^n T_n`` (exact when the components are exact)."""
        if all(isinstance(x, (int, Fraction)) for x in self.components):
            out = Matrix2.zero(exact=True)
            for n, x in enumerate(self.components, start=1):
                out = out + basis_element(n).scale(x)
            return out
        return Matrix2.from_array(algebra_matrix(self.as_array()))


class GroupPoint:
    """A floating SU(2) element; construction validates unitarity and det = 1."""

    __slots__ = ("_m",)

    def __init__(self, matrix, tol: float = DEFAULT_TOL):
        m = matrix.to_array() if isinstance(matrix, Matrix2) else np.array(matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("group point has non-finite entries")
        unit, det = _group_residuals(m)
        if unit > tol or det > tol:
            raise ValueError(
                f"not in SU(2): unitarity residual {unit:.3e}, determinant residual {det:.3e}")
        m.setflags(write=False)
        self._m = m

    @classmethod
    def identity(cls) -> "GroupPoint":
        return cls(np.eye(2, dtype=complex))

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def inverse(self) -> "GroupPoint":
        return GroupPoint(self._m.conj().T)

    def __matmul__(self, other: "GroupPoint") -> "GroupPoint":
        return GroupPoint(self._m @ other.matrix, tol=1e-9)

    def __repr__(self):
        return f"GroupPoint({self._m.tolist()!r})"


def _group_residuals(m: np.ndarray) -> tuple[float, float]:
    unit = float(np.max(np.abs(m.conj().T @ m - np.eye(2))))
    det = float(abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] - 1.0))
    return unit, det


def project_components(a: Matrix2, tol: float = DEFAULT_TOL) -> AlgebraElement:
    """Components ``A^n = <A T_n>`` of an su(2) matrix."""
    cls = validate_group_point(a, tol=tol)
    if a.is_exact:
        if cls.antihermitian_residual != 0 or cls.trace_residual != 0:
            raise ValueError("matrix is not in su(2)")
    elif cls.antihermitian_residual > tol * max(1.0, a.max_abs()) or cls.trace_residual > tol * max(1.0, a.max_abs()):
        raise ValueError(
            f"matrix is not in su(2) within {tol}: anti-hermiticity residual "
            f"{cls.antihermitian_residual:.3e}, trace residual {cls.trace_residual:.3e}")
    comps = []
    for n in (1, 2, 3):
        t = basis_element(n)
        if a.is_exact:
            v = normalized_trace(a @ t)
            comps.append(v.re)
        else:
            v = normalized_trace(a @ Matrix2(*(complex(x) for x in t.entries())))
            comps.append(float(v.real))
    return AlgebraElement(tuple(comps))


def exp_su2(x: AlgebraElement) -> GroupPoint:
    """Closed-form exponential ``cos|a| I + sin|a|/|a| a^n T_n``."""
    a = x.as_array()
    if not np.all(np.isfinite(a)):
        raise ValueError("exp_su2 requires finite components")
    theta = float(np.sqrt(a @ a))
    if theta < EXP_SERIES_THRESHOLD:
        t2 = theta * theta
        c = 1.0 - t2 / 2.0 + t2 * t2 / 24.0
        s = 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    else:
        c = math.cos(theta)
        s = math.sin(theta) / theta
    return GroupPoint(_exp_matrix(c, s, a))


def algebra_matrix(a) -> np.ndarray:
    """Floating ``a^n T_n`` for a real 3-vector."""
    a1, a2, a3 = (float(x) for x in a)
    return np.array([[1j * a1, a2 + 1j * a3], [-a2 + 1j * a3, -1j * a1]], dtype=complex)


def _exp_matrix(c: float, s: float, a: np.ndarray) -> np.ndarray:
    a1, a2, a3 = a
    return np.array([[c + 1j * s * a1, s * a2 + 1j * s * a3],
                     [-s * a2 + 1j * s * a3, c - 1j * s * a1]], dtype=complex)


class Membership(Enum):
    SU2 = "SU2"
    SU2_ALGEBRA = "su2_algebra"
    NEITHER = "neither"


@dataclass(frozen=True)
class Classification:
    kind: Membership
    unitarity_residual: float
    determinant_residual: float
    antihermitian_residual: float
    trace_residual: float


def validate_group_point(m: Matrix2, tol: float = DEFAULT_TOL) -> Classification:
    """Classify a matrix as an su(2) element, an SU(2) element, or neither.

    Unit vectors of su(2) such as T_1 lie in both sets; they are reported as
    ``SU2_ALGEBRA`` and the group residuals still show that they are unitary.
    """
    if m.is_exact:
        unit = float((m.dagger() @ m - Matrix2.identity()).max_abs())
        det = abs(complex(m.det() - ONE))
        ah = float((m + m.dagger()).max_abs())
        tr = abs(complex(m.trace()))
        if ah == 0 and tr == 0:
            kind = Membership.SU2_ALGEBRA
        elif unit == 0 and det == 0:
            kind = Membership.SU2
        else:
            kind = Membership.NEITHER
        return Classification(kind, unit, det, ah, tr)
    arr = m.to_array() if isinstance(m, Matrix2) else np.asarray(m, dtype=complex)
    unit, det = _group_residuals(arr)
    ah = float(np.max(np.abs(arr + arr.conj().T)))
    tr = float(abs(arr[0, 0] + arr[1, 1]))
    if ah <= tol and tr <= tol:
        kind = Membership.SU2_ALGEBRA
    elif unit <= tol and det <= tol:
        kind = Membership.SU2
    else:
        kind = Membership.NEITHER
    return Classification(kind, unit, det, ah, tr)
