"""Invariant derivations on the coordinate ring and the operators built from them.

Operators are small expression trees (scalar multiples, sums, compositions) over
two kinds of leaves: right-invariant derivations ``f -> d/dt f(g e^{tT_n})`` and
left-invariant ones ``f -> d/dt f(e^{tT_m} g)``.  Composition ``A * B`` applies
``B`` first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import Matrix2, basis_element, levi_civita
from .ring import (GroupPolynomial, Monomial, VARIABLES, _accumulate, _mono_mul,
                   monomial_basis, normal_form_terms, variable_matrix)
from .rational import ComplexRational, I, ONE, format_fraction

HALF_I = ComplexRational(0, 1) / 2
DEFAULT_VERIFY_DEGREE = 6


class Operator:
    """Linear operator on :class:`GroupPolynomial`."""

    label = "?"

    def apply(self, p: GroupPolynomial) -> GroupPolynomial:  # pragma: no cover
        raise NotImplementedError

    def __call__(self, p: GroupPolynomial) -> GroupPolynomial:
        return self.apply(p)

    def __add__(self, other: "Operator") -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return Sum((self, other))

    def __sub__(self, other: "Operator") -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return Sum((self, Scaled(other, ComplexRational(-1))))

    def __neg__(self) -> "Operator":
        return Scaled(self, ComplexRational(-1))

    def __mul__(self, other):
        if isinstance(other, Operator):
            return Compose(self, other)
        try:
            return Scaled(self, ComplexRational.coerce(other))
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return Scaled(self, ComplexRational.coerce(other))
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int) -> "Operator":
        if n < 0:
            raise ValueError("operator powers must be non-negative")
        out: Operator = Identity()
        for _ in range(n):
            out = Compose(self, out) if not isinstance(out, Identity) else self
        return out

    def with_label(self, label: str) -> "Operator":
        self.label = label
        return self

    def __repr__(self):
        return f"<{type(self).__name__} {self.label}>"


class Derivation(Operator):
    """Derivation of the ring fixed by its values on the four entry variables.

    The image of every monomial is memoized, which makes repeated application
    on the low-degree bases used for verification cheap.
    """

    def __init__(self, images: tuple, label: str = "D"):
        if len(images) != 4:
            raise ValueError("a derivation needs exactly four generator images")
        self.images = tuple(images)
        self.label = label
        self._cache: dict = {}

    def image_of_monomial(self, m: Monomial) -> dict:
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        out: dict = {}
        for k, e in enumerate(m):
            if not e:
                continue
            rest = list(m)
            rest[k] -= 1
            rest = tuple(rest)
            for vm, vc in self.images[k]._terms.items():
                coeff = vc * e if e != 1 else vc
                for nm, w in normal_form_terms(_mono_mul(rest, vm)):
                    _accumulate(out, nm, coeff * w if w != 1 else coeff)
        self._cache[m] = out
        return out

    def apply(self, p: GroupPolynomial) -> GroupPolynomial:
        out: dict = {}
        for m, c in p._terms.items():
            for nm, w in self.image_of_monomial(m).items():
                _accumulate(out, nm, c * w)
        return GroupPolynomial(out, _canonical=True)


class Identity(Operator):
    label = "1"

    def apply(self, p):
        return p


@dataclass(eq=False, repr=False)
class Scaled(Operator):
    op: Operator
    scalar: ComplexRational

    def __post_init__(self):
        self.label = f"({self.scalar})*{self.op.label}"

    def apply(self, p):
        return self.op.apply(p).scale(self.scalar)


@dataclass(eq=False, repr=False)
class Sum(Operator):
    ops: tuple

    def __post_init__(self):
        flat = []
        for op in self.ops:
            flat.extend(op.ops if isinstance(op, Sum) else (op,))
        self.ops = tuple(flat)
        self.label = " + ".join(op.label for op in self.ops)

    def apply(self, p):
        out: dict = {}
        for op in self.ops:
            for m, c in op.apply(p)._terms.items():
                _accumulate(out, m, c)
        return GroupPolynomial(out, _canonical=True)


@dataclass(eq=False, repr=False)
class Compose(Operator):
    outer: Operator
    inner: Operator

    def __post_init__(self):
        self.label = f"{self.outer.label}.{self.inner.label}"

    def apply(self, p):
        return self.outer.apply(self.inner.apply(p))


class ZeroOperator(Operator):
    label = "0"

    def apply(self, p):
        return GroupPolynomial.zero()


def commutator(a: Operator, b: Operator) -> Operator:
    return (a * b - b * a).with_label(f"[{a.label},{b.label}]")


def _check_index(n: int) -> None:
    if n not in (1, 2, 3):
        raise ValueError(f"generator index must be 1, 2 or 3, got {n}")


_RIGHT: dict = {}
_LEFT: dict = {}


def right_derivation(n: int) -> Derivation:
    """``u_ij -> (U T_n)_ij``: the generator of ``g -> g e^{t T_n}``."""
    _check_index(n)
    if n not in _RIGHT:
        U = Matrix2(*variable_matrix())
        t = basis_element(n)
        tp = Matrix2(*(GroupPolynomial.constant(x) for x in t.entries()))
        _RIGHT[n] = Derivation((U @ tp).entries(), label=f"X{n}")
    return _RIGHT[n]


def left_derivation(m: int) -> Derivation:
    """``u_ij -> (T_m U)_ij``: the generator of ``g -> e^{t T_m} g``."""
    _check_index(m)
    if m not in _LEFT:
        U = Matrix2(*variable_matrix())
        t = basis_element(m)
        tp = Matrix2(*(GroupPolynomial.constant(x) for x in t.entries()))
        _LEFT[m] = Derivation((tp @ U).entries(), label=f"Y{m}")
    return _LEFT[m]


def quantum_R(n: int) -> Operator:
    """``(i/2) X_n``."""
    return Scaled(right_derivation(n), HALF_I).with_label(f"R{n}")


def quantum_L(m: int) -> Operator:
    """``-(i/2) Y_m``."""
    return Scaled(left_derivation(m), -HALF_I).with_label(f"L{m}")


def family(kind: str) -> Callable[[int], Operator]:
    if kind == "R":
        return quantum_R
    if kind == "L":
        return quantum_L
    raise ValueError(f"operator family must be 'R' or 'L', got {kind!r}")


def ladder_axes(axis: int) -> tuple[int, int]:
    """The two generator indices completing ``axis`` to a cyclic triple."""
    _check_index(axis)
    return (axis % 3 + 1, (axis + 1) % 3 + 1)


def ladder(kind: str, direction: str, axis: int = 3) -> Operator:
    """``i O_p + O_q`` for '+' and ``i O_p - O_q`` for '-', with (p, q, axis) cyclic.

    For the default axis 3 these are ``i O_1 +- O_2``.  Which of the two
    raises the ``O_axis`` eigenvalue is a property of the sign conventions and
    is measured by :func:`ladder_shift`, not assumed.
    """
    op = family(kind)
    p, q = ladder_axes(axis)
    if direction == "+":
        out = I * op(p) + op(q)
    elif direction == "-":
        out = I * op(p) - op(q)
    else:
        raise ValueError(f"ladder direction must be '+' or '-', got {direction!r}")
    return out.with_label(f"{kind}{direction}")


def casimir(kind: str = "R") -> Operator:
    op = family(kind)
    return Sum(tuple(op(n) * op(n) for n in (1, 2, 3))).with_label(f"{kind}^2")


def hamiltonian() -> Operator:
    """``H = R1^2 + R2^2 + R3^2``."""
    return casimir("R").with_label("H")


@dataclass
class IdentityReport:
    identity: str
    max_degree: int
    status: str
    counterexample: Monomial | None = None
    image: GroupPolynomial | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "max_degree": self.max_degree,
            "status": self.status,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def verify_identity(lhs: Operator, rhs: Operator, max_degree: int = DEFAULT_VERIFY_DEGREE,
                    name: str | None = None) -> IdentityReport:
    """Check ``lhs == rhs`` on every canonical monomial of degree <= max_degree.

    Both sides preserve the degree filtration, so this decides the identity on
    that whole subspace.  The first failing monomial (lexicographic within
    increasing degree) is reported.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    name = name or f"{lhs.label} == {rhs.label}"
    diff = lhs - rhs
    for m in monomial_basis(max_degree):
        img = diff.apply(GroupPolynomial({m: ONE}, _canonical=True))
        if img:
            return IdentityReport(name, max_degree, "fail", m, img)
    return IdentityReport(name, max_degree, "pass")


def eigenvalue(op: Operator, p: GroupPolynomial) -> ComplexRational | None:
    """The exact scalar ``c`` with ``op(p) == c p``, or None if p is not an eigenvector."""
    if not p:
        raise ValueError("the zero polynomial has no eigenvalue")
    q = op.apply(p)
    m, c = next(iter(p.items()))
    ratio = q[m] / c
    return ratio if q == p.scale(ratio) else None


def su2_commutator_identities(kind: str, max_degree: int) -> list[IdentityReport]:
    """``[O_n, O_m] = i eps_nmk O_k`` for the R or L family, all ordered pairs n < m."""
    op = family(kind)
    out = []
    for n, m in ((1, 2), (2, 3), (3, 1)):
        k = 6 - n - m
        rhs = (I * levi_civita(n, m, k)) * op(k)
        out.append(verify_identity(commutator(op(n), op(m)), rhs, max_degree,
                                   name=f"[{kind}{n},{kind}{m}] = i*eps*{kind}{k}"))
    return out


def mixed_commutator_identities(max_degree: int) -> list[IdentityReport]:
    return [verify_identity(commutator(quantum_R(n), quantum_L(m)), ZeroOperator(), max_degree,
                            name=f"[R{n},L{m}] = 0")
            for n in (1, 2, 3) for m in (1, 2, 3)]


def ladder_shift(kind: str, direction: str, axis: int = 3, max_degree: int = 2) -> int | None:
    """Measured shift ``s`` with ``[O_axis, O_dir] = s O_dir`` (so O_dir moves eigenvalues by s)."""
    lad = ladder(kind, direction, axis)
    o3 = family(kind)(axis)
    for s in (1, -1):
        if verify_identity(commutator(o3, lad), ComplexRational(s) * lad, max_degree).passed:
            return s
    return None


def format_scalar(c: ComplexRational) -> str:
    if c.im:
        return f"{format_fraction(c.re)}+{format_fraction(c.im)}i"
    return format_fraction(c.re)


def apply_power(op: Operator, p: GroupPolynomial, times: int) -> GroupPolynomial:
    for _ in range(times):
        if not p:
            break
        p = op.apply(p)
    return p


def combination(terms: Iterable[tuple[object, Operator]], label: str) -> Operator:
    ops = tuple(ComplexRational.coerce(c) * op for c, op in terms)
    return Sum(ops).with_label(label)
