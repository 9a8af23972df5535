"""Polynomial functions on SU(2) modulo ``u11*u22 - u12*u21 = 1``.

A monomial ``u11^a u12^b u21^c u22^d`` is stored as the exponent tuple
``(a, b, c, d)``.  Canonical form has ``a*d == 0``; the rewrite
``u11*u22 -> 1 + u12*u21`` is applied in closed form (binomial expansion) so
normalization is a single pass.
"""
from __future__ import annotations

import json
from math import comb
from typing import Iterable, Iterator, Mapping

import numpy as np

from .core import DEFAULT_TOL, GroupPoint, Matrix2, validate_group_point
from .rational import ComplexRational, ONE, ZERO

Monomial = tuple  # (a, b, c, d)

# variable index -> unit exponent vector
VARIABLES = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
VARIABLE_NAMES = ("u11", "u12", "u21", "u22")


def _mono_mul(m: Monomial, n: Monomial) -> Monomial:
    return (m[0] + n[0], m[1] + n[1], m[2] + n[2], m[3] + n[3])


def normal_form_terms(m: Monomial) -> list[tuple[Monomial, int]]:
    """Expand one raw monomial into canonical monomials with integer weights."""
    a, b, c, d = m
    k = min(a, d)
    if k == 0:
        return [(m, 1)]
    a, d = a - k, d - k
    return [((a, b + i, c + i, d), comb(k, i)) for i in range(k + 1)]


def _accumulate(terms: dict, mono: Monomial, coeff) -> None:
    prev = terms.get(mono)
    if prev is None:
        terms[mono] = coeff
    else:
        s = prev + coeff
        if s:
            terms[mono] = s
        else:
            del terms[mono]


class GroupPolynomial:
    """Immutable canonical polynomial with :class:`ComplexRational` coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None, *, _canonical: bool = False):
        if _canonical:
            self._terms = terms
        else:
            self._terms = normalize_terms(terms or {})
        self._hash = None

    # -- construction ------------------------------------------------------
    @classmethod
    def constant(cls, c) -> "GroupPolynomial":
        c = ComplexRational.coerce(c)
        return cls({(0, 0, 0, 0): c} if c else {}, _canonical=True)

    @classmethod
    def variable(cls, name: str) -> "GroupPolynomial":
        return cls({VARIABLES[VARIABLE_NAMES.index(name)]: ONE}, _canonical=True)

    @classmethod
    def monomial(cls, exps, coeff=ONE) -> "GroupPolynomial":
        return cls({tuple(exps): ComplexRational.coerce(coeff)})

    @classmethod
    def zero(cls) -> "GroupPolynomial":
        return cls({}, _canonical=True)

    # -- container protocol ---------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, ComplexRational]]:
        """Terms in lexicographic monomial order."""
        for m in sorted(self._terms):
            yield m, self._terms[m]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, m) -> ComplexRational:
        return self._terms.get(tuple(m), ZERO)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, GroupPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, ComplexRational)):
            return self == GroupPolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            _accumulate(terms, m, c)
        return GroupPolynomial(terms, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return GroupPolynomial({m: -c for m, c in self._terms.items()}, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, GroupPolynomial):
            return multiply(self, other)
        try:
            s = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = GroupPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s) -> "GroupPolynomial":
        s = ComplexRational.coerce(s)
        if not s:
            return GroupPolynomial.zero()
        return GroupPolynomial({m: c * s for m, c in self._terms.items()}, _canonical=True)

    def __repr__(self):
        return f"GroupPolynomial({to_string(self)})"

    def __str__(self):
        return to_string(self)

    def to_json(self) -> dict:
        return {"terms": [{"m": list(m), **c.to_json()} for m, c in self.items()]}

    @classmethod
    def from_json(cls, obj) -> "GroupPolynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        raw: dict = {}
        for t in obj["terms"]:
            _accumulate(raw, tuple(int(e) for e in t["m"]), ComplexRational.from_json(t))
        return cls(raw)


def _coerce(x) -> GroupPolynomial | None:
    if isinstance(x, GroupPolynomial):
        return x
    try:
        return GroupPolynomial.constant(ComplexRational.coerce(x))
    except TypeError:
        return None


def normalize_terms(raw: Mapping) -> dict:
    out: dict = {}
    for m, c in raw.items():
        c = ComplexRational.coerce(c)
        if not c:
            continue
        for nm, w in normal_form_terms(tuple(m)):
            _accumulate(out, nm, c * w if w != 1 else c)
    return out


def normalize(raw: Mapping | GroupPolynomial) -> GroupPolynomial:
    """Canonical form of a raw ``{monomial: coefficient}`` map."""
    if isinstance(raw, GroupPolynomial):
        return raw
    return GroupPolynomial(normalize_terms(raw), _canonical=True)


def is_normal(m: Monomial) -> bool:
    return m[0] == 0 or m[3] == 0


def multiply(p: GroupPolynomial, q: GroupPolynomial) -> GroupPolynomial:
    out: dict = {}
    qt = q._terms
    for m, c in p._terms.items():
        for n, e in qt.items():
            coeff = c * e
            for nm, w in normal_form_terms(_mono_mul(m, n)):
                _accumulate(out, nm, coeff * w if w != 1 else coeff)
    return GroupPolynomial(out, _canonical=True)


# conj(u11)=u22, conj(u12)=-u21, conj(u21)=-u12, conj(u22)=u11 on SU(2)
def star(p: GroupPolynomial) -> GroupPolynomial:
    """Complex conjugation of the function, expressed back in the ring."""
    out = {}
    for (a, b, c, d), coeff in p._terms.items():
        sign = -1 if (b + c) % 2 else 1
        cc = coeff.conjugate()
        out[(d, c, b, a)] = -cc if sign < 0 else cc
    return GroupPolynomial(out, _canonical=True)


def evaluate(p: GroupPolynomial, g, tol: float = DEFAULT_TOL) -> complex:
    """Numeric value of ``p`` at a group point."""
    if not isinstance(g, GroupPoint):
        m = np.asarray(g, dtype=complex)
        cls = validate_group_point(Matrix2.from_array(m), tol=tol)
        if cls.unitarity_residual > tol or cls.determinant_residual > tol:
            raise ValueError("evaluation point is not in SU(2)")
        arr = m
    else:
        arr = g.matrix
    u = (complex(arr[0, 0]), complex(arr[0, 1]), complex(arr[1, 0]), complex(arr[1, 1]))
    total = 0j
    for (a, b, c, d), coeff in p.items():
        total += complex(coeff) * (u[0] ** a * u[1] ** b * u[2] ** c * u[3] ** d)
    return total


def variable_matrix() -> tuple:
    """The symbolic matrix ``U = [[u11, u12], [u21, u22]]`` as 4 polynomials."""
    return tuple(GroupPolynomial({v: ONE}, _canonical=True) for v in VARIABLES)


def trace_polynomial(m: Matrix2) -> GroupPolynomial:
    """``<M g> = -1/2 sum_ij M_ji u_ij``."""
    entries = [ComplexRational.coerce(x) for x in m.entries()]
    mt = {(0, 0): entries[0], (0, 1): entries[1], (1, 0): entries[2], (1, 1): entries[3]}
    terms = {}
    for k, (i, j) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        c = mt[(j, i)] * ComplexRational(-1) / 2
        if c:
            terms[VARIABLES[k]] = c
    return GroupPolynomial(terms, _canonical=True)


def linear_substitution(p: GroupPolynomial, images: tuple) -> GroupPolynomial:
    """Substitute each variable ``u_ij`` by the polynomial ``images[k]``."""
    powers = [[GroupPolynomial.constant(1)] for _ in range(4)]

    def power(k, e):
        cache = powers[k]
        while len(cache) <= e:
            cache.append(cache[-1] * images[k])
        return cache[e]

    out = GroupPolynomial.zero()
    for m, c in p.items():
        term = GroupPolynomial.constant(c)
        for k, e in enumerate(m):
            if e:
                term = term * power(k, e)
        out = out + term
    return out


def translate(p: GroupPolynomial, h: Matrix2, side: str = "left") -> GroupPolynomial:
    """The polynomial ``g -> p(h g)`` (``side='left'``) or ``g -> p(g h)``.

    ``h`` must have exact entries; the result is again canonical.
    """
    u = variable_matrix()
    U = Matrix2(*u)
    hp = Matrix2(*(GroupPolynomial.constant(ComplexRational.coerce(x)) for x in h.entries()))
    if side == "left":
        new = hp @ U
    elif side == "right":
        new = U @ hp
    else:
        raise ValueError("side must be 'left' or 'right'")
    return linear_substitution(p, new.entries())


def monomials_of_degree(k: int) -> list[Monomial]:
    """Canonical monomials of total degree exactly ``k`` in lexicographic order."""
    out = []
    for a in range(k + 1):
        for b in range(k + 1 - a):
            for c in range(k + 1 - a - b):
                d = k - a - b - c
                if a == 0 or d == 0:
                    out.append((a, b, c, d))
    return sorted(out)


def monomial_basis(max_degree: int) -> list[Monomial]:
    """Canonical monomials of total degree <= ``max_degree``."""
    out = []
    for k in range(max_degree + 1):
        out.extend(monomials_of_degree(k))
    return out


def to_string(p: GroupPolynomial) -> str:
    if not p:
        return "0"
    parts = []
    for m, c in p.items():
        mono = "*".join(
            f"{name}^{e}" if e > 1 else name
            for name, e in zip(VARIABLE_NAMES, m) if e)
        parts.append(f"{c}*{mono}" if mono else str(c))
    return " + ".join(parts)


def polynomial_from_terms(items: Iterable[tuple[Monomial, object]]) -> GroupPolynomial:
    raw: dict = {}
    for m, c in items:
        _accumulate(raw, tuple(m), ComplexRational.coerce(c))
    return GroupPolynomial(raw)
