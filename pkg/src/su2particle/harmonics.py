"""Polynomials on the unit sphere and the associated-Legendre harmonic oracle.

A :class:`SpherePolynomial` maps exponent triples of (x1, x2, x3) to Gaussian
rationals, reduced modulo ``x1^2 + x2^2 + x3^2 = 1`` so that x3 appears at
most linearly.  Monomials of that shape are linearly independent as functions
on the sphere, so equality of reduced forms is equality of functions.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .rational import ComplexRational, I, ONE


def _acc(terms: dict, key, c) -> None:
    v = terms.get(key)
    v = c if v is None else v + c
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


@lru_cache(maxsize=None)
def _reduce_monomial(e: tuple) -> tuple:
    """Canonical expansion of x1^a x2^b x3^c as ((exps, int weight), ...)."""
    a, b, c = e
    if c < 2:
        return ((e, 1),)
    out: dict = {}
    # x3^2 = 1 - x1^2 - x2^2
    for (ee, w) in _reduce_monomial((a, b, c - 2)):
        for shift, s in (((0, 0), 1), ((2, 0), -1), ((0, 2), -1)):
            key = (ee[0] + shift[0], ee[1] + shift[1], ee[2])
            out[key] = out.get(key, 0) + s * w
    return tuple((k, w) for k, w in sorted(out.items()) if w)


class SpherePolynomial:
    __slots__ = ("terms",)

    def __init__(self, raw: dict | None = None):
        terms: dict = {}
        for e, c in (raw or {}).items():
            c = ComplexRational.coerce(c)
            if not c:
                continue
            for ee, w in _reduce_monomial(tuple(e)):
                _acc(terms, ee, c * w)
        self.terms = terms

    @classmethod
    def constant(cls, c) -> "SpherePolynomial":
        return cls({(0, 0, 0): c})

    @classmethod
    def coordinate(cls, k: int) -> "SpherePolynomial":
        e = [0, 0, 0]
        e[k - 1] = 1
        return cls({tuple(e): ONE})

    def __add__(self, o: "SpherePolynomial") -> "SpherePolynomial":
        raw = dict(self.terms)
        for e, c in o.terms.items():
            _acc(raw, e, c)
        out = SpherePolynomial()
        out.terms = raw
        return out

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, s) -> "SpherePolynomial":
        s = ComplexRational.coerce(s)
        out = SpherePolynomial()
        out.terms = {e: c * s for e, c in self.terms.items()} if s else {}
        return out

    def __mul__(self, o):
        if not isinstance(o, SpherePolynomial):
            return self.scale(o)
        raw: dict = {}
        for e, c in self.terms.items():
            for f, d in o.terms.items():
                _acc(raw, (e[0] + f[0], e[1] + f[1], e[2] + f[2]), c * d)
        return SpherePolynomial(raw)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SpherePolynomial":
        out = SpherePolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        return isinstance(o, SpherePolynomial) and self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, e) -> ComplexRational:
        return self.terms.get(tuple(e), ComplexRational(0))

    def items(self):
        for e in sorted(self.terms):
            yield e, self.terms[e]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "SpherePolynomial(0)"
        parts = []
        for e, c in self.items():
            mono = "*".join(f"x{k + 1}^{p}" if p > 1 else f"x{k + 1}" for k, p in enumerate(e) if p)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return "SpherePolynomial(" + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        return {"terms": [{"x": list(e), **c.to_json()} for e, c in self.items()]}


def canonical_exponents(max_degree: int) -> list[tuple]:
    """Reduced monomials (x3 power <= 1) of total degree <= max_degree."""
    out = []
    for k in range(max_degree + 1):
        for e3 in (0, 1):
            for e1 in range(k - e3, -1, -1):
                e2 = k - e3 - e1
                if e2 >= 0:
                    out.append((e1, e2, e3))
    return out


def legendre_coefficients(l: int) -> list[Fraction]:
    """Coefficients (ascending powers of z) of P_l(z) = d^l/dz^l (z^2-1)^l / (2^l l!)."""
    # (z^2 - 1)^l expanded
    base = [Fraction(0)] * (2 * l + 1)
    for k in range(l + 1):
        base[2 * k] = Fraction((-1) ** (l - k) * factorial(l), factorial(k) * factorial(l - k))
    poly = base
    for _ in range(l):
        poly = derivative(poly)
    scale = Fraction(1, 2 ** l * factorial(l))
    return [c * scale for c in poly]


def derivative(coeffs: list[Fraction]) -> list[Fraction]:
    return [k * coeffs[k] for k in range(1, len(coeffs))] or [Fraction(0)]


def solid_harmonic(l: int, m: int) -> SpherePolynomial:
    """Unnormalized ``P_l^|m|(x3) e^{i m phi}`` as a polynomial on the sphere.

    Uses ``sin^|m| theta e^{+-i|m| phi} = (x1 +- i x2)^|m|`` and
    ``P_l^|m|(z) = (1-z^2)^{|m|/2} d^|m| P_l/dz^|m|``, without the
    Condon-Shortley phase.
    """
    if l < 0 or abs(m) > l:
        raise ValueError(f"need 0 <= |m| <= l, got l={l}, m={m}")
    p = legendre_coefficients(l)
    for _ in range(abs(m)):
        p = derivative(p)
    radial = SpherePolynomial({(0, 0, k): c for k, c in enumerate(p) if c})
    s = 1 if m >= 0 else -1
    azimuthal = SpherePolynomial({(1, 0, 0): ONE, (0, 1, 0): I * s}) ** abs(m)
    return azimuthal * radial


def proportionality_constant(p: SpherePolynomial, q: SpherePolynomial) -> ComplexRational | None:
    """``c`` with ``p == c q`` exactly (both nonzero), else None."""
    if not p or not q:
        return None
    e, qc = next(q.items())
    c = p[e] / qc
    if not c or p != q.scale(c):
        return None
    return c
