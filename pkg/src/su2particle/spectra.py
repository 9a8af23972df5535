"""Eigenfunctions of (H, R_a, L_b) built from the trace seed by ladder operators."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .core import Matrix2, basis_element
from .linalg import rank
from .operators import (eigenvalue, family, hamiltonian, ladder, ladder_shift)
from .rational import ComplexRational, I, format_fraction, parse_fraction
from .ring import GroupPolynomial, monomial_basis, trace_polynomial

DEFAULT_BUDGET = Fraction(3)


class BudgetExceeded(ValueError):
    pass


class EigenRelationError(RuntimeError):
    """A constructed function failed an exact eigen-relation (an internal bug)."""


def parse_half_integer(text) -> int:
    """Parse ``"3/2"``, ``"1.5"`` or ``1.5`` and return twice the value."""
    value = parse_fraction(str(text)) if not isinstance(text, Fraction) else text
    twice = 2 * value
    if twice.denominator != 1:
        raise ValueError(f"{text!r} is not an integer or half-integer")
    return int(twice)


@dataclass(frozen=True, order=True)
class SpinLabel:
    """(j, l, r) stored as twice their values."""

    two_j: int
    two_l: int
    two_r: int

    def __post_init__(self):
        if self.two_j < 0:
            raise ValueError(f"j must be non-negative, got {Fraction(self.two_j, 2)}")
        for name, v in (("l", self.two_l), ("r", self.two_r)):
            if abs(v) > self.two_j:
                raise ValueError(
                    f"{name} = {Fraction(v, 2)} is outside -j..j for j = {Fraction(self.two_j, 2)}")
            if (v - self.two_j) % 2:
                raise ValueError(
                    f"{name} = {Fraction(v, 2)} must differ from j = {Fraction(self.two_j, 2)} by an integer")

    @classmethod
    def of(cls, j, l, r) -> "SpinLabel":
        return cls(parse_half_integer(j), parse_half_integer(l), parse_half_integer(r))

    @property
    def j(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def l(self) -> Fraction:
        return Fraction(self.two_l, 2)

    @property
    def r(self) -> Fraction:
        return Fraction(self.two_r, 2)

    @property
    def energy(self) -> Fraction:
        return self.j * (self.j + 1)

    def sort_key(self):
        return (self.two_j, -self.two_l, -self.two_r)

    def to_json(self) -> dict:
        return {"j": format_fraction(self.j), "l": format_fraction(self.l),
                "r": format_fraction(self.r)}

    def __str__(self):
        return f"(j={self.j}, l={self.l}, r={self.r})"


def labels(two_j: int) -> list[SpinLabel]:
    """All (2j+1)^2 labels of one multiplet, canonically ordered."""
    return [SpinLabel(two_j, tl, tr)
            for tl in range(two_j, -two_j - 1, -2)
            for tr in range(two_j, -two_j - 1, -2)]


@dataclass(frozen=True)
class Eigenfunction:
    label: SpinLabel
    poly: GroupPolynomial = field(repr=False)
    energy: Fraction
    l: Fraction
    r: Fraction

    @property
    def degree(self) -> int:
        return self.poly.degree()

    def to_json(self) -> dict:
        return {**self.label.to_json(), "E": format_fraction(self.energy),
                "degree": self.degree, "polynomial": self.poly.to_json()}


def _check_axis(a: int) -> None:
    if a not in (1, 2, 3):
        raise ValueError(f"axis index must be 1, 2 or 3, got {a}")


def seed_function(a: int = 3, b: int = 3) -> GroupPolynomial:
    """``<(I + i T_a)(I + i T_b) g>``."""
    _check_axis(a)
    _check_axis(b)
    one = Matrix2.identity()
    t = (one + basis_element(a).scale(I)) @ (one + basis_element(b).scale(I))
    return trace_polynomial(t)


@dataclass(frozen=True)
class Conventions:
    """Measured facts about the seed and the ladders for a given (a, b)."""

    a: int
    b: int
    seed_energy: Fraction
    seed_r: Fraction
    seed_l: Fraction
    r_shift: dict  # '+'/'-' -> shift of the R_a eigenvalue
    l_shift: dict

    def r_mover(self, step: int) -> str:
        """Ladder direction that changes r by ``step`` (= +1 or -1)."""
        return next(d for d, s in self.r_shift.items() if s == step)

    def l_mover(self, step: int) -> str:
        return next(d for d, s in self.l_shift.items() if s == step)


def _real(c: ComplexRational | None, what: str) -> Fraction:
    if c is None or c.im:
        raise EigenRelationError(f"{what} is not a real eigenvalue: {c}")
    return c.re


@lru_cache(maxsize=None)
def measure_conventions(a: int = 3, b: int = 3) -> Conventions:
    seed = seed_function(a, b)
    return Conventions(
        a=a, b=b,
        seed_energy=_real(eigenvalue(hamiltonian(), seed), "seed energy"),
        seed_r=_real(eigenvalue(family("R")(a), seed), "seed R eigenvalue"),
        seed_l=_real(eigenvalue(family("L")(b), seed), "seed L eigenvalue"),
        r_shift={d: ladder_shift("R", d, axis=a) for d in "+-"},
        l_shift={d: ladder_shift("L", d, axis=b) for d in "+-"},
    )


@lru_cache(maxsize=None)
def _seed_power(a: int, b: int, n: int) -> GroupPolynomial:
    if n == 0:
        return GroupPolynomial.constant(1)
    return _seed_power(a, b, n - 1) * seed_function(a, b)


def _walk(label: SpinLabel, conv: Conventions) -> list[tuple[str, str, int]]:
    """Ladder moves (kind, direction, count) taking seed^{2j} to ``label``."""
    moves = []
    r0, l0 = label.two_j * conv.seed_r, label.two_j * conv.seed_l
    dr, dl = label.r - r0, label.l - l0
    if dr:
        step = 1 if dr > 0 else -1
        moves.append(("R", conv.r_mover(step), abs(int(dr))))
    if dl:
        step = 1 if dl > 0 else -1
        moves.append(("L", conv.l_mover(step), abs(int(dl))))
    return moves


def construct(label: SpinLabel, a: int = 3, b: int = 3) -> GroupPolynomial:
    """Unverified construction of the polynomial for ``label``."""
    conv = measure_conventions(a, b)
    p = _seed_power(a, b, label.two_j)
    for kind, direction, count in _walk(label, conv):
        op = ladder(kind, direction, axis=a if kind == "R" else b)
        for _ in range(count):
            p = op.apply(p)
    return p


def verify_eigenfunction(label: SpinLabel, p: GroupPolynomial, a: int = 3, b: int = 3) -> Eigenfunction:
    if not p:
        raise EigenRelationError(f"construction of {label} produced the zero polynomial")
    e = ComplexRational(label.energy)
    checks = ((hamiltonian(), e, "H"), (family("R")(a), ComplexRational(label.r), f"R{a}"),
              (family("L")(b), ComplexRational(label.l), f"L{b}"))
    for op, value, name in checks:
        if op.apply(p) != p.scale(value):
            raise EigenRelationError(f"{name} eigen-relation fails for {label}")
    return Eigenfunction(label, p, label.energy, label.l, label.r)


def check_budget(two_j: int, budget: Fraction = DEFAULT_BUDGET) -> None:
    if Fraction(two_j, 2) > budget:
        raise BudgetExceeded(f"j = {Fraction(two_j, 2)} exceeds the degree budget j <= {budget}")


def build_eigenfunction(label: SpinLabel, a: int = 3, b: int = 3,
                        budget: Fraction = DEFAULT_BUDGET) -> Eigenfunction:
    """Construct and exactly verify the eigenfunction with the given label."""
    check_budget(label.two_j, budget)
    return verify_eigenfunction(label, construct(label, a, b), a, b)


def build_multiplet(two_j: int, a: int = 3, b: int = 3,
                    budget: Fraction = DEFAULT_BUDGET) -> list[Eigenfunction]:
    """All (2j+1)^2 verified eigenfunctions of one multiplet.

    Walks the ladders once per row instead of rebuilding every label from the
    seed power.
    """
    check_budget(two_j, budget)
    conv = measure_conventions(a, b)
    top = _seed_power(a, b, two_j)
    r0, l0 = two_j * conv.seed_r, two_j * conv.seed_l
    r_op = ladder("R", conv.r_mover(-1 if r0 > 0 else 1), axis=a)
    l_op = ladder("L", conv.l_mover(-1 if l0 > 0 else 1), axis=b)
    by_r = {}
    p = top
    for k in range(two_j + 1):
        by_r[r0 - k if r0 > 0 else r0 + k] = p
        p = r_op.apply(p)
    out = {}
    for r, pr in by_r.items():
        q = pr
        for k in range(two_j + 1):
            l = l0 - k if l0 > 0 else l0 + k
            out[SpinLabel(two_j, int(2 * l), int(2 * r))] = q
            q = l_op.apply(q)
    return [verify_eigenfunction(lab, out[lab], a, b)
            for lab in sorted(out, key=SpinLabel.sort_key)]


def multiplet_index(j_max) -> list[int]:
    return list(range(0, parse_half_integer(j_max) + 1))


@dataclass(frozen=True)
class SpectrumRow:
    label: SpinLabel
    energy: Fraction
    degree: int
    verified: bool

    def to_json(self) -> dict:
        return {**self.label.to_json(), "E": format_fraction(self.energy),
                "degree": self.degree, "verified": self.verified}


def spectrum_table(j_max="3/2", a: int = 3, b: int = 3,
                   budget: Fraction = DEFAULT_BUDGET) -> list[SpectrumRow]:
    """One verified row per (j, l, r) with j <= j_max; sum of (2j+1)^2 rows."""
    two_jmax = parse_half_integer(j_max)
    check_budget(two_jmax, budget)
    rows = []
    for two_j in range(two_jmax + 1):
        for ef in build_multiplet(two_j, a, b, budget):
            rows.append(SpectrumRow(ef.label, ef.energy, ef.degree, True))
    return rows


def coefficient_vector(p: GroupPolynomial, index: dict) -> dict:
    return {index[m]: c for m, c in p.items()}


@dataclass(frozen=True)
class IndependenceReport:
    j: Fraction
    size: int
    rank: int

    @property
    def passed(self) -> bool:
        return self.rank == self.size

    def to_json(self) -> dict:
        return {"j": format_fraction(self.j), "functions": self.size, "rank": self.rank,
                "status": "pass" if self.passed else "fail"}


def multiplet_independence_check(j, a: int = 3, b: int = 3,
                                 budget: Fraction = DEFAULT_BUDGET) -> IndependenceReport:
    """Exact rank of one multiplet's coefficient vectors over the monomial basis."""
    two_j = parse_half_integer(j)
    funcs = build_multiplet(two_j, a, b, budget)
    index = {m: k for k, m in enumerate(monomial_basis(two_j))}
    vectors = [coefficient_vector(ef.poly, index) for ef in funcs]
    return IndependenceReport(Fraction(two_j, 2), len(vectors), rank(vectors))
