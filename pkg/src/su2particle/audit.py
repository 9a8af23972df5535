"""Sign-convention audit.

Computes, rather than assumes, every signed statement that depends on the
conventions R_n = (i/2) X_n, L_m = -(i/2) Y_m and the ladders i O_1 +- O_2:
seed eigenvalues, which ladder raises, which ladder form of H holds, and how
the ladders pair under the Haar adjoint.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .haar import adjoint_check
from .operators import (DEFAULT_VERIFY_DEGREE, IdentityReport, ZeroOperator, commutator,
                        family, hamiltonian, ladder, verify_identity)
from .rational import ComplexRational, format_fraction
from .ring import GroupPolynomial, monomial_basis
from .spectra import measure_conventions


def ladder_identities(max_degree: int = DEFAULT_VERIFY_DEGREE) -> list[IdentityReport]:
    """``[O+-, O3] = +-O+-``, ``[O+, O-] = 2 O3`` for both families and ``[R*, L*] = 0``."""
    out = []
    for kind in "RL":
        o3 = family(kind)(3)
        for d, s in (("+", 1), ("-", -1)):
            lad = ladder(kind, d)
            out.append(verify_identity(commutator(lad, o3), ComplexRational(s) * lad, max_degree,
                                       name=f"[{kind}{d},{kind}3] = {d}{kind}{d}"))
        out.append(verify_identity(commutator(ladder(kind, "+"), ladder(kind, "-")),
                                   ComplexRational(2) * o3, max_degree,
                                   name=f"[{kind}+,{kind}-] = 2{kind}3"))

    def members(kind):
        return {"+": ladder(kind, "+"), "-": ladder(kind, "-"), "3": family(kind)(3)}

    for rs, rop in members("R").items():
        for ls, lop in members("L").items():
            out.append(verify_identity(commutator(rop, lop), ZeroOperator(), max_degree,
                                       name=f"[R{rs},L{ls}] = 0"))
    return out


def hamiltonian_ladder_forms(max_degree: int = DEFAULT_VERIFY_DEGREE) -> list[IdentityReport]:
    """All eight forms ``H = s1 R(x)R(y) + R3^2 + s3 R3`` with (x, y) in {(+,-), (-,+)}."""
    r3 = family("R")(3)
    out = []
    for first, second in (("+", "-"), ("-", "+")):
        prod = ladder("R", first) * ladder("R", second)
        for s1 in (1, -1):
            for s3 in (1, -1):
                rhs = ComplexRational(s1) * prod + r3 * r3 + ComplexRational(s3) * r3
                sign1 = "" if s1 > 0 else "-"
                sign3 = "+" if s3 > 0 else "-"
                name = f"H = {sign1}R{first}R{second} + R3^2 {sign3} R3"
                out.append(verify_identity(hamiltonian(), rhs, max_degree, name=name))
    return out


@dataclass
class AdjointPairing:
    relation: str
    status: str

    def to_json(self) -> dict:
        return {"relation": self.relation, "status": self.status}


def adjoint_pairings(max_degree: int = 3) -> list[AdjointPairing]:
    """Test ``(O-)^dagger = s O+`` for s = +1 and -1 in both families."""
    samples = [GroupPolynomial.monomial(m) for m in monomial_basis(max_degree)]
    out = []
    for kind in "RL":
        lower, upper = ladder(kind, "-"), ladder(kind, "+")
        for s in (1, -1):
            rep = adjoint_check(lower, ComplexRational(s) * upper, samples)
            sign = "" if s > 0 else "-"
            out.append(AdjointPairing(f"({kind}-)^dagger = {sign}{kind}+", rep.status))
    return out


@dataclass
class ConventionAudit:
    seed: dict
    ladder_shift: dict
    identities: list = field(repr=False)
    hamiltonian_forms: list = field(repr=False)
    adjoints: list = field(repr=False)

    @property
    def holding_hamiltonian_forms(self) -> list[str]:
        return [r.identity for r in self.hamiltonian_forms if r.passed]

    @property
    def passed(self) -> bool:
        return (all(r.passed for r in self.identities)
                and bool(self.holding_hamiltonian_forms)
                and any(a.status == "pass" for a in self.adjoints))

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "ladder_shift": self.ladder_shift,
            "ladder_identities": [r.to_json() for r in self.identities],
            "hamiltonian_ladder_forms": [r.to_json() for r in self.hamiltonian_forms],
            "hamiltonian_form_holding": self.holding_hamiltonian_forms,
            "adjoint_pairings": [a.to_json() for a in self.adjoints],
            "status": "pass" if self.passed else "fail",
        }


def convention_audit(max_degree: int = 4, a: int = 3, b: int = 3) -> ConventionAudit:
    conv = measure_conventions(a, b)
    seed = {
        "a": a, "b": b,
        "H": format_fraction(conv.seed_energy),
        f"R{a}": format_fraction(conv.seed_r),
        f"L{b}": format_fraction(conv.seed_l),
        f"L{b}_sign": "+" if conv.seed_l > 0 else "-",
    }
    shifts = {f"R{d}": conv.r_shift[d] for d in "+-"}
    shifts.update({f"L{d}": conv.l_shift[d] for d in "+-"})
    return ConventionAudit(seed, shifts, ladder_identities(max_degree),
                           hamiltonian_ladder_forms(max_degree), adjoint_pairings(min(max_degree, 3)))
