import pytest
from hypothesis import given

from su2particle.audit import adjoint_pairings, convention_audit, hamiltonian_ladder_forms
from su2particle.operators import (ZeroOperator, commutator, eigenvalue, hamiltonian, ladder,
                                   ladder_shift, left_derivation, mixed_commutator_identities,
                                   quantum_L, quantum_R, right_derivation,
                                   su2_commutator_identities, verify_identity)
from su2particle.rational import ComplexRational, I, format_fraction
from su2particle.ring import GroupPolynomial, variable_matrix
from su2particle.spectra import seed_function

from conftest import poly_from_terms, polynomials

u11, u12, u21, u22 = variable_matrix()
ONE = GroupPolynomial.constant(1)


def _parse(text):
    return eval(text, {}, {"u11": u11, "u12": u12, "u21": u21, "u22": u22})  # noqa: S307


def test_derivations_match_frozen_oracle(frozen):
    for case in frozen["derivations"]:
        d = (right_derivation if case["side"] == "right" else left_derivation)(case["n"])
        assert d.apply(_parse(case["input"])) == poly_from_terms(case["terms"]), case


def test_derivation_examples():
    assert right_derivation(3).apply(u11) == u12.scale(I)
    assert right_derivation(1).apply(u11) == u11.scale(I)
    assert left_derivation(3).apply(u11) == u21.scale(I)
    assert left_derivation(2).apply(u11) == u21


@pytest.mark.parametrize("n", [1, 2, 3])
def test_constants_are_annihilated(n):
    for op in (right_derivation(n), left_derivation(n), quantum_R(n), quantum_L(n)):
        assert not op.apply(ONE)
    assert not hamiltonian().apply(ONE)


@given(polynomials, polynomials)
def test_leibniz_rule(p, q):
    for d in (right_derivation(2), left_derivation(3)):
        assert d.apply(p * q) == d.apply(p) * q + p * d.apply(q)


@pytest.mark.parametrize("bad", [0, 4])
def test_index_checked(bad):
    with pytest.raises(ValueError):
        quantum_R(bad)


def test_seed_eigenvalues(frozen):
    f = seed_function()
    assert eigenvalue(hamiltonian(), f) == ComplexRational(3, 0) / 4
    assert eigenvalue(quantum_R(3), f) == ComplexRational(1, 0) / 2
    # the sign of the L3 eigenvalue is measured, and pinned by the sympy oracle
    assert eigenvalue(quantum_L(3), f) == ComplexRational(-1, 0) / 2
    got = {k: format_fraction(eigenvalue(op, f).re)
           for k, op in (("seed_H", hamiltonian()), ("seed_R3", quantum_R(3)), ("seed_L3", quantum_L(3)))}
    assert got == {k: frozen[k] for k in got}


def test_seed_squared_energy():
    f2 = seed_function() ** 2
    assert hamiltonian().apply(f2) == f2.scale(2)


@pytest.mark.parametrize("kind", ["R", "L"])
def test_su2_commutators(kind):
    assert all(r.passed for r in su2_commutator_identities(kind, 4))


def test_mixed_commutators_vanish():
    assert all(r.passed for r in mixed_commutator_identities(4))


def test_failing_identity_reports_counterexample():
    rep = verify_identity(commutator(quantum_R(1), quantum_R(2)), quantum_R(3), 2)
    assert rep.status == "fail"
    assert rep.counterexample is not None and sum(rep.counterexample) == 1
    assert rep.to_json()["counterexample"] == list(rep.counterexample)


def test_verify_rejects_degree_zero():
    with pytest.raises(ValueError):
        verify_identity(quantum_R(1), quantum_R(1), 0)


def test_ladder_directions_are_measured():
    # with the ladders i*O_1 +- O_2 the "+" ladder lowers the O_3 eigenvalue
    assert ladder_shift("R", "+") == -1
    assert ladder_shift("R", "-") == 1
    assert ladder_shift("L", "+") == -1
    assert ladder_shift("L", "-") == 1


def test_ladder_kills_bottom_state():
    """Lowering r past -1/2 annihilates the j = 1/2 state with r = -1/2."""
    bottom = ladder("R", "+").apply(seed_function())  # r = -1/2
    assert bottom and eigenvalue(quantum_R(3), bottom) == ComplexRational(-1, 0) / 2
    assert not ladder("R", "+").apply(bottom)


def test_hamiltonian_ladder_forms():
    forms = {r.identity: r.status for r in hamiltonian_ladder_forms(4)}
    assert forms["H = R+R- + R3^2 + R3"] == "fail"  # the form as usually printed
    assert forms["H = -R+R- + R3^2 + R3"] == "pass"
    assert forms["H = -R-R+ + R3^2 - R3"] == "pass"
    assert sum(v == "pass" for v in forms.values()) == 2


def test_adjoint_pairing_sign():
    got = {a.relation: a.status for a in adjoint_pairings(2)}
    assert got == {"(R-)^dagger = R+": "fail", "(R-)^dagger = -R+": "pass",
                   "(L-)^dagger = L+": "fail", "(L-)^dagger = -L+": "pass"}


def test_convention_audit_report():
    audit = convention_audit(3).to_json()
    assert audit["status"] == "pass"
    assert audit["seed"] == {"a": 3, "b": 3, "H": "3/4", "R3": "1/2", "L3": "-1/2", "L3_sign": "-"}
    assert audit["ladder_shift"] == {"R+": -1, "R-": 1, "L+": -1, "L-": 1}
    assert len(audit["ladder_identities"]) == 15


def test_zero_operator_and_algebra():
    z = ZeroOperator()
    assert not z.apply(u11)
    op = quantum_R(1) * 2 + quantum_R(1) - quantum_R(1) * 3
    assert not op.apply(u11 * u12 + u21)
