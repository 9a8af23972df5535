"""Eigenfunction tower.

Exact verification lives inside the library; here it is repeated with the
independent sympy model for every label up to j = 1 so that a bug shared by
the operators and the verifier would still surface.
"""
from fractions import Fraction

import pytest
import sympy as sp

import sym_oracle as so
from su2particle.ring import GroupPolynomial
from su2particle.operators import ladder
from su2particle.spectra import (BudgetExceeded, SpinLabel, build_eigenfunction, build_multiplet,
                                 labels, measure_conventions, multiplet_independence_check, parse_half_integer,
                                 seed_function, spectrum_table)

from conftest import poly_from_terms


def test_seed_matches_oracle(frozen):
    assert seed_function(3, 3) == poly_from_terms(frozen["seed"])


def test_trivial_state():
    ef = build_eigenfunction(SpinLabel.of(0, 0, 0))
    assert ef.poly == GroupPolynomial.constant(1)
    assert (ef.energy, ef.l, ef.r) == (0, 0, 0)


def test_seed_is_the_half_state():
    ef = build_eigenfunction(SpinLabel.of("1/2", "-1/2", "1/2"))
    assert ef.poly == seed_function()
    assert ef.energy == Fraction(3, 4)


def test_seed_square_is_the_top_of_j1():
    ef = build_eigenfunction(SpinLabel.of(1, -1, 1))
    assert ef.poly == seed_function() ** 2
    assert ef.energy == 2


@pytest.mark.parametrize("two_j", [0, 1, 2])
def test_eigen_relations_with_sympy(two_j):
    for ef in build_multiplet(two_j):
        f = so.to_sympy(ef.poly)
        j, l, r = (sp.Rational(x.numerator, x.denominator) for x in (ef.label.j, ef.l, ef.r))
        assert sp.expand(so.hamiltonian(f) - j * (j + 1) * f) == 0
        assert sp.expand(so.quantum("R", 3)(f) - r * f) == 0
        assert sp.expand(so.quantum("L", 3)(f) - l * f) == 0


def test_labels_and_counts():
    assert len(labels(3)) == 16
    assert len(spectrum_table(1)) == 14
    assert len(spectrum_table("3/2")) == 30


def test_table_is_sorted():
    rows = spectrum_table(1)
    keys = [r.label.sort_key() for r in rows]
    assert keys == sorted(keys)
    assert rows[0].to_json() == {"j": "0/1", "l": "0/1", "r": "0/1", "E": "0/1", "degree": 0,
                                 "verified": True}


@pytest.mark.parametrize("j,rank", [(0, 1), ("1/2", 4), (1, 9), ("3/2", 16)])
def test_multiplet_rank(j, rank):
    rep = multiplet_independence_check(j)
    assert rep.rank == rep.size == rank


@pytest.mark.parametrize("bad", [("1/2", "3/2", "1/2"), (1, 2, 0), (1, "1/2", 0), (-1, 0, 0)])
def test_out_of_range_labels(bad):
    with pytest.raises(ValueError, match="j"):
        SpinLabel.of(*bad)


@pytest.mark.parametrize("text,two", [("3/2", 3), ("0.5", 1), ("2", 4), (Fraction(5, 2), 5)])
def test_parse_half_integer(text, two):
    assert parse_half_integer(text) == two


def test_parse_rejects_thirds():
    with pytest.raises(ValueError):
        parse_half_integer("1/3")


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_eigenfunction(SpinLabel.of("7/2", "7/2", "7/2"))
    with pytest.raises(BudgetExceeded):
        spectrum_table(1, budget=Fraction(1, 2))


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (1, 2)])
def test_other_axes(a, b):
    for ef in build_multiplet(2, a, b):
        assert ef.poly


def test_eigenfunction_json():
    obj = build_eigenfunction(SpinLabel.of(1, 0, 0)).to_json()
    assert set(obj) == {"j", "l", "r", "E", "degree", "polynomial"}
    assert obj["E"] == "2/1" and obj["degree"] == 2


@pytest.mark.parametrize("two_j", [1, 2, 3, 4])
def test_ladders_saturate_after_2j_plus_1_steps(two_j):
    """Walking away from the top state along r (or l) vanishes exactly at step 2j+1."""
    conv = measure_conventions()
    top = seed_function() ** two_j
    for kind, shift, value in (("R", conv.r_mover(-1), conv.seed_r), ("L", conv.l_mover(1), conv.seed_l)):
        assert (value > 0) == (kind == "R")  # top has r = j and l = -j
        op = ladder(kind, shift)
        p = top
        for _ in range(two_j):
            p = op.apply(p)
            assert p
        assert not op.apply(p)
