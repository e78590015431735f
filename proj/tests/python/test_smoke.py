"""Smoke tests for the Python bindings: one pass over every exposed operation."""

from fractions import Fraction

import pytest

import specarb


def test_witness_checks():
    assert specarb.check_nilpotent_witness()
    assert specarb.check_binomial_witness()


def test_obstruction_quotient():
    assert specarb.obstruction_quotient() == "-x4"


def test_certificate_polynomial_stats():
    assert specarb.pi_term_count() == 3210
    assert specarb.pi_total_degree() == 37
    assert specarb.pi_weighted_degree() == 94


def test_solution_shape():
    sol = specarb.solution()
    assert set(sol) == {f"x{i}" for i in range(1, 9)}
    assert sol["x4"] == ("-tau4", "tau7")
    js = specarb.solution_json()
    assert '"num"' in js and '"den"' in js


def test_realize_recovers_the_witness():
    params = specarb.realize([1] * 8)
    assert params is not None
    assert params["x1"] == "1737/848"


def test_realize_accepts_fractions_and_strings():
    a = specarb.realize([Fraction(k, 1) for k in range(1, 9)])
    b = specarb.realize([str(k) for k in range(1, 9)])
    assert a == b and a is not None


def test_psi_nonzero_on_realizable_spectra():
    assert specarb.psi([1] * 8) != "0"
    assert specarb.psi(list(range(1, 9))) != "0"
    with pytest.raises(Exception):
        specarb.psi([1, 2, 3])  # wrong arity


def test_gaussian_obstruction():
    quad = [("0", "1"), ("0", "-1")] * 4
    assert specarb.psi_gaussian(quad) == ("0", "0")
    assert specarb.realize_gaussian(quad) is None


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        specarb.psi(["not-a-number"] * 8)


def test_assemble_and_verify_roundtrip():
    values = list(range(1, 21))
    rep = specarb.assemble(values, seed=0)
    assert rep["pass"] and rep["pattern_ok"]
    assert rep["n"] == 20
    assert rep["nonzero_count"] == 15 + 4 * 6
    assert rep["branch"] == "generic-subset"

    chk = specarb.verify_matrix(rep["matrix_json"], values)
    assert chk["pass"] and chk["nonzero_count"] == rep["nonzero_count"]

    # A corrupted matrix is caught.
    bad = rep["matrix_json"].replace('"-72"', '"-72000"', 1)
    assert bad != rep["matrix_json"]
    assert not specarb.verify_matrix(bad, values)["pass"]
