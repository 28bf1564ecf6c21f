import json
from fractions import Fraction

import pytest

import braidinv


def test_tau_lift():
    assert braidinv.lift(7) == {
        1: Fraction(1),
        3: Fraction(-1, 24),
        5: Fraction(3, 640),
        7: Fraction(-5, 7168),
    }
    assert braidinv.lift(11, method="reversion") == braidinv.lift(11)


def test_kontsevich_and_residue():
    assert braidinv.kontsevich("tau", 3) == [0, 1, 0, Fraction(1, 24)]
    assert braidinv.residue("tau^3") == (3, Fraction(1))
    assert braidinv.filtration_order("q - 1") == 1
    assert braidinv.filtration_order("0") is None
    assert braidinv.canonical_braid_sum("tau") == "1*q^1 + -1*q^-1"


def test_q_expansion_row():
    row = braidinv.q_expand(11)
    assert row[1] == Fraction(160083, 131072)
    assert row[3] == Fraction(-12705, 131072)


def test_regularized_values():
    assert braidinv.theta_value(3) == 0
    assert braidinv.theta_value(2) == Fraction(-1, 2)
    assert braidinv.beta_relation_lhs(5) == 0
    assert braidinv.leibniz_partial(3) == Fraction(13, 15)


def test_basis():
    inverse = braidinv.basis_inverse(2)
    assert inverse[0][2] == Fraction(-5, 4)
    assert braidinv.entry_sequence("balanced", 1, 5, [2, 3]) == [Fraction(1, 4), Fraction(7, 18)]


def test_condition_c():
    tauhat = braidinv.builtin_sequence("tauhat", 6)
    assert braidinv.condition_c(tauhat)["satisfied"]
    harmonic = braidinv.condition_c(braidinv.builtin_sequence("harmonic", 6))
    assert not harmonic["satisfied"]
    assert harmonic["first_violation"] == (1, 2, 0)


def test_asymptotics_rows():
    rows = braidinv.asymptotics(1, [7, 49], digits=20)
    assert rows[0]["coefficient"] == "1225/1024"
    assert float(rows[1]["abs_error_float"]) < 0.02


def test_reproduce_and_cli():
    result = braidinv.reproduce()
    assert result["failed"] == 0
    assert result["flagged"] == 3
    assert json.loads(result["json"])["tables"]

    code, out, _ = braidinv.run_cli("--format", "json", "lift", "--order", "5")
    assert code == 0
    assert json.loads(out)["tables"][0]["rows"][1] == ["3", "-1/24"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        braidinv.lift(3, seed="tau^2")
    with pytest.raises(ValueError):
        braidinv.beta_relation_lhs(4)
    with pytest.raises(IndexError):
        braidinv.entry_sequence("balanced", 1, 9, [1])
