"""Smoke tests for the python bindings."""

import cmath
import json

import pytest

import hofalab as h


def test_fractional_part_window():
    assert h.frac("3/4") == "-1/4"
    assert h.frac("1/2") == "1/2"
    assert h.dist_circle("2/3") == "1/3"
    assert h.int_part("5/3") == "2"


def test_smoothness_norm():
    assert h.c_infty_norm(["0", "1/5"], 5) == "1"
    assert h.c_infty_norm(["7", "3", "5"], 11) == "0"
    assert h.c_infty_norm(["0", "0", "1/10"], 5) == "5/2"


def test_bracket_expr_eval():
    expr = {
        "modulus_n": None,
        "terms": [{"kind": "nbracket", "a": "-1", "alpha": "1/5", "beta": "2/5"}],
    }
    assert h.eval_bracket_expr(json.dumps(expr), 3) == "2/5"


def test_nilsequence_matches_bracket_phase():
    g = {"alpha": ["1/5"], "beta": ["2/5"], "vertical": []}
    assert h.nilseq_phase(json.dumps(g), 3) == "2/5"
    val = h.eval_nilsequence(json.dumps(g), 3)
    assert abs(val - cmath.exp(2j * cmath.pi * 2 / 5)) < 1e-12


def test_omega_pairing():
    assert h.omega(["1", "0", "0", "0"], ["0", "0", "1", "0"]) == "1"
    assert h.omega(["1", "2", "3", "4"], ["1", "2", "3", "4"]) == "0"


def test_gowers_norm_constant():
    ones = [1.0 + 0.0j] * 13
    for s in (1, 2, 3, 4):
        assert h.gowers_norm(ones, s) == pytest.approx(1.0, abs=1e-9)


def test_counting_operators():
    ones = [1.0 + 0.0j] * 7
    assert h.lambda_count(ones, ones, ones, ones, [0, 1], [0, 2]) == pytest.approx(1.0)
    assert h.lambda1_count(ones, ones, ones, ones) == pytest.approx(1.0)
    dual = h.dual_function(ones, ones, ones, [0, 1], [0, 2])
    assert all(abs(v - 1.0) < 1e-12 for v in dual)


def test_bohr_and_energy():
    assert h.bohr_build(["1/7"], "11/70", 7) == [0, 1, 6]
    found, rho = h.find_regular_radius(["1/101"], "1/5", 101)
    assert found
    full = list(range(11))
    assert h.energy(full, 11) == "1"
    assert h.energy4(full, full, full, full, 11) == "1"


def test_rbpl_round_trip():
    inst = h.rbpl_plant(2, 31, 7)
    out = json.loads(h.rbpl_solve(inst))
    assert not out["degenerate"]
    cert = json.dumps(out["certificate"])
    assert h.rbpl_verify(inst, cert)


def test_dichotomy_round_trip():
    g = h.plant_dichotomy(1, 101, 3)
    assert h.mean_correlation(g, 101) == pytest.approx(1.0, abs=1e-9)
    res = json.loads(h.run_dichotomy(g, 101, 0.1))
    assert res["branch"] == "certificate"
    assert res["verified"]


def test_fourier_expansion_certificate():
    terms, err, degenerate = h.expand_frac_product("1", "1/31", "2/31", 31, 0.05)
    assert not degenerate
    assert err <= 0.05
    assert all(freq.endswith("/31") or "/" not in freq for _, freq in terms)
