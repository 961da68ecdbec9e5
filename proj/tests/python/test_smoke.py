"""Smoke tests for the python module."""

import math

import pytest

ringcalc = pytest.importorskip("ringcalc")


def test_sgn_on_conjugated_fixture():
    a = [[3 + 0j, 1 + 0j], [0j, -2 + 0j]]
    res = ringcalc.compute("sgn", a, backend="quadrature", nodes=64)
    v = res["value"]
    assert abs(v[0][0] - 1) < 1e-9
    assert abs(v[0][1] - 0.4) < 1e-9
    assert abs(v[1][1] + 1) < 1e-9
    assert res["residuals"]["involution"] < 1e-10
    assert res["class_verified"]


def test_sqrt_squares_back():
    a = [[2 + 0j, 1 + 0j], [0j, 2 + 0j]]
    v = ringcalc.compute("sqrt", a, nodes=64)["value"]
    prod = [
        [sum(v[i][k] * v[k][j] for k in range(2)) for j in range(2)]
        for i in range(2)
    ]
    assert abs(prod[0][0] - 2) < 1e-9
    assert abs(prod[0][1] - 1) < 1e-9


def test_oracle_backend():
    fx = ringcalc.generate_fixture(2, [3 + 0j, -2 + 0j], seed=7)
    res = ringcalc.compute("sgn", fx["a"], backend="oracle",
                           oracle_v=fx["v"], oracle_eigs=fx["eigs"])
    assert res["backend"] == "oracle"
    assert abs(res["value"][0][0] - 1) < 1e-12


def test_class_refutation_raises():
    a = [[0j, 1 + 0j], [-1 + 0j, 0j]]  # eigenvalues +-i
    with pytest.raises(ringcalc.SpectralClassError):
        ringcalc.compute("sgn", a, nodes=64)


def test_geometric_mean_scalar():
    g = ringcalc.geometric_mean([[4 + 0j]], [[9 + 0j]], nodes=128)
    assert abs(g["value"][0][0] - 6) < 1e-9


def test_split_projectors():
    sp = ringcalc.split([[3 + 0j, 0j], [0j, -2 + 0j]], nodes=64)
    assert abs(sp["proj_plus"][0][0] - 1) < 1e-10
    assert abs(sp["proj_minus"][1][1] - 1) < 1e-10


def test_exact_rational_scalars():
    assert ringcalc.exact("sgn", "3") == "1"
    assert ringcalc.exact("sgn", "-7/2") == "-1"
    assert ringcalc.exact("idem", "2") == "1"
    assert ringcalc.exact("fsqrt", "-2") == "-1"
    assert ringcalc.exact("fsqrt_nohalf", "-6") == "-2"
    assert ringcalc.exact("sqrt", "9/4") == "3/2"


def test_cayley_involution():
    w = ringcalc.cayley(3 + 0j)
    assert abs(w + 0.5) < 1e-15
    assert abs(ringcalc.cayley(w) - 3) < 1e-15


def test_identities_all_verified():
    results = ringcalc.verify_identities("all")
    assert len(results) >= 17
    assert all(r["verified"] for r in results)


def test_suite_runner():
    checks = ringcalc.run_suite("halffree")
    assert checks and all(c["pass"] for c in checks)


def test_segment_sqrt():
    res = ringcalc.sqrt_segment([[9 + 0j]], nodes=64)
    assert abs(res["value"][0][0] - 3) < 1e-9
