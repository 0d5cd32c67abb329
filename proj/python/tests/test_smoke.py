import pytest

import ggm


def test_worked_instances():
    rep = ggm.dims("kp", 4, c=0, k=2, r=2)
    assert rep["agree"]
    assert rep["dim_closed"] == rep["dim_bruteforce"] == rep["dim_hecke"] == 10
    assert ggm.dims("savin", 4, k=2, r=2)["dim_hecke"] == 3
    assert ggm.dims("kp", 1, k=5)["dim_hecke"] == 1


def test_derive_params():
    p = ggm.derive_params("kp", 4, c=0, k=3, r=3)
    assert (p["n0"], p["d0"], p["x_order"]) == (4, 2, 32)


def test_orbits():
    orbs = ggm.orbits("savin", 4, k=2, r=2)
    assert sorted(o["size"] for o in orbs) == [1, 1, 2]


def test_sweep():
    out = ggm.sweep_csv(["kp"], "1..4", "1..2")
    lines = out.splitlines()
    assert lines[0] == ggm.SWEEP_CSV_HEADER
    assert all(line.endswith(",true") for line in lines[1:])
    assert ggm.sweep_csv(["kp"], "5..4", "1") == ggm.SWEEP_CSV_HEADER + "\n"


def test_hilbert():
    assert ggm.hilbert(5, 4, (1, 0), (1, 0)) == (2, 2)


def test_verify():
    results = ggm.verify("cocycle", q=13, n=4)
    assert results and all(ok for _, ok, _ in results)


def test_invalid_input():
    with pytest.raises(ValueError):
        ggm.dims("kp", 4, k=2, r=3)
    with pytest.raises(ValueError):
        ggm.dims("generic", 4, k=2)
