"""Smoke tests for the python module against values known in closed form."""

import math

import pytest

import momunc


def test_heisenberg_reduction():
    res = momunc.bound_C(2.0, 2.0, 3)
    assert res.value == pytest.approx(2.25, rel=1e-10)
    assert res.alpha_opt == pytest.approx(1.0, abs=1e-8)
    assert momunc.classical_bound_D(2.0, 2.0, 3) == pytest.approx(2.25, rel=1e-12)


def test_bound_improves_on_D():
    c = momunc.bound_C(1.0, 2.0, 3)
    d = momunc.classical_bound_D(1.0, 2.0, 3)
    assert c.value > d
    assert c.value == pytest.approx(momunc.bound_C(2.0, 1.0, 3).value, rel=1e-12)
    assert c.alpha_opt == pytest.approx(
        momunc.conjugate(momunc.bound_C(2.0, 1.0, 3).alpha_opt), rel=1e-8
    )


def test_renyi_algebra():
    assert momunc.conjugate(2.0 / 3.0) == pytest.approx(2.0)
    assert momunc.conjugate(momunc.conjugate(0.7)) == pytest.approx(0.7)
    assert momunc.bound_B(1.0) == 0.25
    assert momunc.bound_Z(0.3, 0.4) == pytest.approx(math.exp(-2.0))
    assert momunc.gaussian_power_product(0.75, 3.0) == pytest.approx(
        momunc.bound_B(0.75), rel=1e-12
    )


def test_hydrogen_ground_state():
    assert momunc.hydrogen_moment_r(3, 1, 0, 1.0) == pytest.approx(1.5)
    assert momunc.hydrogen_moment_p(3, 1, 0, 2.0) == pytest.approx(1.0)
    R = momunc.hydrogen_radial_position(3, 1, 0)
    assert R.normalization == pytest.approx(1.0, abs=1e-10)
    assert R(1.0) == pytest.approx(2.0 * math.exp(-1.0), rel=1e-12)
    assert momunc.quadrature_moment(R, 3, 1.0) == pytest.approx(1.5, rel=1e-10)


def test_divergent_moment_raises():
    with pytest.raises(ValueError):
        momunc.hydrogen_moment_p(3, 1, 0, 6.0)
    with pytest.raises(ValueError):
        momunc.bound_Z(0.8, 1.5)


def test_oscillator_saturation():
    assert momunc.oscillator_moment(3, 0, 0, 2.0) == pytest.approx(1.5)
    rows = momunc.sweep_states("oscillator", 3, 0, 0, 2.0, 2.0)
    assert len(rows) == 1
    assert rows[0]["ratio"] == pytest.approx(1.0, abs=1e-10)


def test_maxent_residual():
    rep = momunc.maxent_verify(2.0, 1.5, 3, 3.0)
    assert rep.residual() <= 1e-8


def test_presets_and_sweeps():
    assert momunc.preset_names() == [f"fig{i}" for i in range(1, 9)]
    rows = momunc.run_preset("fig3")
    assert len(rows) == 15
    assert all(r["ratio"] >= 1.0 - 1e-10 for r in rows)
    bounds = momunc.sweep_bounds([2.0], 0.5, 4.0, 8, 5)
    assert len(bounds) == 8
    assert all(r["bound_C"] >= r["bound_D"] - 1e-12 for r in bounds)
    assert bounds[0]["system"] is None


def test_quick_suite_passes():
    report = momunc.run_invariant_suite(quick=True)
    failed = [c["name"] for c in report["checks"] if not c["passed"]]
    assert report["all_passed"], failed
