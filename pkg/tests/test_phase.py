import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gapwave import (
    EllipticalStripProfile,
    EvanescentModeError,
    QuadratureSpec,
    dispersion_metric,
    phase_shift,
    phase_sweep,
    total_phase,
)
from gapwave.physics import guided_beta

from conftest import GHZ, MM, WR15, trapezoid_phase_shift_deg, trapezoid_total_phase

# scipy.integrate.quad at 1e-14, see notes in test_acceptance
DPHI_055_70 = 106.8141966387
DPHI_100_70 = 250.5622771950


def test_total_phase_uniform(wr15):
    flat = EllipticalStripProfile(11 * MM, 0.0)
    expected = guided_beta(3.76 * MM, 70 * GHZ) * 22 * MM
    assert total_phase(flat, wr15, 70 * GHZ) == pytest.approx(expected, rel=1e-15)
    assert expected == pytest.approx(26.53, abs=5e-3)


def test_total_phase_prototype(wr15, prototype):
    oracle = trapezoid_total_phase(11 * MM, 0.55 * MM, 3.76 * MM, 70 * GHZ)
    got = total_phase(prototype, wr15, 70 * GHZ)
    assert got == pytest.approx(oracle, abs=1e-6)
    assert got == pytest.approx(24.666, abs=1e-3)


def test_total_phase_tolerance_contract(wr15, prototype):
    q1 = QuadratureSpec(abs_tolerance=1e-6)
    q2 = QuadratureSpec(abs_tolerance=5e-7)
    assert abs(total_phase(prototype, wr15, 70 * GHZ, q1)
               - total_phase(prototype, wr15, 70 * GHZ, q2)) < 1e-6


def test_total_phase_below_cutoff(wr15):
    with pytest.raises(EvanescentModeError):
        total_phase(EllipticalStripProfile(11 * MM, 1.6 * MM), wr15, 64 * GHZ)


@pytest.mark.parametrize("method", ["adaptive-simpson", "fixed-gauss"])
def test_phase_shift_values(wr15, method):
    q = QuadratureSpec(method)
    assert phase_shift(0.0, 11 * MM, wr15, 70 * GHZ, q) == 0.0
    assert phase_shift(0.55 * MM, 11 * MM, wr15, 70 * GHZ, q) == pytest.approx(DPHI_055_70, abs=1e-4)
    assert phase_shift(1.0 * MM, 11 * MM, wr15, 70 * GHZ, q) == pytest.approx(DPHI_100_70, abs=1e-4)


def test_phase_shift_monotone_in_deflection(wr15):
    defl = np.linspace(0, 1.4, 20) * MM
    freqs = np.linspace(64, 75, 10) * GHZ
    table = np.array([[phase_shift(b, 11 * MM, wr15, f) for f in freqs] for b in defl])
    assert np.all(table[0] == 0)
    assert np.all(table[1:] > 0)
    assert np.all(np.diff(table, axis=0) > 0)


feasible = st.tuples(
    st.floats(1 * MM, 20 * MM),
    st.floats(0.01 * MM, 1.4 * MM),
    st.floats(64 * GHZ, 75 * GHZ),
)


@settings(max_examples=25, deadline=None)
@given(params=feasible)
def test_linear_in_length(params):
    a, b, f = params
    # a 1e-9 relative claim needs a quadrature tolerance well below 1e-9 rad
    q = QuadratureSpec("adaptive-simpson", 1e-12, 40)
    assert phase_shift(b, 2 * a, WR15, f, q) == pytest.approx(2 * phase_shift(b, a, WR15, f, q), rel=1e-9)


@settings(max_examples=10, deadline=None)
@given(params=feasible)
def test_adaptive_matches_trapezoid_oracle(params):
    a, b, f = params
    got = total_phase(EllipticalStripProfile(a, b), WR15, f)
    assert got == pytest.approx(trapezoid_total_phase(a, b, 3.76 * MM, f), abs=1e-6)


def test_phase_sweep(wr15):
    sweep = phase_sweep(11 * MM, wr15, [0.0], wr15.band, 12)
    assert np.all(sweep.phase_shift_deg == 0)
    sweep = phase_sweep(11 * MM, wr15, np.array([0, 0.3, 0.55, 1.0]) * MM, wr15.band, 12)
    assert sweep.phase_shift_deg.shape == (4, 12)
    assert np.all(np.diff(sweep.phase_shift_deg, axis=0) > 0)
    row = sweep.row(0.55 * MM)
    assert np.all(np.diff(row) < 0)
    assert row[0] == pytest.approx(trapezoid_phase_shift_deg(11 * MM, 0.55 * MM, 3.76 * MM, 64 * GHZ), abs=1e-4)


def test_phase_sweep_parallel_matches_serial(wr15, monkeypatch):
    args = (11 * MM, wr15, np.array([0.2, 0.7]) * MM, wr15.band, 9)
    monkeypatch.setenv("GAPWAVE_THREADS", "1")
    serial = phase_sweep(*args).phase_shift_deg
    monkeypatch.setenv("GAPWAVE_THREADS", "4")
    assert np.array_equal(phase_sweep(*args).phase_shift_deg, serial)


def test_phase_sweep_errors(wr15):
    with pytest.raises(ValueError):
        phase_sweep(11 * MM, wr15, [0.5 * MM, 0.2 * MM], wr15.band, 5)
    with pytest.raises(EvanescentModeError, match="b_e=1.6 mm"):
        phase_sweep(11 * MM, wr15, [1.6 * MM], wr15.band, 5)


def test_dispersion_metric():
    assert dispersion_metric([100, 100, 100]) == 0
    assert dispersion_metric([90, 100, 110]) == pytest.approx(0.2)
    with pytest.raises(ValueError):
        dispersion_metric([])
    with pytest.raises(ValueError):
        dispersion_metric([0, 0])


@given(st.lists(st.floats(1, 500), min_size=1, max_size=20), st.floats(1e-3, 1e3))
def test_dispersion_metric_scale_invariant(row, k):
    assert dispersion_metric(np.array(row) * k) == pytest.approx(dispersion_metric(row), rel=1e-9, abs=1e-12)


def test_dispersion_grows_with_deflection(wr15):
    sweep = phase_sweep(11 * MM, wr15, np.array([0.3, 1.0]) * MM, wr15.band, 12)
    assert dispersion_metric(sweep.phase_shift_deg[1]) > dispersion_metric(sweep.phase_shift_deg[0])
