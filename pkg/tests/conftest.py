import numpy as np
import pytest

from gapwave import EllipticalStripProfile, FrequencyBand, WaveguideSpec

C = 299792458.0
MM = 1e-3
GHZ = 1e9


def trapezoid_total_phase(a_e, b_e, width, f, n=1_000_000):
    """Brute-force reference for the accumulated phase, independent of gapwave."""
    x = np.linspace(-a_e, a_e, n)
    w = width - b_e * np.sqrt(np.clip(1.0 - (x / a_e) ** 2, 0.0, None))
    lam = C / f
    beta = 2 * np.pi / lam * np.sqrt(np.clip(1.0 - (lam / (2 * w)) ** 2, 0.0, None))
    return np.trapezoid(beta, x)


def trapezoid_phase_shift_deg(a_e, b_e, width, f, n=1_000_000):
    ref = trapezoid_total_phase(a_e, 0.0, width, f, n)
    return np.degrees(ref - trapezoid_total_phase(a_e, b_e, width, f, n))


WR15 = WaveguideSpec(3.76 * MM, FrequencyBand(64 * GHZ, 75 * GHZ))


@pytest.fixture
def wr15():
    return WR15


@pytest.fixture
def prototype():
    return EllipticalStripProfile(11 * MM, 0.55 * MM)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _acceptance.setdefault(report.nodeid, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
