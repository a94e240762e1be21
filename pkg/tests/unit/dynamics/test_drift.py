# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import numpy as np
import pytest

# Local Imports
from gyroqfi.dynamics import CONJUGATE_PAIRS
from gyroqfi.dynamics import MOMENT_COUNT
from gyroqfi.dynamics import ClassicalAmplitudes
from gyroqfi.dynamics import build_drift_matrix
from gyroqfi.dynamics import build_inhomogeneous
from gyroqfi.model import derive_rates
from ... import factories

# Mean fields with every coupling switched on.
AMPS = ClassicalAmplitudes(3.0 - 2.0j, 0.5 + 1.5j, 0.2 - 0.7j)


def _conjugation() -> np.ndarray:
    """Permutation mapping each moment onto its complex conjugate."""
    order = list(range(MOMENT_COUNT))
    for left, right in CONJUGATE_PAIRS:
        order[left], order[right] = right, left
    return np.eye(MOMENT_COUNT)[order]


def test_uncoupled_drift_is_diagonal() -> None:
    p = factories.make_params(j_coupling=0.0)
    drift = build_drift_matrix(ClassicalAmplitudes(), p, 0.5, p.rotation)
    np.testing.assert_array_equal(drift, np.diag(np.diag(drift)))
    assert drift[0, 0] == pytest.approx(-p.kappa)
    assert drift[1, 1] == pytest.approx(-p.kappa)
    assert drift[2, 2] == pytest.approx(-p.gamma_m)


def test_squeezing_row_uses_twice_the_detuning() -> None:
    p = factories.make_params(kappa=0.44, j_coupling=0.0)
    drift = build_drift_matrix(ClassicalAmplitudes(), p, 0.5, 0.0)
    assert drift[3, 3] == pytest.approx(-0.44 + 1.0j)
    assert drift[4, 4] == pytest.approx(-0.44 - 1.0j)


def test_drift_maps_conjugate_moments_onto_each_other() -> None:
    p = factories.make_params(j_coupling=0.3, g0_override=0.05)
    drift = build_drift_matrix(AMPS, p, 0.5, factories.OMEGA)
    swap = _conjugation()
    np.testing.assert_allclose(drift, swap @ drift.conj() @ swap, atol=1e-14)


def test_inhomogeneous_term_vanishes_in_vacuum() -> None:
    p = factories.make_params(n_bar_m=0.0)
    result = build_inhomogeneous(ClassicalAmplitudes(), p)
    np.testing.assert_array_equal(result, np.zeros(MOMENT_COUNT))


def test_thermal_bath_feeds_phonon_number_only() -> None:
    p = factories.make_params(n_bar_m=5.0)
    result = build_inhomogeneous(ClassicalAmplitudes(), p)
    expected = np.zeros(MOMENT_COUNT, dtype=complex)
    expected[2] = 5.0 * p.gamma_m
    np.testing.assert_allclose(result, expected)


def test_inhomogeneous_term_of_enhanced_couplings() -> None:
    p = factories.make_params(n_bar_m=0.0, g0_override=0.05)
    g0 = derive_rates(p).g0
    g_ccw, g_cw = g0 * AMPS.alpha_ccw, g0 * AMPS.alpha_cw
    result = build_inhomogeneous(AMPS, p)

    expected = np.zeros(MOMENT_COUNT, dtype=complex)
    expected[15] = -1j * np.conj(g_ccw)
    expected[16] = 1j * g_ccw
    expected[19] = -1j * np.conj(g_cw)
    expected[20] = 1j * g_cw
    np.testing.assert_allclose(result, expected, atol=1e-15)
    # <a b^dag> picks up no commutator constant.
    assert result[14] == 0.0
    assert result[18] == 0.0


def test_inhomogeneous_term_is_conjugation_symmetric() -> None:
    p = factories.make_params(n_bar_m=2.0, g0_override=0.05)
    result = build_inhomogeneous(AMPS, p)
    np.testing.assert_allclose(result, _conjugation() @ result.conj())
