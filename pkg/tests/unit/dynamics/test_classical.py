# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import numpy as np
import pytest

# Local Imports
from gyroqfi.dynamics import ClassicalAmplitudes
from gyroqfi.dynamics import classical_rhs
from gyroqfi.dynamics import drive_vector
from gyroqfi.dynamics import linear_cavity_steady_state
from gyroqfi.model import Mode
from ... import factories


def test_vacuum_is_fixed_point_without_drive() -> None:
    p = factories.make_params(epsilon=0.0)
    result = classical_rhs(ClassicalAmplitudes(), p, 0.5, factories.OMEGA)
    assert result.to_array().tolist() == [0j, 0j, 0j]


@pytest.mark.parametrize(
    "direction,expected", [(Mode.CCW, [3.0, 0.0]), (Mode.CW, [0.0, 3.0])]
)
def test_feeds_only_driven_mode(direction: Mode, expected: list) -> None:
    p = factories.make_params(epsilon=3.0, drive_direction=direction)
    np.testing.assert_array_equal(drive_vector(p), expected)


def test_single_mode_steady_state_without_coupling() -> None:
    p = factories.make_params(
        epsilon=2.0, delta_c=0.5, g0_override=0.0, rotation=0.0
    )
    alpha = p.epsilon / (0.5j + 0.5 * p.kappa)
    amps = ClassicalAmplitudes(alpha, 0j, 0j)
    residual = classical_rhs(amps, p, p.delta_c, 0.0).to_array()
    assert np.max(np.abs(residual)) < 1e-12

    steady, _ = linear_cavity_steady_state(p)
    np.testing.assert_allclose(steady, [alpha, 0.0], rtol=1e-12)


def test_backscattered_steady_state() -> None:
    p = factories.make_params(
        epsilon=1.0,
        delta_c=0.5,
        j_coupling=0.3,
        g0_override=0.0,
        rotation=0.0,
    )
    loss = 0.5j + 0.5 * p.kappa
    alpha_ccw = p.epsilon / (loss + p.j_coupling**2 / loss)
    alpha_cw = -1j * p.j_coupling * alpha_ccw / loss
    amps = ClassicalAmplitudes(alpha_ccw, alpha_cw, 0j)
    residual = classical_rhs(amps, p, p.delta_c, 0.0).to_array()
    assert np.max(np.abs(residual)) < 1e-12

    steady, _ = linear_cavity_steady_state(p)
    np.testing.assert_allclose(steady, [alpha_ccw, alpha_cw], rtol=1e-12)


def test_mechanical_mode_feels_radiation_pressure() -> None:
    p = factories.make_params(g0_override=0.01)
    amps = ClassicalAmplitudes(3.0 + 4.0j, 1.0j, 0j)
    result = classical_rhs(amps, p, 0.0, 0.0)
    assert result.beta == pytest.approx(1j * 0.01 * 26.0)
