# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import numpy as np

# Local Imports
from gyroqfi.dynamics import STATE_SIZE
from gyroqfi.dynamics import AugmentedSystem
from gyroqfi.dynamics import ClassicalAmplitudes
from gyroqfi.dynamics import classical_sensitivity_rhs
from gyroqfi.dynamics import initial_state
from gyroqfi.dynamics import linear_cavity_steady_state
from gyroqfi.dynamics import sensitivity_rhs
from gyroqfi.dynamics.sensitivity import AMPS
from gyroqfi.dynamics.sensitivity import D_AMPS
from gyroqfi.dynamics.sensitivity import D_MOMENTS
from gyroqfi.dynamics.sensitivity import MOMENTS
from gyroqfi.model import derive_rates
from ... import factories


def _random_state(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    result = rng.normal(size=STATE_SIZE) + 1j * rng.normal(size=STATE_SIZE)
    return result


def test_no_sensitivity_without_sagnac_shift() -> None:
    p = factories.make_params(sagnac_slope_override=0.0, j_coupling=0.3)
    s = initial_state(p)
    result = sensitivity_rhs(s, p, 0.5)
    assert np.all(result.d_amps.to_array() == 0.0)
    assert np.all(result.dX.x == 0.0)


def test_steady_amplitude_sensitivity_without_optomechanics() -> None:
    p = factories.make_params(
        epsilon=1.0, delta_c=0.5, g0_override=0.0, rotation=0.0
    )
    dshift = derive_rates(p).detuning_per_rotation
    loss = 0.5j + 0.5 * p.kappa
    alpha = p.epsilon / loss
    d_alpha = -1j * dshift * p.epsilon / loss**2

    steady, d_steady = linear_cavity_steady_state(p)
    np.testing.assert_allclose(steady, [alpha, 0.0], rtol=1e-12)
    np.testing.assert_allclose(d_steady, [d_alpha, 0.0], rtol=1e-12)


def test_closed_form_sensitivity_is_stationary() -> None:
    p = factories.make_params(
        epsilon=1.0, delta_c=0.5, j_coupling=0.3, g0_override=0.0
    )
    steady, d_steady = linear_cavity_steady_state(p)
    amps = ClassicalAmplitudes(steady[0], steady[1], 0j)
    d_amps = ClassicalAmplitudes(d_steady[0], d_steady[1], 0j)
    residual = classical_sensitivity_rhs(
        amps, d_amps, p, p.delta_c, p.rotation
    ).to_array()
    assert np.max(np.abs(residual)) < 1e-12 * np.max(np.abs(d_steady))


def test_sensitivity_block_matches_central_difference() -> None:
    # The augmented right-hand side is quadratic in (state, rotation), so a
    # central difference along (d_amps, d_moments, 1) is exact up to
    # rounding.
    p = factories.make_params(j_coupling=0.3, g0_override=0.05, n_bar_m=2.0)
    y = _random_state(3)
    direction = np.zeros_like(y)
    direction[AMPS] = y[D_AMPS]
    direction[MOMENTS] = y[D_MOMENTS]
    step = 1.0

    exact = AugmentedSystem(p, p.rotation).derivative(y, 0.7)
    upper = AugmentedSystem(p, p.rotation + step).derivative(
        y + step * direction, 0.7
    )
    lower = AugmentedSystem(p, p.rotation - step).derivative(
        y - step * direction, 0.7
    )
    central = (upper - lower) / (2.0 * step)

    scale = np.max(np.abs(exact))
    np.testing.assert_allclose(
        exact[D_AMPS], central[AMPS], rtol=1e-9, atol=1e-12 * scale
    )
    np.testing.assert_allclose(
        exact[D_MOMENTS], central[MOMENTS], rtol=1e-9, atol=1e-12 * scale
    )
