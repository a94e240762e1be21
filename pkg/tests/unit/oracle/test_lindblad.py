# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import numpy as np
import pytest

# Local Imports
from gyroqfi.dynamics import DetuningSchedule
from gyroqfi.dynamics import initial_state
from gyroqfi.dynamics import integrate
from gyroqfi.errors import TruncationLeak
from gyroqfi.model import PhysicalParams
from gyroqfi.oracle import FockConfig
from gyroqfi.oracle import evolve
from gyroqfi.oracle import expectations
from gyroqfi.oracle import fock_state
from gyroqfi.oracle import lindblad_rhs
from gyroqfi.oracle import thermal_populations
from gyroqfi.oracle import top_level_populations
from gyroqfi.oracle import vacuum_thermal_state
from gyroqfi.selftest import oracle_deviation
from ... import factories


def test_undriven_vacuum_is_stationary() -> None:
    config = FockConfig(2, 2, 2)
    rho = vacuum_thermal_state(config, 0.0)
    result = lindblad_rhs(rho, PhysicalParams(epsilon=0.0), 0.5)
    np.testing.assert_allclose(result, 0.0, atol=1e-14)


def test_derivative_is_traceless_and_hermitian() -> None:
    config = FockConfig(3, 3, 3)
    rho = fock_state(config, 1, 0, 1)
    p = PhysicalParams(epsilon=0.01, j_coupling=0.1, n_bar_m=0.5)
    result = lindblad_rhs(rho, p, 0.5, config=config)
    assert abs(np.trace(result)) < 1e-12
    np.testing.assert_allclose(result, result.conj().T, atol=1e-12)


def test_raises_error_when_truncation_cannot_be_inferred() -> None:
    with pytest.raises(ValueError, match="cannot infer a cubic truncation"):
        lindblad_rhs(np.eye(12), PhysicalParams(), 0.5)


def test_raises_error_when_top_level_is_populated() -> None:
    config = FockConfig(2, 2, 2)
    rho = fock_state(config, 1, 0, 0)
    with pytest.raises(TruncationLeak, match="top Fock level") as error:
        lindblad_rhs(rho, PhysicalParams(), 0.5, config=config)
    assert error.value.diagnostics["populations"][0] == pytest.approx(1.0)


def test_reports_top_level_populations() -> None:
    config = FockConfig(3, 3, 3)
    result = top_level_populations(fock_state(config, 2, 0, 1), config)
    np.testing.assert_allclose(result, [1.0, 0.0, 0.0])


def test_thermal_phonon_number_matches_populations() -> None:
    config = FockConfig(2, 2, 8)
    rho = vacuum_thermal_state(config, 0.3)
    state = expectations(rho, PhysicalParams(), config)
    expected = float(np.dot(np.arange(8), thermal_populations(0.3, 8)))
    assert state.X[2].real == pytest.approx(expected)
    assert state.amps.photon_number == pytest.approx(0.0)


def test_raises_error_when_end_precedes_start() -> None:
    config = FockConfig(2, 2, 2)
    with pytest.raises(ValueError, match="t_end must exceed"):
        evolve(
            vacuum_thermal_state(config, 0.0),
            PhysicalParams(),
            DetuningSchedule.constant(0.5),
            0.0,
            config,
        )


def test_linear_cavity_matches_moment_solver() -> None:
    """Tests that both integrators agree when the coupling vanishes."""
    p = factories.make_params(epsilon=0.1, g0_override=0.0)
    config = FockConfig(6, 6, 2)
    times = np.array([0.5, 1.0, 2.0])
    schedule = DetuningSchedule.constant(p.delta_c)
    oracle = evolve(
        vacuum_thermal_state(config, 0.0),
        p,
        schedule,
        2.0,
        config,
        sample_times=times,
    )
    moments = integrate(
        initial_state(p), schedule, 2.0, 1e-10, p, sample_times=times
    )
    np.testing.assert_allclose(oracle.times, [0.0, 0.5, 1.0, 2.0])
    for t in times:
        np.testing.assert_allclose(
            oracle.at(t).amps.to_array(),
            moments.at(t).amps.to_array(),
            atol=1e-6,
        )
        np.testing.assert_allclose(oracle.at(t).X.x, 0.0, atol=1e-4)


@pytest.mark.parametrize("coupling", [0.1, 0.3])
def test_backscattering_swaps_photon_between_modes(coupling: float) -> None:
    p = PhysicalParams(
        epsilon=0.0, j_coupling=coupling, g0_override=0.0, rotation=0.0
    )
    config = FockConfig(3, 3, 2, dissipation=False)
    times = np.linspace(0.5, 5.0, 10)
    trajectory = evolve(
        fock_state(config, 0, 1, 0),
        p,
        DetuningSchedule.constant(0.5),
        5.0,
        config,
        sample_times=times,
    )
    for t in times:
        state = trajectory.at(t)
        expected = np.cos(coupling * t) ** 2
        assert state.X[1].real == pytest.approx(expected, abs=1e-8)
        assert state.X[0].real == pytest.approx(1.0 - expected, abs=1e-8)


def test_closed_system_conserves_photon_number() -> None:
    p = factories.make_params(epsilon=0.0, j_coupling=0.3, g0_override=0.05)
    config = FockConfig(3, 3, 4, dissipation=False)
    times = np.linspace(1.0, 6.0, 6)
    trajectory = evolve(
        fock_state(config, 1, 0, 0),
        p,
        DetuningSchedule.constant(0.5),
        6.0,
        config,
        sample_times=times,
    )
    for t in times:
        state = trajectory.at(t)
        photons = state.X[0].real + state.X[1].real
        assert photons == pytest.approx(1.0, abs=1e-8)


@pytest.mark.slow
def test_nonlinear_dynamics_match_moment_solver() -> None:
    p = PhysicalParams(
        epsilon=0.2, j_coupling=0.0, n_bar_m=0.0, g0_override=0.02
    )
    deviation, _, _ = oracle_deviation(
        p, FockConfig(8, 8, 8), np.linspace(0.5, 10.0, 20)
    )
    assert float(np.max(deviation)) < 1e-3
