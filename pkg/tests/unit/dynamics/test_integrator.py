# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import math

# Third-Party Imports
import numpy as np
import pytest

# Local Imports
from gyroqfi.dynamics import DetuningSchedule
from gyroqfi.dynamics import initial_state
from gyroqfi.dynamics import integrate
from gyroqfi.dynamics import linear_cavity_steady_state
from gyroqfi.dynamics import trajectory_columns
from gyroqfi.errors import StepSizeUnderflow
from gyroqfi.model import PhysicalParams
from ... import factories


def _run(p: PhysicalParams, t_end: float, tol: float = 1e-10, **kwargs):
    result = integrate(
        initial_state(p),
        DetuningSchedule.constant(p.delta_c),
        t_end,
        tol,
        p,
        **kwargs,
    )
    return result


@pytest.mark.parametrize("tol", [0.0, -1e-8, 0.1])
def test_raises_error_for_tolerance_out_of_range(tol: float) -> None:
    with pytest.raises(ValueError, match="tol must lie in"):
        _run(factories.make_params(), 1.0, tol)


def test_raises_error_for_non_numeric_tolerance() -> None:
    with pytest.raises(TypeError, match="expected type 'float'"):
        _run(factories.make_params(), 1.0, "1e-8")


def test_raises_error_when_end_precedes_start() -> None:
    with pytest.raises(ValueError, match="t_end must exceed"):
        _run(factories.make_params(), 0.0)


def test_raises_error_when_step_falls_below_minimum() -> None:
    with pytest.raises(StepSizeUnderflow, match="below 10") as excinfo:
        _run(factories.make_params(), 50.0, 1e-8, min_step=10.0)

    diagnostics = excinfo.value.diagnostics
    assert diagnostics["error"] == "StepSizeUnderflow"
    assert 0.0 < diagnostics["h"] < 10.0
    assert diagnostics["segment"] == [0.0, 50.0]
    assert diagnostics["t"] == pytest.approx(diagnostics["h"])


def test_clipped_final_step_is_not_an_underflow() -> None:
    p = factories.make_params()
    trajectory = _run(p, 1e-6, 1e-8, min_step=1e-3)
    assert trajectory.final.t == pytest.approx(1e-6)


def test_samples_start_breakpoints_and_requested_times() -> None:
    p = factories.make_params()
    schedule = DetuningSchedule([(0.0, 0.5), (2.0, -0.5)])
    trajectory = integrate(
        initial_state(p), schedule, 4.0, 1e-8, p, sample_times=[1.0, 3.0]
    )
    np.testing.assert_allclose(trajectory.times, [0.0, 1.0, 2.0, 3.0, 4.0])
    assert trajectory.breakpoints == [2.0]
    assert trajectory.final.t == pytest.approx(4.0)
    assert len(trajectory) == 5


def test_ignores_sample_times_outside_the_run() -> None:
    trajectory = _run(
        factories.make_params(), 2.0, 1e-8, sample_times=[-1.0, 1.0, 5.0]
    )
    np.testing.assert_allclose(trajectory.times, [0.0, 1.0, 2.0])


def test_undriven_phonons_relax_to_bath_occupation() -> None:
    p = PhysicalParams(epsilon=0.0, n_bar_m=5.0)
    times = np.linspace(10.0, 60.0, 6)
    trajectory = integrate(
        initial_state(p, cold_start=True),
        DetuningSchedule.constant(p.delta_c),
        times[-1],
        1e-12,
        p,
        sample_times=times,
    )
    for t in times:
        expected = 5.0 * (1.0 - math.exp(-p.gamma_m * t))
        assert trajectory.at(t).X[2].real == pytest.approx(expected, rel=1e-7)


def test_bare_cavity_reaches_linear_steady_state() -> None:
    p = factories.make_params(g0_override=0.0)
    alpha, d_alpha = linear_cavity_steady_state(p)
    final = _run(p, 120.0).final
    np.testing.assert_allclose(
        final.amps.to_array()[:2], alpha, rtol=1e-6, atol=1e-9
    )
    np.testing.assert_allclose(
        final.d_amps.to_array()[:2],
        d_alpha,
        rtol=1e-5,
        atol=1e-9 * np.max(np.abs(d_alpha)),
    )


def test_prescaling_does_not_change_sensitivities() -> None:
    p = factories.make_params()
    scaled = _run(p, 5.0, prescale=True).final
    plain = _run(p, 5.0, prescale=False).final
    expected = np.concatenate([plain.d_amps.to_array(), plain.dX.x])
    result = np.concatenate([scaled.d_amps.to_array(), scaled.dX.x])
    scale = np.max(np.abs(expected))
    assert scale > 0.0
    np.testing.assert_allclose(result, expected, rtol=1e-4, atol=1e-6 * scale)


def test_overrides_rotation_rate() -> None:
    p = factories.make_params()
    default = _run(p, 3.0, 1e-8).final
    mirrored = _run(p, 3.0, 1e-8, omega=-p.rotation).final
    assert default.amps.alpha_ccw != pytest.approx(mirrored.amps.alpha_ccw)


def test_keeps_moments_hermitian() -> None:
    final = _run(factories.make_params(), 5.0, 1e-9).final
    assert final.X.conjugate_pair_error() < 1e-6 * max(
        1.0, float(np.max(np.abs(final.X.x)))
    )


def test_exports_97_columns() -> None:
    columns = trajectory_columns()
    assert len(columns) == 97
    assert columns[:3] == ["t", "re_alpha_ccw", "im_alpha_ccw"]
    assert columns[-1] == "im_d_a_cw*b"

    rows = _run(factories.make_params(), 1.0, 1e-8).rows()
    assert all(len(row) == 97 for row in rows)


def test_exports_data_frame() -> None:
    pytest.importorskip("pandas")
    frame = _run(factories.make_params(), 1.0, 1e-8).to_frame()
    assert list(frame.columns) == trajectory_columns()
    assert frame["t"].iloc[-1] == pytest.approx(1.0)


def test_returns_moment_time_series() -> None:
    trajectory = _run(PhysicalParams(epsilon=0.0, n_bar_m=2.0), 2.0, 1e-10)
    series = trajectory.moment(2)
    assert series.shape == (len(trajectory),)
    np.testing.assert_allclose(series.real, 2.0, rtol=1e-8)
