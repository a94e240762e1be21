# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi.errors import ConfigError
from gyroqfi.experiments import Observable
from gyroqfi.experiments import SweepAxis
from gyroqfi.experiments import SweepSpec
from gyroqfi.metrology import DisplacementFrame
from gyroqfi.model import Mode
from ... import factories


def test_sorts_values() -> None:
    spec = SweepSpec("detuning", [0.5, -0.5, 0.0])
    assert spec.axis is SweepAxis.DETUNING
    assert spec.values == (-0.5, 0.0, 0.5)


def test_defaults_come_from_params() -> None:
    params = factories.make_params(drive_direction="cw")
    spec = SweepSpec(SweepAxis.TIME, [1.0, 2.0], params)
    assert spec.directions == (Mode.CW,)
    assert spec.omegas == (params.rotation,)
    assert spec.epsilons == (params.epsilon,)
    assert spec.outputs == tuple(Observable)
    assert spec.t_end == 2.0


def test_drops_duplicate_directions() -> None:
    spec = SweepSpec("time", [1.0], directions=["ccw", "cw", "ccw"])
    assert spec.directions == (Mode.CCW, Mode.CW)


def test_coerces_frame() -> None:
    spec = SweepSpec("time", [1.0], frame="intracavity")
    assert spec.frame is DisplacementFrame.INTRACAVITY


def test_raises_error_for_empty_values() -> None:
    with pytest.raises(ConfigError, match="omega sweep needs values"):
        SweepSpec("omega", [])


@pytest.mark.parametrize("values", [[-1.0, 1.0], [0.0]])
def test_raises_error_for_invalid_times(values: list) -> None:
    with pytest.raises(ConfigError, match="sample times"):
        SweepSpec("time", values)


@pytest.mark.parametrize("threads", [0, 1.5])
def test_raises_error_for_invalid_threads(threads: object) -> None:
    with pytest.raises(ConfigError, match="threads must be a positive"):
        SweepSpec("time", [1.0], threads=threads)


def test_raises_error_for_inverted_bounds() -> None:
    with pytest.raises(ConfigError, match="invalid action bounds"):
        SweepSpec("detuning", [0.0], action_bounds=(1.0, -1.0))


def test_replaces_fields() -> None:
    spec = SweepSpec("time", [1.0]).replace(values=[3.0, 2.0])
    assert spec.values == (2.0, 3.0)
