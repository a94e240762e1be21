# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import math
from typing import Callable
from typing import Tuple

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi import selftest
from gyroqfi.errors import NonFinite


@pytest.mark.parametrize(
    "name, check",
    [(name, check) for name, check, slow in selftest.CHECKS if not slow],
)
def test_fast_check_passes(
    name: str, check: Callable[[], Tuple[float, float]]
) -> None:
    error, tolerance = check()
    assert error <= tolerance, name


@pytest.mark.slow
def test_oracle_check_passes() -> None:
    error, tolerance = selftest.check_oracle()
    assert error <= tolerance


def test_skips_slow_checks() -> None:
    results = selftest.run_selftest()
    assert [r.name for r in results] == [
        "linear_cavity",
        "thermal_relaxation",
        "finite_differences",
        "reciprocity",
        "no_drive",
    ]
    assert all(r.label == "PASS" for r in results)


def test_failing_check_is_reported(monkeypatch: pytest.MonkeyPatch) -> None:
    def explode() -> Tuple[float, float]:
        raise NonFinite("state is not finite")

    monkeypatch.setattr(selftest, "CHECKS", [("explode", explode, False)])
    (result,) = selftest.run_selftest()
    assert result.label == "FAIL"
    assert result.message == "state is not finite"
    assert math.isnan(result.error)
    assert len(result.to_row()) == len(selftest.SELFTEST_COLUMNS)
