# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import time

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi.experiments import parallel_map


def _slow_square(value: int) -> int:
    time.sleep(0.001 * (5 - value))
    return value * value


@pytest.mark.parametrize("threads", [1, 3])
def test_keeps_input_order(threads: int) -> None:
    result = parallel_map(_slow_square, range(5), threads)
    assert result == [0, 1, 4, 9, 16]


def test_maps_empty_input() -> None:
    assert parallel_map(_slow_square, [], 2) == []


@pytest.mark.parametrize("threads", [0, -1, 2.0])
def test_raises_error_for_invalid_threads(threads: object) -> None:
    with pytest.raises(ValueError, match="threads must be a positive"):
        parallel_map(_slow_square, [1], threads)


def test_propagates_errors() -> None:
    def fail(value: int) -> int:
        raise RuntimeError(f"failed on {value}")

    with pytest.raises(RuntimeError, match="failed on"):
        parallel_map(fail, [1, 2], 2)
