# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi.utils import converters


def test_splits_comma_separated_floats() -> None:
    result = converters.to_float_list("1000, 2000,4e3,")
    assert result == [1000.0, 2000.0, 4000.0]


def test_converts_float_sequences() -> None:
    assert converters.to_float_list((1, "2")) == [1.0, 2.0]


def test_splits_comma_separated_text() -> None:
    assert converters.to_text_list(" ccw, cw ,") == ["ccw", "cw"]


@pytest.mark.parametrize("value", [1.0, {"a": 1}])
def test_raises_error_when_value_is_not_a_list(value: object) -> None:
    with pytest.raises(TypeError, match="cannot be converted to a list"):
        converters.to_float_list(value)


@pytest.mark.parametrize(
    "mode,expected", [("r", "rt"), ("wb", "wt"), ("ta", "at"), ("x", "xt")]
)
def test_converts_text_file_mode(mode: str, expected: str) -> None:
    assert converters.to_text_file_mode(mode) == expected
