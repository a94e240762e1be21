# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import json
import pathlib
from typing import Any
from typing import Callable

# Third-Party Imports
import numpy as np
import pytest

# Local Imports
from gyroqfi.wrappers import JsonFileWrapper
from gyroqfi.wrappers import JsonIOWrapper
from gyroqfi.wrappers import strip_comments


def test_raises_error_when_filepath_argument_is_not_path() -> None:
    with pytest.raises(TypeError, match="expected type 'PathLike'"):
        JsonFileWrapper("failure.json")


def test_raises_error_when_read_only_argument_is_not_bool(
    make_json_file: Callable[[str, Any], pathlib.Path],
) -> None:
    path = make_json_file("test.json", {})
    with pytest.raises(TypeError, match="expected type 'bool'"):
        JsonFileWrapper(path, read_only="yes")


def test_raises_error_when_file_does_not_have_json_extension(
    tempdir: str,
) -> None:
    path = pathlib.Path(tempdir) / "text.csv"
    with pytest.raises(ValueError, match="not a '.json' file"):
        JsonFileWrapper(path)


def test_opening_file_returns_json_io_wrapper(
    make_json_file: Callable[[str, Any], pathlib.Path],
) -> None:
    path = make_json_file("test.json", {})
    with JsonFileWrapper(path).open() as file:
        assert isinstance(file, JsonIOWrapper)


def test_can_read_from_json_file(
    make_json_file: Callable[[str, Any], pathlib.Path],
) -> None:
    content = {"epsilon": 2000.0, "drive": "ccw"}
    path = make_json_file("test.json", content)
    with JsonFileWrapper(path, read_only=True).open() as file:
        assert file.load() == content


def test_can_write_numpy_values(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "test.json"
    with JsonFileWrapper(path).open("w") as file:
        file.dump({"grid": np.arange(3), "value": np.float64(0.5)})

    assert json.loads(path.read_text()) == {"grid": [0, 1, 2], "value": 0.5}


def test_raises_error_for_unserializable_value(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "test.json"
    with JsonFileWrapper(path).open("w") as file:
        with pytest.raises(TypeError, match="not JSON serializable"):
            file.dump({"value": object()})


def test_strips_line_comments() -> None:
    text = '{\n  // note\n  "a": 1, # trailing\n  "b": 2\n}'
    assert json.loads(strip_comments(text)) == {"a": 1, "b": 2}


def test_keeps_comment_markers_inside_strings() -> None:
    text = '{"url": "http://example.org/#top"}'
    assert strip_comments(text) == text
