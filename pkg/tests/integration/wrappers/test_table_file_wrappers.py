# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import pathlib

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi.wrappers import CsvFileWrapper
from gyroqfi.wrappers import DatFileWrapper
from gyroqfi.wrappers import TableIOWrapper


def test_raises_error_when_filepath_argument_is_not_path() -> None:
    with pytest.raises(TypeError, match="expected type 'PathLike'"):
        CsvFileWrapper("failure.csv")


def test_raises_error_when_filepath_argument_is_a_directory(
    tempdir: str,
) -> None:
    with pytest.raises(IsADirectoryError):
        CsvFileWrapper(pathlib.Path(tempdir))


def test_raises_error_when_file_does_not_have_csv_extension(
    tempdir: str,
) -> None:
    path = pathlib.Path(tempdir) / "table.dat"
    with pytest.raises(ValueError, match="not a '.csv' file"):
        CsvFileWrapper(path)


def test_raises_error_when_delimiter_argument_is_not_str(
    tempdir: str,
) -> None:
    path = pathlib.Path(tempdir) / "table.csv"
    with pytest.raises(TypeError, match="expected type 'str'"):
        CsvFileWrapper(path, delimiter=1)


def test_opening_file_returns_table_io_wrapper(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "table.csv"
    with CsvFileWrapper(path).open("w") as file:
        assert isinstance(file, TableIOWrapper)
        assert not file.closed


def test_raises_error_when_writing_read_only_file(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "table.csv"
    wrapper = CsvFileWrapper(path, read_only=True)
    with pytest.raises(ValueError, match="not allowed when read-only"):
        wrapper.open("w")


def test_raises_error_when_writing_header_without_fieldnames(
    tempdir: str,
) -> None:
    path = pathlib.Path(tempdir) / "table.csv"
    with CsvFileWrapper(path).open("w") as file:
        with pytest.raises(RuntimeError, match="'fieldnames' is empty"):
            file.write_header()


def test_writes_csv_with_header(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "table.csv"
    wrapper = CsvFileWrapper(path, fieldnames=["t", "qfi"])
    with wrapper.open("w") as file:
        file.write_header()
        file.write_rows([[0.0, 1.5], [1.0, 2.5]])

    assert path.read_text().splitlines() == ["t,qfi", "0.0,1.5", "1.0,2.5"]


def test_reads_csv_records(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "table.csv"
    path.write_text("t,qfi\n0.0,1.5\n")
    with CsvFileWrapper(path, read_only=True).open() as file:
        records = file.read_records()
        assert file.fieldnames == ["t", "qfi"]

    assert records == [{"t": "0.0", "qfi": "1.5"}]


def test_writes_dat_with_comment_header(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "curve.dat"
    wrapper = DatFileWrapper(path, fieldnames=["delta_c", "qfi"])
    with wrapper.open("w") as file:
        file.write_header()
        file.write_records([{"delta_c": -0.5, "qfi": 3.0}])

    lines = path.read_text().splitlines()
    assert lines[0].startswith("#")
    assert lines[0].split()[1:] == ["delta_c", "qfi"]
    assert lines[1].split() == ["-0.5", "3.0"]


def test_reads_dat_rows(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "curve.dat"
    path.write_text("# x y\n1 2\n\n3 4\n")
    with DatFileWrapper(path, read_only=True).open() as file:
        rows = file.read_rows()
        assert file.fieldnames == ["x", "y"]

    assert rows == [["1", "2"], ["3", "4"]]


def test_accepts_upper_case_extension(tempdir: str) -> None:
    path = pathlib.Path(tempdir) / "TABLE.CSV"
    assert CsvFileWrapper(path).filepath == path
