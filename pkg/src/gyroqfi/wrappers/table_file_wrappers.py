# -*- coding: utf-8 -*-
"""Table File Wrappers.

Delimited numeric tables: comma-separated `.csv` files with a header row
and whitespace-separated `.dat` files whose header is a ``#`` comment.

"""

# Standard Library Imports
from __future__ import annotations
import csv
import os
import typing

# Local Imports
from .abstract_file_wrappers import AbstractFileWrapper
from .abstract_file_wrappers import AbstractIOWrapper
from .. import settings

__all__ = ["CsvFileWrapper", "DatFileWrapper", "TableIOWrapper"]


class CsvFileWrapper(AbstractFileWrapper):
    """Implements a wrapper for `.csv` files.

    Args:
        filepath: Path to `.csv` file.
        delimiter (optional): Delimiter. Default `,`.
        fieldnames (optional): Fieldnames. Default ``None``.
        read_only (optional): Whether file is read only. Default ``False``.

    """

    comment_header = False

    def __init__(
        self,
        filepath: os.PathLike,
        *,
        delimiter: str = settings.DEFAULT_CSV_DELIMITER,
        fieldnames: typing.Optional[typing.Sequence[str]] = None,
        read_only: bool = False,
    ) -> None:
        super().__init__(
            filepath,
            newline=settings.DEFAULT_CSV_NEWLINE,
            read_only=read_only,
        )
        if not isinstance(delimiter, str):
            message = f"expected type 'str', got {type(delimiter)} instead"
            raise TypeError(message)

        self._delimiter = delimiter
        self._fieldnames = list(fieldnames) if fieldnames else None

    @property
    def extension(self) -> str:
        """File extension."""
        return settings.CSV_EXTENSION

    @property
    def delimiter(self) -> str:
        """Delimiter."""
        return self._delimiter

    @property
    def fieldnames(self) -> typing.Optional[typing.List[str]]:
        """Fieldnames."""
        return self._fieldnames

    def open(self, mode: str = "r") -> TableIOWrapper:
        """Open the file and return a table I/O wrapper.

        Args:
            mode (optional): Mode. Default ``r``.

        Returns:
            File object.

        """
        result = TableIOWrapper(self._open_file(mode), context=self)
        return result


class DatFileWrapper(CsvFileWrapper):
    """Implements a wrapper for whitespace-separated `.dat` files.

    Args:
        filepath: Path to `.dat` file.
        fieldnames (optional): Fieldnames. Default ``None``.
        read_only (optional): Whether file is read only. Default ``False``.

    """

    comment_header = True

    def __init__(
        self,
        filepath: os.PathLike,
        *,
        fieldnames: typing.Optional[typing.Sequence[str]] = None,
        read_only: bool = False,
    ) -> None:
        super().__init__(
            filepath,
            delimiter=settings.DEFAULT_DAT_DELIMITER,
            fieldnames=fieldnames,
            read_only=read_only,
        )

    @property
    def extension(self) -> str:
        """File extension."""
        return settings.DAT_EXTENSION


class TableIOWrapper(AbstractIOWrapper):
    """Implements an I/O wrapper for delimited tables.

    Args:
        __file: File.
        context: Wrapper that opened the file.

    """

    def __init__(self, __file: typing.IO, /, context: CsvFileWrapper) -> None:
        super().__init__(__file)
        self._context = context
        self._fieldnames = context.fieldnames

    @property
    def fieldnames(self) -> typing.Optional[typing.List[str]]:
        """Fieldnames."""
        return self._fieldnames

    @fieldnames.setter
    def fieldnames(self, value: typing.Sequence[str]) -> None:
        if not isinstance(value, typing.Sequence):
            message = f"expected type 'Sequence', got {type(value)} instead"
            raise TypeError(message)

        self._fieldnames = list(value)

    def _writer(self):
        result = csv.writer(
            self._file,
            dialect=settings.DEFAULT_CSV_DIALECT,
            delimiter=self._context.delimiter,
            quotechar=settings.DEFAULT_CSV_QUOTECHAR,
            lineterminator="\n",
        )
        return result

    def write_header(self) -> None:
        """Write the header row.

        Raises:
            RuntimeError: when `fieldnames` is empty.

        """
        if not self._fieldnames:
            raise RuntimeError("'fieldnames' is empty")

        if self._context.comment_header:
            delimiter = self._context.delimiter
            self._file.write("# " + delimiter.join(self._fieldnames) + "\n")
        else:
            self._writer().writerow(self._fieldnames)

    def write_rows(self, rows: typing.Iterable[typing.Iterable], /) -> None:
        """Write rows."""
        self._writer().writerows(rows)

    def write_records(self, records: typing.Iterable[dict], /) -> None:
        """Write records keyed by fieldname."""
        names = self._fieldnames or []
        rows = [[record[name] for name in names] for record in records]
        self.write_rows(rows)

    def read_rows(self) -> typing.List[typing.List[str]]:
        """Read every data row; the header populates `fieldnames`."""
        lines = self._file.read().splitlines()
        if self._context.comment_header:
            header = [line for line in lines if line.startswith("#")]
            body = [
                line for line in lines if line and not line.startswith("#")
            ]
            if header:
                self.fieldnames = header[0].lstrip("# ").split()
            return [line.split() for line in body]

        rows = list(csv.reader(lines, delimiter=self._context.delimiter))
        if rows:
            self.fieldnames = rows[0]
        return rows[1:]

    def read_records(self) -> typing.List[dict]:
        """Read rows as records keyed by fieldname."""
        rows = self.read_rows()
        results = [dict(zip(self._fieldnames, row)) for row in rows]
        return results
