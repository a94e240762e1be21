# -*- coding: utf-8 -*-

# pylint: disable=missing-function-docstring

# Standard Library Imports
import json
import pathlib

# Third-Party Imports
import pytest

# Local Imports
from gyroqfi import settings
from gyroqfi.messages import OutputWritten
from gyroqfi.messages import RunCompleted
from gyroqfi.units_of_work import OutputUnitOfWork
from gyroqfi.units_of_work import git_revision


def test_raises_error_for_non_boolean_auto_commit(
    output_dir: pathlib.Path,
) -> None:
    with pytest.raises(TypeError, match="expected type 'bool'"):
        OutputUnitOfWork(output_dir, auto_commit="yes")


def test_raises_error_for_curve_with_three_columns(
    output_dir: pathlib.Path,
) -> None:
    uow = OutputUnitOfWork(output_dir)
    with pytest.raises(ValueError, match="curves have 2 columns"):
        uow.add_curve("curve", ["a", "b", "c"], [])


def test_commit_writes_outputs_and_manifest(
    output_dir: pathlib.Path,
) -> None:
    with OutputUnitOfWork(output_dir) as uow:
        uow.begin({"command": "simulate", "seed": 0})
        uow.add_table("qfi", ["t", "qfi"], [[0.0, 1.0]])
        uow.add_curve("qfi", ["t", "qfi"], [[0.0, 1.0]])
        uow.record(slope=2.0)
        uow.commit()

    manifest_path = output_dir / settings.MANIFEST_FILENAME
    manifest = json.loads(manifest_path.read_text())
    assert manifest["command"] == "simulate"
    assert manifest["outputs"] == ["qfi.csv", "qfi.dat"]
    assert manifest["results"] == {"slope": 2.0}
    assert manifest["wall_time_s"] >= 0.0
    assert "git_revision" in manifest


def test_commit_raises_events(output_dir: pathlib.Path) -> None:
    uow = OutputUnitOfWork(output_dir)
    uow.begin({"command": "sweep"})
    uow.add_document("summary", {"best": 0.5})
    uow.commit()

    events = list(uow.collect_events())
    written = [e for e in events if isinstance(e, OutputWritten)]
    assert [e.path.name for e in written] == [
        "summary.json",
        settings.MANIFEST_FILENAME,
    ]
    assert isinstance(events[-1], RunCompleted)
    assert events[-1].command == "sweep"
    assert not list(uow.collect_events())


def test_auto_commit_on_clean_exit(output_dir: pathlib.Path) -> None:
    with OutputUnitOfWork(output_dir, auto_commit=True) as uow:
        uow.add_document("summary", {})

    assert (output_dir / "summary.json").is_file()


def test_rolls_back_on_error(output_dir: pathlib.Path) -> None:
    with pytest.raises(RuntimeError, match="boom"):
        with OutputUnitOfWork(output_dir, auto_commit=True) as uow:
            uow.add_document("summary", {})
            raise RuntimeError("boom")

    assert not output_dir.exists()
    assert not uow.artifacts.list()


def test_git_revision_outside_repository(tempdir: str) -> None:
    revision = git_revision(tempdir)
    assert revision == "unknown" or len(revision) == 40
