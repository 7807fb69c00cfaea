# Standard Library
import enum

# Third Party
import numpy as np

# TwoQubit
import twoqubit
from twoqubit.core.utils import (
    format_cell,
    format_float,
    jsonable,
    output_path,
    provenance,
    provenance_lines,
    read_csv,
    read_json,
    write_csv,
    write_json,
)


class Color(enum.Enum):
    RED = "red"


def test_output_path():
    assert output_path("data/run", "csv") == "data/run.csv"


def test_format_float_round_trips():
    value = 0.1 + 0.2
    assert float(format_float(value)) == value
    assert format_float(float("nan")) == "nan"
    assert format_float(1) == "1"


def test_format_cell():
    assert format_cell(None) == ""
    assert format_cell(True) == "true"
    assert format_cell(np.bool_(False)) == "false"
    assert format_cell(np.float64(0.5)) == "0.5"
    assert format_cell(Color.RED) == "red"
    assert format_cell("S") == "S"
    assert format_cell(3) == "3"


def test_provenance():
    info = provenance("volumes --seed 7", seed=7, tolerances={"tol_c": 1e-9, "tol": 1e-10})
    assert info["version"] == twoqubit.__version__
    assert list(info["tolerances"]) == ["tol", "tol_c"]
    lines = provenance_lines(info)
    assert lines[1] == "# command: volumes --seed 7"
    assert lines[2] == "# seed: 7"
    assert lines[3] == "# tolerances: tol=1e-10 tol_c=1.0000000000000001e-09"
    assert all(line.startswith("# ") for line in lines)


def test_csv_skips_provenance(tmp_path):
    path = tmp_path / "out.csv"
    info = provenance("test")
    write_csv(path, ["a", "b"], [[1, 0.25], [2, None]], info)
    text = path.read_text()
    assert text.startswith("# twoqubit")
    header, rows = read_csv(path)
    assert header == ["a", "b"]
    assert rows == [["1", "0.25"], ["2", ""]]


def test_read_csv_empty(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("# only a comment\n")
    assert read_csv(path) == ([], [])


def test_jsonable():
    value = {
        1: np.arange(2),
        "set": frozenset({"B", "A"}),
        "enum": Color.RED,
        "flag": np.bool_(True),
        "nan": float("nan"),
        "tuple": (np.int64(3), np.float32(0.5)),
    }
    assert jsonable(value) == {
        "1": [0, 1],
        "set": ["A", "B"],
        "enum": "red",
        "flag": True,
        "nan": None,
        "tuple": [3, 0.5],
    }


def test_json_adds_provenance(tmp_path):
    path = tmp_path / "out.json"
    write_json(path, {"value": np.float64(2.0)}, provenance("test", seed=3))
    document = read_json(path)
    assert document["value"] == 2.0
    assert document["provenance"]["seed"] == 3
