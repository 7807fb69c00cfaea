# Django
from django.core.management import call_command

# Standard Library
import json
from io import StringIO

# Third Party
import numpy as np
import pytest

# TwoQubit
from twoqubit.core.utils import provenance, write_csv
from twoqubit.dynamics.registry import build_trajectory
from twoqubit.states.trajectory import write_trajectory


def test_classify_constant_concurrence(tmp_path):
    path = tmp_path / "constant.csv"
    write_csv(path, ["t", "C"], ([t, 0.5] for t in np.linspace(0, 10, 20)), provenance("test"))
    stdout = StringIO()
    call_command("classify", str(path), output=str(tmp_path / "classified"), stdout=stdout)
    assert stdout.getvalue().strip() == "category A (horizon undecided)"
    summary = json.loads((tmp_path / "classified.json").read_text())
    assert summary["samples"] == 20
    assert summary["category"] == "A"
    assert summary["horizon_undecided"] is True
    assert summary["distance_markovian"] is None


def test_classify_model_trajectory(tmp_path):
    _, trajectory, _ = build_trajectory("ye", {"a0": 0.5}, samples=400)
    path = tmp_path / "ye.csv"
    write_trajectory(path, trajectory, provenance("test"))
    stdout = StringIO()
    call_command(
        "classify", str(path), subspace="ye", output=str(tmp_path / "classified"), stdout=stdout
    )
    assert stdout.getvalue().strip() == "category E"
    summary = json.loads((tmp_path / "classified.json").read_text())
    assert summary["category"] == "E"
    assert summary["distance_markovian"] is True
    assert "E" in summary["prediction"]["allowed"]
    assert summary["subspace"]["location"] == "BoundaryS"
    with open(tmp_path / "classified.csv", encoding="utf-8") as infile:
        rows = [line.strip() for line in infile if not line.startswith("#")]
    assert rows[0] == "start,end,point"
    assert rows[1].endswith(",false")


@pytest.mark.slow
def test_critical(tmp_path):
    stdout = StringIO()
    call_command(
        "critical",
        "ye",
        "a0",
        "0.1",
        "0.9",
        steps=5,
        samples=300,
        output=str(tmp_path / "critical"),
        stdout=stdout,
    )
    summary = json.loads((tmp_path / "critical.json").read_text())
    assert summary["critical_values"][0] == pytest.approx(1 / 3, abs=1e-6)
    assert stdout.getvalue().startswith("critical a0: 0.33333")
