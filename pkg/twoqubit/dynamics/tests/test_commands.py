# Django
from django.core.management import call_command
from django.core.management.base import CommandError

# Standard Library
import json
from io import StringIO

# Third Party
import pytest

# TwoQubit
from twoqubit.core.utils import read_csv
from twoqubit.states.trajectory import read_trajectory


@pytest.mark.parametrize(
    "model, values, category",
    [
        ("d3", {"gamma": "1", "g": "0.5", "B0": "1"}, "A"),
        ("zj", {"r": "0.5", "g": "0.1", "gamma": "0.5", "B0": "0.1", "Gamma1": "0"}, "E"),
        ("ye", {"a0": "0.5"}, "E"),
    ],
)
def test_trajectory_category(tmp_path, model, values, category):
    stem = tmp_path / model
    stdout = StringIO()
    call_command("trajectory", model, samples=400, output=str(stem), stdout=stdout, **values)
    summary = json.loads((tmp_path / f"{model}.json").read_text())
    assert summary["category"] == category
    assert summary["model"] == model
    assert summary["semigroup"]["claimed"] is (model == "ye")
    assert summary["semigroup"]["holds"] or model != "ye"
    assert stdout.getvalue().strip() == f"{model}: category {category}"
    trajectory = read_trajectory(tmp_path / f"{model}.csv")
    assert len(trajectory) == summary["samples"]
    assert trajectory.states is not None


def test_trajectory_rejects_foreign_parameters():
    with pytest.raises(CommandError) as excinfo:
        call_command("trajectory", "ye", a0="0.2", g="0.5", output=None, stdout=StringIO())
    assert excinfo.value.returncode == 64


def test_trajectory_unknown_model():
    with pytest.raises(CommandError) as excinfo:
        call_command("trajectory", "d8", stdout=StringIO())
    assert excinfo.value.returncode == 64


def test_subspace_section_of_a_plane(tmp_path):
    stdout = StringIO()
    call_command("subspace_section", "ye-iz0", samples=41, output=str(tmp_path / "cut"), stdout=stdout)
    summary = json.loads((tmp_path / "cut.json").read_text())
    assert summary["axes"] == ["XX", "ZZ"]
    assert summary["zero"] == "IZ"
    assert set(summary["curves"]) == {"a2", "a3", "a4"}
    assert len(summary["curves"]["a3"]) == 2
    assert len(summary["curves"]["a2"][0]) == 41
    assert 0 < summary["entangled"] < summary["physical"]
    header, rows = read_csv(tmp_path / "cut.csv")
    assert header == ["n_XX", "n_ZZ", "a2", "a3", "a4", "physical", "concurrence"]
    assert len(rows) == 41 ** 2
    assert all(row[6] == "" for row in rows if row[5] == "false")
    assert stdout.getvalue().startswith("ye-iz0: ")


def test_subspace_section_of_the_tetrahedron(tmp_path):
    call_command(
        "subspace_section", "ye", samples=21, format="json", output=str(tmp_path / "ye"), stdout=StringIO()
    )
    summary = json.loads((tmp_path / "ye.json").read_text())
    assert summary["outline"]["vertices"] == [[0, -1, -1], [0, 1, -1], [-1, 0, 1], [1, 0, 1]]
    assert len(summary["outline"]["edges"]) == 6
    assert "curves" not in summary
    assert summary["data"]["header"][:3] == ["n_IZ", "n_XX", "n_ZZ"]
    assert len(summary["data"]["rows"]) == 21 ** 3
    assert not (tmp_path / "ye.csv").exists()


def test_subspace_section_unknown_cut():
    with pytest.raises(CommandError) as excinfo:
        call_command("subspace_section", "d3-xx0", stdout=StringIO())
    assert excinfo.value.returncode == 64
