# Django
from django.core.management import call_command
from django.core.management.base import CommandError

# Standard Library
import json
from io import StringIO

# Third Party
import numpy as np
import pytest

# TwoQubit
from twoqubit.core.utils import provenance
from twoqubit.states.io import write_state

# Local
from .factories import bell_phi_plus, werner_psi


def test_concurrence_of_vector(tmp_path):
    args = ["--n", *map(str, werner_psi(0.6))]
    call_command("concurrence", *args, output=str(tmp_path / "werner"), stdout=StringIO())
    summary = json.loads((tmp_path / "werner.json").read_text())
    assert summary["C"] == pytest.approx(0.4)
    assert not summary["separable"]
    assert not (tmp_path / "werner.csv").exists()


def test_concurrence_of_state_file(tmp_path):
    path = tmp_path / "bell.json"
    write_state(path, bell_phi_plus(), provenance("test"))
    stdout = StringIO()
    call_command("concurrence", state=str(path), stdout=stdout)
    assert float(stdout.getvalue().split("=")[1]) == pytest.approx(1)


def test_concurrence_of_product_angles():
    stdout = StringIO()
    call_command("concurrence", "--angles", "0", "0", "0", "0", "0", "0", stdout=stdout)
    assert float(stdout.getvalue().split("=")[1]) == pytest.approx(0, abs=1e-9)


def test_concurrence_needs_a_state():
    with pytest.raises(CommandError) as excinfo:
        call_command("concurrence", stdout=StringIO())
    assert excinfo.value.returncode == 64


def test_unphysical_state():
    with pytest.raises(CommandError) as excinfo:
        call_command("concurrence", "--n", *map(str, 2 * np.ones(15)), stdout=StringIO())
    assert excinfo.value.returncode == 64
