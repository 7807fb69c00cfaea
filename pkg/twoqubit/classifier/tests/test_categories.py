# Third Party
import numpy as np
import pytest

# TwoQubit
from twoqubit.dynamics.registry import build_trajectory
from twoqubit.dynamics.subspace import NInfinityLocation, SubspaceMeta, subspace_meta

# Local
from ..categories import (
    CATEGORY_TABLE,
    A,
    B,
    E,
    EvolutionCategory,
    O,
    categorize,
    classify,
    predict_categories,
)
from ..zeroset import ZeroInterval, ZeroSet


def zeros_of(*intervals, tail_is_zero=False):
    return ZeroSet(
        intervals=tuple(
            ZeroInterval(start, end, start == end, index, index) for index, (start, end) in enumerate(intervals)
        ),
        horizon=10.0,
        tail_is_zero=tail_is_zero,
    )


@pytest.mark.parametrize(
    "zeros, category",
    [
        (zeros_of(), A),
        (zeros_of((1.0, 1.0), (3.0, 3.0)), B),
        (zeros_of((4.0, 10.0), tail_is_zero=True), E),
        (zeros_of((1.0, 2.0), (4.0, 10.0), tail_is_zero=True), O),
        (zeros_of((1.0, 1.0), (4.0, 10.0), tail_is_zero=True), O),
        (zeros_of((1.0, 2.0)), O),
    ],
)
def test_categorize(zeros, category):
    assert categorize(zeros) is category


def test_labels():
    assert EvolutionCategory("E").label == "Entering"
    assert [category.value for category in EvolutionCategory] == ["A", "B", "E", "O"]


@pytest.mark.parametrize(
    "location, dim_cap, markovian, allowed",
    [
        (NInfinityLocation.BOUNDARY_S, 1, True, {A}),
        (NInfinityLocation.BOUNDARY_S, 1, False, {B}),
        (NInfinityLocation.BOUNDARY_S, 3, True, {A, E}),
        (NInfinityLocation.BOUNDARY_S, 3, False, {B, O}),
        (NInfinityLocation.INTERIOR_S, 3, True, {E}),
        (NInfinityLocation.INTERIOR_S, 3, False, {O}),
        (NInfinityLocation.INTERIOR_S, 2, True, {A}),
    ],
)
def test_predict_categories(location, dim_cap, markovian, allowed):
    meta = SubspaceMeta(3, dim_cap, None, location)
    prediction = predict_categories(meta, markovian)
    assert prediction.allowed == allowed
    assert prediction.cell == CATEGORY_TABLE[location, dim_cap == 3]
    assert not prediction.warning
    assert all(category in prediction for category in allowed)


def test_prediction_without_typical_category(mocker):
    mocker.patch.dict(CATEGORY_TABLE, {(NInfinityLocation.INTERIOR_S, True): frozenset({E})})
    prediction = predict_categories(SubspaceMeta(3, 3, None, NInfinityLocation.INTERIOR_S), False)
    assert prediction.warning
    assert prediction.allowed == prediction.cell == {E}
    assert prediction.as_dict() == {"allowed": ["E"], "cell": ["E"], "warning": True}


@pytest.mark.parametrize(
    "model, values, category, markovian",
    [
        ("d3", {"gamma": 1.0, "g": 0.5, "B0": 1.0}, A, True),
        ("d3", {"gamma": 0.1, "g": 0.5, "B0": 1.0}, B, False),
        ("ye", {"a0": 0.2}, A, True),
        ("ye", {"a0": 0.5}, E, True),
        ("zj", {"r": 0.5, "g": 0.1, "gamma": 0.5, "B0": 0.1, "Gamma1": 0.0}, E, True),
        ("zj", {"r": 0.5, "g": 0.1, "gamma": 0.01, "B0": 0.1, "Gamma1": 0.0}, O, False),
    ],
)
def test_model_categories(model, values, category, markovian):
    _, trajectory, meta = build_trajectory(model, values)
    classification = classify(trajectory, meta)
    assert classification.category is category
    assert classification.distance_markovian is markovian
    assert category in classification.prediction
    assert classification.consistent
    assert not classification.zeros.horizon_undecided


def test_pure_dephasing_of_bell_state_bounces():
    """r = 1 without relaxation puts n_inf on the boundary, zeros are isolated"""
    _, trajectory, meta = build_trajectory("zj", {"r": 1.0, "g": 0.5, "gamma": 0.1})
    classification = classify(trajectory, meta)
    assert classification.category is B
    assert meta.location is NInfinityLocation.BOUNDARY_S


def test_classify_without_states(trajectory):
    classification = classify(trajectory, subspace_meta("ye"))
    assert classification.category is A
    assert classification.distance_markovian is None
    assert classification.prediction is None
    assert classification.consistent is None
    data = classification.as_dict()
    assert data["category"] == "A"
    assert data["subspace"]["dim_D"] == 3


@pytest.mark.slow
def test_random_parameters_stay_in_their_cell():
    rng = np.random.default_rng(20111)
    draws = []
    for _ in range(70):
        a0 = rng.choice([rng.uniform(0.05, 0.3), rng.uniform(0.37, 0.95)])
        draws.append(("ye", {"a0": a0, "Gamma": rng.uniform(0.2, 2)}))
        gamma = rng.uniform(0.1, 1.0)
        g = rng.choice([rng.uniform(0.0, gamma - 0.05), gamma + rng.uniform(0.1, 1.0)])
        draws.append(("d3", {"gamma": gamma, "g": max(g, 0.0), "B0": rng.uniform(0, 2)}))
        draws.append(
            (
                "zj",
                {
                    "r": rng.uniform(0.4, 0.9),
                    "gamma": gamma,
                    "g": max(g, 0.0),
                    "B0": rng.uniform(0, 2),
                    "Gamma1": rng.choice([0.0, rng.uniform(0.05, 0.5)]),
                },
            )
        )
    assert len(draws) >= 200
    for model, values in draws:
        _, trajectory, meta = build_trajectory(model, values)
        classification = classify(trajectory, meta)
        assert classification.category in classification.prediction.cell, (model, values)
        assert classification.consistent, (model, values)
        # non-Markovian runs are only bound by the cell
        if classification.distance_markovian:
            assert classification.category in classification.prediction, (model, values)
