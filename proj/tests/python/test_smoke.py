"""Smoke tests for the python module against the worked golden values."""

import json
import math
from fractions import Fraction

import pytest

import negtype

CYCLE = (
    ["x", "v2", "v3", "v4", "v5"],
    [("x", "v2", 1), ("v2", "v3", 1), ("v3", "v4", 1), ("v4", "v5", 1), ("v5", "x", 1)],
)
STAR = (
    ["v9", "v6", "v7", "v8"],
    [("v9", "v6", 1), ("v6", "v7", 1), ("v6", "v8", 1)],
)
G_EDGES = CYCLE[1] + [("x", "v6", 1), ("v6", "v7", 1), ("v6", "v8", 1)]

PLAN = {
    "p": 1,
    "components": [
        {
            "name": "cycle",
            "space": {"graph": {"vertices": CYCLE[0], "edges": [list(e) for e in CYCLE[1]]}},
        },
        {
            "name": "star",
            "space": {"graph": {"vertices": STAR[0], "edges": [list(e) for e in STAR[1]]}},
        },
    ],
    "steps": [["cycle", "x", "star", "v9"]],
}


def g_space():
    return negtype.Space.from_graph(["x", "v2", "v3", "v4", "v5", "v6", "v7", "v8"], G_EDGES)


def test_space_basics():
    s = g_space()
    assert s.size == 8
    assert s.is_metric
    assert s.distance("v3", "v7") == Fraction(4)
    assert s.diameter() == Fraction(4)
    assert s.min_distance() == Fraction(1)


def test_edge_gap_is_length():
    s = negtype.Space.from_matrix(["a", "b"], [[0, "7/2"], ["7/2", 0]])
    r = negtype.gap(s, 1.0)
    assert r["gap_exact"] == Fraction(7, 2)


def test_cycle_gap():
    s = negtype.Space.from_graph(*CYCLE)
    r = negtype.gap(s, 1.0)
    assert r["gap_exact"] == Fraction(5, 28)
    assert r["negative_type_holds"]


def test_tree_gap_star():
    assert negtype.tree_gap(*STAR) == Fraction(1, 3)


def test_compose_gaps():
    assert negtype.compose_gaps([Fraction(5, 28), Fraction(1, 3)]) == Fraction(5, 43)
    assert negtype.compose_gaps(["5/28", "1/3"]) == Fraction(5, 43)


def test_gap_of_g():
    r = negtype.gap(g_space(), 1.0)
    assert r["gap_exact"] == Fraction(5, 43)


def test_check_and_supremal():
    s = g_space()
    assert negtype.check(s, 1.0)["has_negative_type"]
    assert not negtype.check(s, 2.0)["has_negative_type"]
    assert abs(negtype.supremal(s) - 1.36) < 0.01

    edge = negtype.Space.from_matrix(["a", "b"], [[0, 1], [1, 0]])
    assert math.isinf(negtype.supremal(edge))


def test_gamma_exact_and_refine():
    s = g_space()
    a = [("x", "21/43"), ("v3", "6/43"), ("v4", "6/43"), ("v7", "5/43"), ("v8", "5/43")]
    b = [("v2", "14/43"), ("v5", "14/43"), ("v6", "15/43")]
    assert negtype.gamma(s, a, b, 1) == Fraction(5, 43)

    r = negtype.refine(s, [("x", 1), ("x", 1)], [("v2", 2)])
    assert r["weight"] == Fraction(2)
    assert negtype.equivalent(s, [("x", 1)], [("v2", 1)], [("v2", 1)], [("x", 1)])


def test_combine_plan():
    report = negtype.combine(json.dumps(PLAN))
    assert report["points"] == 8
    assert report["composed_gap_exact"] == "5/43"
    assert report["glue_points"] == ["x"]
    assert report["extremal"]["gamma"]["exact"] == "5/43"
    matrix_space = negtype.Space.from_json(json.dumps(report["space"]))
    assert matrix_space.distance("v3", "v7") == Fraction(4)


def test_bound_report():
    report = negtype.bound(json.dumps(PLAN), 1.0)
    assert report["combined"]["applicable"]
    assert abs(report["combined"]["lower_bound"] - 1.0274) < 1e-3
    assert report["direct_on_built"]["applicable"]


def test_power_transform():
    s = negtype.Space.from_graph(["a", "b", "c"], [("a", "b", 1), ("b", "c", 1)])
    squared = s.power(2)
    assert squared.distance("a", "c") == Fraction(4)
    assert not squared.is_metric


def test_validation_errors():
    with pytest.raises(ValueError):
        negtype.Space.from_matrix(["a", "b"], [[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        negtype.compose_gaps([0])
