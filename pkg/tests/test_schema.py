"""Tests for schema module."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from spancomplete.datasets import load_no_pushout_span, load_pushout_span
from spancomplete.delta import MonotoneMap, generating_coface, identity
from spancomplete.exceptions import InvalidCategory
from spancomplete.instances import Distribution, Pseudometric, Table

# functions to test
from spancomplete.schema import (
    CategoryModel,
    DistributionModel,
    FillRequest,
    GridModel,
    MapModel,
    SpanModel,
    SSetModel,
    TableModel,
    dump_distribution,
    dump_map,
    dump_metric,
    dump_sset,
    dump_table,
)
from spancomplete.sset import discrete_sset

# -----------------------------------------------------------------------------
# 1. Tests for map and diagram models
# -----------------------------------------------------------------------------


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        ({"dom": 1, "cod": 2, "values": [0, 2]}, MonotoneMap(1, 2, (0, 2))),
        ({"id": 2}, identity(2)),
        ({"d": [2, 1]}, generating_coface(2, 1)),
        ({"s": [1, 0]}, MonotoneMap(2, 1, (0, 0, 1))),
    ],
)
def test_map_model_forms(raw, expected):
    """Test the dense form and the three shorthands."""
    assert MapModel.model_validate(raw).to_domain() == expected


@pytest.mark.parametrize(
    "raw",
    [
        {"id": 1, "d": [2, 0]},
        {},
        {"values": [0, 1]},
        {"d": [2]},
    ],
)
def test_map_model_rejects_bad_forms(raw):
    """Test zero or two forms, missing ordinals and short shorthands."""
    with pytest.raises(ValidationError):
        MapModel.model_validate(raw)


def test_span_model_reads_fixtures():
    """Test both bundled spans read as coface spans out of [1]."""
    span = SpanModel.model_validate(load_pushout_span()).to_domain()
    assert (span.m, span.p, span.q) == (1, 2, 2)
    blocked = SpanModel.model_validate(load_no_pushout_span()).to_domain()
    assert blocked.f == blocked.g
    assert dump_map(span.f) == {"dom": 1, "cod": 2, "values": [1, 2]}


def test_grid_model_nested_cells():
    """Test a grid cell may itself be a grid."""
    cell = {
        "f": {"d": [1, 0]},
        "g": {"d": [1, 0]},
        "h": {"d": [2, 1]},
        "k": {"d": [2, 0]},
    }
    raw = {
        "rows": 1,
        "cols": 1,
        "cells": [[{"rows": 1, "cols": 1, "cells": [[cell]]}]],
    }
    grid = GridModel.model_validate(raw).to_domain()
    assert len(list(grid.leaves())) == 1


# -----------------------------------------------------------------------------
# 2. Tests for simplicial set and category models
# -----------------------------------------------------------------------------


def test_sset_model_reads_dump():
    """Test a dumped simplicial set validates back to itself."""
    sset = discrete_sset(["p"], 1)
    raw = dump_sset(sset)
    assert raw["faces"] == {"1,0": {"p": "p"}, "1,1": {"p": "p"}}
    assert SSetModel.model_validate(raw).to_domain() == sset


def test_category_model_checks_shapes():
    """Test arrows need two endpoints and entries three names."""
    with pytest.raises(ValidationError):
        CategoryModel.model_validate(
            {"objects": ["0"], "arrows": {"e": ["0"]}, "identities": {}}
        )


def test_category_model_reports_invalid_category():
    """Test a wrong composite reaches the domain check."""
    raw = {
        "objects": ["*"],
        "arrows": {"e": ["*", "*"], "t": ["*", "*"]},
        "identities": {"*": "e"},
        "composition": [["t", "t", "t"], ["e", "t", "e"]],
    }
    with pytest.raises(InvalidCategory):
        CategoryModel.model_validate(raw).to_domain()


# -----------------------------------------------------------------------------
# 3. Tests for instance models and fill requests
# -----------------------------------------------------------------------------


def test_table_model_needs_arity_when_empty():
    """Test an empty table must state its arity."""
    empty = TableModel.model_validate({"values": [0], "rows": [], "arity": 2})
    assert empty.to_domain() == Table(2, (0,), frozenset())
    with pytest.raises(ValueError, match="explicit arity"):
        TableModel.model_validate({"values": [0], "rows": []}).to_domain()


def test_dump_table_sorts_rows():
    """Test dumped rows are sorted."""
    table = Table(1, ("a", "b"), {("b",), ("a",)})
    assert dump_table(table) == {
        "arity": 1,
        "values": ["a", "b"],
        "rows": [["a"], ["b"]],
    }


def test_metric_dump_keeps_rationals():
    """Test distances travel as exact fraction strings."""
    metric = Pseudometric(((0, Fraction(1, 3)), (Fraction(1, 3), 0)))
    assert dump_metric(metric)["dist"] == [["0", "1/3"], ["1/3", "0"]]


def test_distribution_model_reads_outcome_keys():
    """Test outcome keys are split on commas and read by value name."""
    raw = {"values": [0, 1], "arity": 2, "prob": {"0,1": "1/4", "1,1": "3/4"}}
    dist = DistributionModel.model_validate(raw).to_domain()
    assert dist == Distribution(
        2, (0, 1), {(0, 1): Fraction(1, 4), (1, 1): Fraction(3, 4)}
    )
    assert dump_distribution(dist)["prob"] == {"0,1": "1/4", "1,1": "3/4"}


def test_distribution_model_rejects_unknown_values():
    """Test an outcome naming a value outside the alphabet."""
    raw = {"values": [0, 1], "arity": 1, "prob": {"2": 1}}
    with pytest.raises(ValueError, match="outside"):
        DistributionModel.model_validate(raw).to_domain()


def test_fill_request_requires_sset_for_sset_provider():
    """Test the sset provider needs a simplicial set and others refuse it."""
    configuration = {"ground": 2, "facets": [[0, 1]], "directed": True}
    with pytest.raises(ValidationError):
        FillRequest.model_validate(
            {"provider": "sset", "complex": configuration, "assignment": []}
        )


def test_fill_request_reads_metric_symmetry():
    """Test the request symmetry flag reaches every metric."""
    raw = {
        "provider": "metric",
        "complex": {"ground": 2, "facets": [[0, 1]], "directed": True},
        "assignment": [
            {"facet": [0, 1], "simplex": {"dist": [[0, 1], [2, 0]]}}
        ],
        "symmetric": False,
    }
    simplices = FillRequest.model_validate(raw).simplices()
    metric = simplices[frozenset({0, 1})]
    assert not metric.symmetric
    assert metric(1, 0) == 2
