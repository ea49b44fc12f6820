"""Smoke tests for spancomplete."""

import pandas as pd

from spancomplete.acyclic import fill_configuration
from spancomplete.datasets import (
    load_database_fill,
    load_pushout_span,
    load_walking_arrow,
)
from spancomplete.instances import provider
from spancomplete.oracle import sweep_pushouts
from spancomplete.reports import classifier_table, summarise_sweep
from spancomplete.schema import CategoryModel, FillRequest, SpanModel
from spancomplete.squares import compute_pushout, has_pushout
from spancomplete.sset import classify, nerve


def test_category_loads_and_classifies():
    """Smoke test that a fixture category becomes a classified nerve."""
    # Load the raw category and let Pydantic validate it.
    raw = load_walking_arrow()
    category = CategoryModel.model_validate(raw).to_domain()

    # A low truncation keeps the horn searches small.
    results = classify(nerve(category, 2))

    # Every classifier reports, and the table has one row per verdict.
    assert results
    table = classifier_table(results)
    assert isinstance(table, pd.DataFrame)
    assert len(table) == len(results)


def test_fixture_span_has_pushout():
    """Smoke test that the bundled span completes to a pushout."""
    span = SpanModel.model_validate(load_pushout_span()).to_domain()

    assert has_pushout(span)
    square = compute_pushout(span)

    # The square starts from the span we gave it.
    assert (square.f, square.g) == (span.f, span.g)


def test_database_request_fills():
    """Smoke test that a fill request runs end to end."""
    request = FillRequest.model_validate(load_database_fill())

    filled = fill_configuration(
        provider(request.provider),
        request.configuration.to_domain(),
        request.simplices(),
    )

    # A joined table comes back with rows in it.
    assert filled.rows


def test_tiny_sweep_summarises():
    """Smoke test that a small sweep runs and summarises."""
    # Single job and the smallest sizes to keep tests fast.
    results = sweep_pushouts(max_size=1, n_jobs=1)

    assert isinstance(results, pd.DataFrame)
    assert not results.empty

    summary = summarise_sweep(results, ["has_pushout", "oracle"])
    assert not summary.empty
    assert summary["disagreements"].sum() == 0
