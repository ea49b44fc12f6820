"""Load the bundled example categories, complexes, spans and fill requests."""

import json
from os import PathLike
from pathlib import Path
from typing import Any

FIXTURES_DIR = Path(__file__).parent / "fixtures"
WALKING_ARROW = "walking_arrow.json"
CYCLIC_GROUP2 = "cyclic_group2.json"
CHAIN3 = "chain3.json"
SPINE4 = "spine4.json"
FAN_TRIANGULATION = "fan_triangulation.json"
HOLLOW_TRIANGLE = "hollow_triangle.json"
PUSHOUT_SPAN = "pushout_span.json"
NO_PUSHOUT_SPAN = "no_pushout_span.json"
DATABASE_FILL = "database_fill.json"
METRIC_FILL = "metric_fill.json"


def load_fixture_file(file_path: str | PathLike[str]) -> dict[str, Any]:
    """Load a fixture from a JSON file.

    Parameters
    ----------
    file_path : str | PathLike[str]
        Path to the JSON file.

    Returns
    -------
    dict[str, Any]
        Parsed JSON fixture.

    """
    with Path.open(file_path) as file:
        return json.load(file)


def load_walking_arrow() -> dict[str, Any]:
    """Load the category with two objects and one non-identity arrow.

    Returns
    -------
    dict[str, Any]
        Category in the shape read by `CategoryModel`.

    """
    return load_fixture_file(FIXTURES_DIR / WALKING_ARROW)


def load_cyclic_group2() -> dict[str, Any]:
    """Load the cyclic group of order two as a one-object category.

    Returns
    -------
    dict[str, Any]
        Category in the shape read by `CategoryModel`.

    """
    return load_fixture_file(FIXTURES_DIR / CYCLIC_GROUP2)


def load_chain3() -> dict[str, Any]:
    """Load the poset ``0 < 1 < 2`` as a category.

    Returns
    -------
    dict[str, Any]
        Category in the shape read by `CategoryModel`.

    """
    return load_fixture_file(FIXTURES_DIR / CHAIN3)


def load_spine4() -> dict[str, Any]:
    """Load the spine of ``[4]`` as a directed complex.

    Returns
    -------
    dict[str, Any]
        Complex in the shape read by `ComplexModel`.

    """
    return load_fixture_file(FIXTURES_DIR / SPINE4)


def load_fan_triangulation() -> dict[str, Any]:
    """Load the fan triangulation of the pentagon on ``0..4``.

    Returns
    -------
    dict[str, Any]
        Complex in the shape read by `ComplexModel`.

    """
    return load_fixture_file(FIXTURES_DIR / FAN_TRIANGULATION)


def load_hollow_triangle() -> dict[str, Any]:
    """Load the boundary of a triangle, the smallest cyclic complex.

    Returns
    -------
    dict[str, Any]
        Complex in the shape read by `ComplexModel`.

    """
    return load_fixture_file(FIXTURES_DIR / HOLLOW_TRIANGLE)


def load_pushout_span() -> dict[str, Any]:
    """Load the span ``(d^0, d^1)`` out of ``[1]``, which has a pushout.

    Returns
    -------
    dict[str, Any]
        Span in the shape read by `SpanModel`.

    """
    return load_fixture_file(FIXTURES_DIR / PUSHOUT_SPAN)


def load_no_pushout_span() -> dict[str, Any]:
    """Load the span ``(d^1, d^1)`` out of ``[1]``, which has no pushout.

    Returns
    -------
    dict[str, Any]
        Span in the shape read by `SpanModel`.

    """
    return load_fixture_file(FIXTURES_DIR / NO_PUSHOUT_SPAN)


def load_database_fill() -> dict[str, Any]:
    """Load a join of two binary tables along the spine of ``[2]``.

    Returns
    -------
    dict[str, Any]
        Request in the shape read by `FillRequest`.

    """
    return load_fixture_file(FIXTURES_DIR / DATABASE_FILL)


def load_metric_fill() -> dict[str, Any]:
    """Load a shortest-path fill of two segments along the spine of ``[2]``.

    Returns
    -------
    dict of str to Any
        Request in the shape read by `FillRequest`.

    """
    return load_fixture_file(FIXTURES_DIR / METRIC_FILL)
