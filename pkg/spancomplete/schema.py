"""Validated JSON shapes for every object the command line reads or writes.

Each input model offers ``to_domain()`` returning the library object, and
the ``dump_*`` functions produce the matching JSON-ready dictionaries.
Rationals travel as ``"p/q"`` strings so that they survive a round trip
exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Literal, Self

from pydantic import BaseModel, Field, model_validator

from .acyclic import Complex, DirectedComplex, RipOrder
from .delta import (
    MonotoneMap,
    generating_codegeneracy,
    generating_coface,
    identity,
)
from .diagrams import Grid, Span, Square
from .instances import Distribution, Pseudometric, Table
from .sset import FinCategory, TruncatedSSet
from .vee import VeeDecomposition, VeeFamily

Rational = int | str
ARROW_ENDS = 2
COMPOSITION_ENTRIES = 3


# -----------------------------------------------------------------------------
# Maps and diagrams
# -----------------------------------------------------------------------------


class MapModel(BaseModel):
    """A monotone map in dense form or one of the shorthands.

    Attributes
    ----------
    dom, cod : int or None
        Ordinals of the dense form.
    values : list of int or None
        Images of the dense form.
    identity_of : int or None
        Identity shorthand ``{"id": n}``.
    d : list of int or None
        Coface shorthand ``{"d": [n, i]}`` for ``d^i: [n-1] -> [n]``.
    s : list of int or None
        Codegeneracy shorthand ``{"s": [n, i]}`` for ``s^i: [n+1] -> [n]``.

    """

    dom: int | None = Field(None, ge=0)
    cod: int | None = Field(None, ge=0)
    values: list[int] | None = None
    identity_of: int | None = Field(None, ge=0, alias="id")
    d: list[int] | None = Field(None, min_length=2, max_length=2)
    s: list[int] | None = Field(None, min_length=2, max_length=2)

    @model_validator(mode="after")
    def validate_single_form(self) -> Self:
        """Require exactly one of the four encodings.

        Returns
        -------
        Self
            Validated map.

        """
        dense = self.values is not None
        forms = (self.values, self.identity_of, self.d, self.s)
        if sum(form is not None for form in forms) != 1:
            msg = "A map needs exactly one of values, id, d or s"
            raise ValueError(msg)
        if dense and (self.dom is None or self.cod is None):
            msg = "Dense maps need dom and cod"
            raise ValueError(msg)
        return self

    def to_domain(self) -> MonotoneMap:
        """Build the monotone map."""
        if self.identity_of is not None:
            return identity(self.identity_of)
        if self.d is not None:
            return generating_coface(*self.d)
        if self.s is not None:
            return generating_codegeneracy(*self.s)
        return MonotoneMap(self.dom, self.cod, tuple(self.values))


class SpanModel(BaseModel):
    """A span ``{"f": <map>, "g": <map>}``."""

    f: MapModel
    g: MapModel

    def to_domain(self) -> Span:
        """Build the span."""
        return Span(self.f.to_domain(), self.g.to_domain())


class SquareModel(BaseModel):
    """A square ``{"f", "g", "h", "k"}`` of maps."""

    f: MapModel
    g: MapModel
    h: MapModel
    k: MapModel

    def to_domain(self) -> Square:
        """Build the square."""
        return Square(
            self.f.to_domain(),
            self.g.to_domain(),
            self.h.to_domain(),
            self.k.to_domain(),
        )


class GridModel(BaseModel):
    """A grid of squares, cells possibly nested grids."""

    rows: int = Field(..., gt=0)
    cols: int = Field(..., gt=0)
    cells: list[list[SquareModel | GridModel]]

    def to_domain(self) -> Grid:
        """Build the grid."""
        return Grid(
            tuple(
                tuple(cell.to_domain() for cell in row) for row in self.cells
            )
        )


GridModel.model_rebuild()


class DecompositionModel(BaseModel):
    """A vee decomposition ``{"base": <map>}``."""

    base: MapModel

    def to_domain(self) -> VeeDecomposition:
        """Build the decomposition."""
        return VeeDecomposition(self.base.to_domain())


class FamilyModel(BaseModel):
    """A family of maps ``{"parts": [<map>, ...]}``."""

    parts: list[MapModel] = Field(..., min_length=1)

    def to_domain(self) -> VeeFamily:
        """Build the family."""
        return VeeFamily(tuple(part.to_domain() for part in self.parts))


def dump_map(f: MonotoneMap) -> dict[str, Any]:
    """Dense JSON form of a map."""
    return {"dom": f.dom, "cod": f.cod, "values": list(f.values)}


def dump_span(span: Span) -> dict[str, Any]:
    """JSON form of a span."""
    return {"f": dump_map(span.f), "g": dump_map(span.g)}


def dump_square(square: Square) -> dict[str, Any]:
    """JSON form of a square."""
    return {name: dump_map(getattr(square, name)) for name in "fghk"}


def _dump_cell(cell: Square | Grid) -> dict[str, Any]:
    return dump_grid(cell) if isinstance(cell, Grid) else dump_square(cell)


def dump_grid(grid: Grid) -> dict[str, Any]:
    """JSON form of a grid; nested grids stay nested."""
    return {
        "rows": grid.rows,
        "cols": grid.cols,
        "cells": [[_dump_cell(cell) for cell in row] for row in grid.cells],
    }


# -----------------------------------------------------------------------------
# Complexes and simplicial sets
# -----------------------------------------------------------------------------


class ComplexModel(BaseModel):
    """A complex on the vertices ``0..ground-1``.

    Attributes
    ----------
    ground : int
        Number of vertices.
    facets : list of list of int
        Generating simplices.
    directed : bool
        Whether the vertex order matters.

    """

    ground: int = Field(..., ge=0)
    facets: list[list[int]]
    directed: bool = False

    def to_domain(self) -> Complex:
        """Build a `Complex` or a `DirectedComplex`."""
        cls = DirectedComplex if self.directed else Complex
        return cls(
            frozenset(range(self.ground)),
            frozenset(frozenset(f) for f in self.facets),
        )


def dump_complex(complex_: Complex) -> dict[str, Any]:
    """JSON form of a complex."""
    return {
        "ground": len(complex_.ground),
        "facets": [sorted(f) for f in complex_.sorted_facets()],
        "directed": isinstance(complex_, DirectedComplex),
    }


def dump_rip_order(order: RipOrder) -> dict[str, Any]:
    """JSON form of a running intersection order."""
    return {
        "facets": [sorted(f) for f in order.facets],
        "witnesses": list(order.witnesses),
    }


def _pair_key(key: str) -> tuple[int, int]:
    n, i = key.split(",")
    return int(n), int(i)


class SSetModel(BaseModel):
    """A truncated simplicial set with ``"n,i"`` keyed tables."""

    dim: int = Field(..., ge=0)
    cells: dict[str, list[str]]
    faces: dict[str, dict[str, str]] = Field(default_factory=dict)
    degeneracies: dict[str, dict[str, str]] = Field(default_factory=dict)

    def to_domain(self) -> TruncatedSSet:
        """Build the simplicial set."""
        return TruncatedSSet(
            self.dim,
            {int(n): tuple(cells) for n, cells in self.cells.items()},
            {_pair_key(k): t for k, t in self.faces.items()},
            {_pair_key(k): t for k, t in self.degeneracies.items()},
        )


def dump_sset(sset: TruncatedSSet) -> dict[str, Any]:
    """JSON form of a truncated simplicial set."""
    return {
        "dim": sset.dim,
        "cells": {str(n): list(c) for n, c in sset.cells.items()},
        "faces": {
            f"{n},{i}": dict(t) for (n, i), t in sorted(sset.faces.items())
        },
        "degeneracies": {
            f"{n},{i}": dict(t)
            for (n, i), t in sorted(sset.degeneracies.items())
        },
    }


class CategoryModel(BaseModel):
    """A finite category with an explicit composition table.

    Attributes
    ----------
    objects : list of str
        Object names.
    arrows : dict of str to list of str
        Arrow name to ``[source, target]``.
    identities : dict of str to str
        Object to identity arrow.
    composition : list of list of str
        Triples ``[f, g, h]`` meaning ``g ∘ f = h``; composites with
        identities may be left out.

    """

    objects: list[str]
    arrows: dict[str, list[str]]
    identities: dict[str, str]
    composition: list[list[str]] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_shapes(self) -> Self:
        """Check the lengths of arrow endpoints and composition triples.

        Returns
        -------
        Self
            Validated category.

        """
        if any(len(ends) != ARROW_ENDS for ends in self.arrows.values()):
            msg = "Every arrow needs [source, target]"
            raise ValueError(msg)
        if any(len(row) != COMPOSITION_ENTRIES for row in self.composition):
            msg = "Every composition entry needs [f, g, composite]"
            raise ValueError(msg)
        return self

    def to_domain(self) -> FinCategory:
        """Build the category."""
        return FinCategory(
            tuple(self.objects),
            {a: (src, tgt) for a, (src, tgt) in self.arrows.items()},
            dict(self.identities),
            {(f, g): h for f, g, h in self.composition},
        )


# -----------------------------------------------------------------------------
# Instances
# -----------------------------------------------------------------------------


class TableModel(BaseModel):
    """A table ``{"values": [...], "rows": [[...], ...]}``."""

    values: list[int | str]
    rows: list[list[int | str]]
    arity: int | None = Field(None, ge=1)

    def to_domain(self) -> Table:
        """Build the table; arity defaults to the row length."""
        arity = self.arity
        if arity is None:
            if not self.rows:
                msg = "An empty table needs an explicit arity"
                raise ValueError(msg)
            arity = len(self.rows[0])
        rows = frozenset(tuple(row) for row in self.rows)
        return Table(arity, tuple(self.values), rows)


def dump_table(table: Table) -> dict[str, Any]:
    """JSON form of a table."""
    return {
        "arity": table.arity,
        "values": list(table.values),
        "rows": [list(row) for row in table.sorted_rows()],
    }


class MetricModel(BaseModel):
    """A pseudometric ``{"dist": [["p/q", ...], ...]}``."""

    dist: list[list[Rational]]
    symmetric: bool = True

    def to_domain(self) -> Pseudometric:
        """Build the pseudometric."""
        return Pseudometric(
            tuple(tuple(Fraction(v) for v in row) for row in self.dist),
            symmetric=self.symmetric,
        )


def dump_metric(metric: Pseudometric) -> dict[str, Any]:
    """JSON form of a pseudometric."""
    return {
        "dist": [[str(v) for v in row] for row in metric.dist],
        "symmetric": metric.symmetric,
    }


class DistributionModel(BaseModel):
    """A distribution ``{"values", "arity", "prob": {"v0,v1": "p/q"}}``."""

    values: list[int | str]
    arity: int = Field(..., ge=1)
    prob: dict[str, Rational]

    def to_domain(self) -> Distribution:
        """Build the distribution, reading outcome keys by value name."""
        lookup = {str(v): v for v in self.values}
        masses = {}
        for key, mass in self.prob.items():
            names = key.split(",")
            if any(name not in lookup for name in names):
                msg = f"Outcome {key!r} uses values outside {self.values}"
                raise ValueError(msg)
            masses[tuple(lookup[name] for name in names)] = Fraction(mass)
        return Distribution(self.arity, tuple(self.values), masses)


def dump_distribution(dist: Distribution) -> dict[str, Any]:
    """JSON form of a distribution."""
    return {
        "values": list(dist.values),
        "arity": dist.arity,
        "prob": {
            ",".join(str(v) for v in outcome): str(mass)
            for outcome, mass in dist.prob.items()
        },
    }


SIMPLEX_MODELS: dict[str, type[BaseModel]] = {
    "database": TableModel,
    "metric": MetricModel,
    "distribution": DistributionModel,
}


class FacetAssignment(BaseModel):
    """One facet of a configuration and its simplex."""

    facet: list[int] = Field(..., min_length=1)
    simplex: Any


class FillRequest(BaseModel):
    """Input of ``spancomplete fill``.

    Attributes
    ----------
    provider : str
        ``database``, ``metric``, ``distribution`` or ``sset``.
    configuration : ComplexModel
        The acyclic configuration.
    assignment : list of FacetAssignment
        Simplex for every facet; for ``sset`` simplices are cell names.
    sset : SSetModel or None
        Simplicial set for the ``sset`` provider.
    symmetric : bool
        Symmetry requirement for metrics.

    """

    provider: Literal["database", "metric", "distribution", "sset"]
    configuration: ComplexModel = Field(..., alias="complex")
    assignment: list[FacetAssignment]
    sset: SSetModel | None = None
    symmetric: bool = True

    @model_validator(mode="after")
    def validate_provider_inputs(self) -> Self:
        """Require a simplicial set exactly for the ``sset`` provider.

        Returns
        -------
        Self
            Validated request.

        """
        if (self.provider == "sset") != (self.sset is not None):
            msg = "The sset provider needs an sset, and only it"
            raise ValueError(msg)
        return self

    def simplices(self) -> dict[frozenset[int], Any]:
        """Facet to domain simplex."""
        model = SIMPLEX_MODELS.get(self.provider)
        result = {}
        for item in self.assignment:
            simplex = item.simplex
            if self.provider == "metric" and isinstance(simplex, dict):
                simplex = {"symmetric": self.symmetric, **simplex}
            if model is not None:
                simplex = model.model_validate(simplex).to_domain()
            result[frozenset(item.facet)] = simplex
        return result
