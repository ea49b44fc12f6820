"""Concrete simplicial sets with canonical span fillers.

Three families of simplices are handled without materialising whole levels:

* relational tables, where an ``n``-simplex is a set of rows over ``n + 1``
  columns and spans are filled by the natural join;
* pseudometrics on ``n + 1`` points, filled by shortest paths through the
  shared points;
* joint distributions of ``n + 1`` variables with exact rational
  probabilities, filled by the conditional product.

A monotone map ``f: [m] -> [n]`` acts on each of them by reading column,
point or variable ``f(i)`` into position ``i``.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import pandas as pd

from .acyclic import FillerProvider
from .delta import MonotoneMap
from .diagrams import Span, Square
from .exceptions import (
    ArityMismatch,
    IncompatibleMarginals,
    IncompatibleProjections,
    IncompatibleRestrictions,
    InvalidDistribution,
    InvalidPseudometric,
    NotBalanced,
)
from .squares import balanced_completion, basic_coface_square, is_balanced
from .sset import SSetProvider

logger = logging.getLogger(__name__)

Row = tuple[Hashable, ...]

PROVIDER_KINDS = ("database", "metric", "distribution", "sset")


def _check_arity(ordinal: int, arity: int, what: str) -> None:
    if ordinal + 1 != arity:
        msg = (
            f"[{ordinal}] needs a {what} of arity {ordinal + 1}, got {arity}"
        )
        raise ArityMismatch(msg)


def _read(row: Row, f: MonotoneMap) -> Row:
    return tuple(row[v] for v in f.values)


def _require_balanced(square: Square) -> None:
    if not is_balanced(square):
        msg = f"Square {square.maps} is not balanced"
        raise NotBalanced(msg)


def _merged_values(*alphabets: Iterable[Hashable]) -> tuple[Hashable, ...]:
    return tuple(dict.fromkeys(itertools.chain(*alphabets)))


def _glue(square: Square, left: Row, right: Row) -> Row:
    row: list[Hashable] = [None] * (square.n + 1)
    for s, value in enumerate(left):
        row[square.h(s)] = value
    for s, value in enumerate(right):
        row[square.k(s)] = value
    return tuple(row)


# -----------------------------------------------------------------------------
# Relational tables
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Table:
    """A set of rows over ``arity`` columns.

    Attributes
    ----------
    arity : int
        Number of columns, ``n + 1`` for an ``n``-simplex.
    values : tuple
        Alphabet the entries are drawn from.
    rows : frozenset of tuple
        The rows.

    """

    arity: int
    values: tuple[Hashable, ...]
    rows: frozenset[Row]

    def __post_init__(self) -> None:
        """Normalise containers and check every row."""
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(
            self, "rows", frozenset(tuple(row) for row in self.rows)
        )
        alphabet = set(self.values)
        for row in self.rows:
            if len(row) != self.arity:
                msg = f"Row {row} does not have {self.arity} columns"
                raise ArityMismatch(msg)
            if not set(row) <= alphabet:
                msg = f"Row {row} uses values outside {self.values}"
                raise ArityMismatch(msg)

    def sorted_rows(self) -> list[Row]:
        """Rows in ascending order."""
        return sorted(self.rows)

    def to_frame(self) -> pd.DataFrame:
        """Rows as a DataFrame with integer column labels."""
        return pd.DataFrame(self.sorted_rows(), columns=range(self.arity))

    def to_csv(self, path: str | Path) -> None:
        """Write the rows with a header of column indices."""
        self.to_frame().to_csv(path, index=False)

    @classmethod
    def from_frame(
        cls, frame: pd.DataFrame, values: Iterable[Hashable] | None = None
    ) -> Table:
        """Build a table from a DataFrame, dropping duplicate rows."""
        rows = [tuple(row) for row in frame.to_numpy().tolist()]
        alphabet = (
            sorted({v for row in rows for v in row})
            if values is None
            else values
        )
        return cls(len(frame.columns), tuple(alphabet), frozenset(rows))

    @classmethod
    def from_csv(
        cls, path: str | Path, values: Iterable[Hashable] | None = None
    ) -> Table:
        """Read a CSV whose header lists the column indices ``0..n``."""
        frame = pd.read_csv(path)
        expected = [str(i) for i in range(len(frame.columns))]
        if [str(c) for c in frame.columns] != expected:
            msg = f"CSV header {list(frame.columns)} is not {expected}"
            raise ArityMismatch(msg)
        return cls.from_frame(frame, values)


def table_face(table: Table, f: MonotoneMap) -> Table:
    """Act on a table by a monotone map.

    Parameters
    ----------
    table : Table
        Table on ``f.cod + 1`` columns.
    f : MonotoneMap
        Cofaces project columns away, codegeneracies duplicate them.

    Returns
    -------
    Table
        ``{(row[f(0)], ..., row[f(m)])}`` without duplicates.

    """
    _check_arity(f.cod, table.arity, "table")
    return Table(
        f.dom + 1, table.values, frozenset(_read(r, f) for r in table.rows)
    )


def join_along(left: Table, right: Table, square: Square) -> Table:
    """Largest table over ``[n]`` restricting into both inputs.

    Parameters
    ----------
    left, right : Table
        Tables over ``[p]`` and ``[q]``.
    square : Square
        Balanced square whose ``h`` and ``k`` place the columns.

    Returns
    -------
    Table
        All rows whose restriction along ``h`` lies in ``left`` and along
        ``k`` lies in ``right``.

    """
    _require_balanced(square)
    _check_arity(square.p, left.arity, "table")
    _check_arity(square.q, right.arity, "table")
    shared_left = table_face(left, square.f)
    shared_right = table_face(right, square.g)
    if shared_left.rows != shared_right.rows:
        msg = (
            f"Shared columns differ: {shared_left.sorted_rows()} vs "
            f"{shared_right.sorted_rows()}"
        )
        raise IncompatibleProjections(
            msg, left=shared_left, right=shared_right
        )
    frame_left = left.to_frame()
    frame_left.columns = list(square.h.values)
    frame_right = right.to_frame()
    frame_right.columns = list(square.k.values)
    shared = sorted(square.h.image & square.k.image)
    merged = frame_left.merge(frame_right, on=shared, how="inner")
    merged = merged[list(range(square.n + 1))]
    logger.debug("Join produced %d rows", len(merged))
    return Table.from_frame(merged, _merged_values(left.values, right.values))


def join(left: Table, right: Table, overlap: Span) -> Table:
    """Join two tables glued along a span of cofaces.

    Parameters
    ----------
    left, right : Table
        Tables over ``[p]`` and ``[q]``.
    overlap : Span
        Coface maps from the shared columns ``[m]``.

    Returns
    -------
    Table
        The join on ``p + q - m + 1`` columns.

    """
    return join_along(left, right, balanced_completion(overlap))


# -----------------------------------------------------------------------------
# Pseudometrics
# -----------------------------------------------------------------------------


def _metric_problem(
    dist: tuple[tuple[Fraction, ...], ...], *, symmetric: bool
) -> str | None:
    size = len(dist)
    if any(len(row) != size for row in dist):
        return "distance matrix is not square"
    points = range(size)
    for x, y in itertools.product(points, points):
        if dist[x][y] < 0:
            return f"negative distance at ({x}, {y})"
        if x == y and dist[x][y] != 0:
            return f"nonzero self distance at {x}"
        if symmetric and dist[x][y] != dist[y][x]:
            return f"asymmetric at ({x}, {y})"
    for x, y, z in itertools.product(points, points, points):
        if dist[x][z] > dist[x][y] + dist[y][z]:
            return f"triangle inequality fails at ({x}, {y}, {z})"
    return None


def _fractions(
    dist: Iterable[Iterable[Any]],
) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(v) for v in row) for row in dist)


def metric_is_valid(
    dist: Iterable[Iterable[Any]], *, symmetric: bool = True
) -> bool:
    """Whether a matrix of rationals is a pseudometric."""
    return _metric_problem(_fractions(dist), symmetric=symmetric) is None


@dataclass(frozen=True)
class Pseudometric:
    """A pseudometric on the points ``0..n``.

    Attributes
    ----------
    dist : tuple of tuple of Fraction
        Distance matrix; entries may be given as ``"p/q"`` strings.
    symmetric : bool
        Whether symmetry is required.

    """

    dist: tuple[tuple[Fraction, ...], ...]
    symmetric: bool = True

    def __post_init__(self) -> None:
        """Convert entries to fractions and check the axioms."""
        object.__setattr__(self, "dist", _fractions(self.dist))
        problem = _metric_problem(self.dist, symmetric=self.symmetric)
        if problem is not None:
            msg = f"Not a pseudometric: {problem}"
            raise InvalidPseudometric(msg)

    def __call__(self, x: int, y: int) -> Fraction:
        """Distance from ``x`` to ``y``."""
        return self.dist[x][y]

    @property
    def points(self) -> int:
        """Number of points."""
        return len(self.dist)


def metric_pullback(metric: Pseudometric, f: MonotoneMap) -> Pseudometric:
    """``(f* d)(x, y) = d(f(x), f(y))``."""
    _check_arity(f.cod, metric.points, "pseudometric")
    return Pseudometric(
        tuple(tuple(metric(fx, fy) for fy in f.values) for fx in f.values),
        symmetric=metric.symmetric,
    )


def metric_fill_along(
    left: Pseudometric, right: Pseudometric, square: Square
) -> Pseudometric:
    """Glue two pseudometrics by shortest paths through shared points.

    Parameters
    ----------
    left, right : Pseudometric
        Pseudometrics on ``[p]`` and ``[q]``.
    square : Square
        Balanced square placing both inside ``[n]``.

    Returns
    -------
    Pseudometric
        Equal to ``left`` and ``right`` on their own points; between a
        point only in ``[p]`` and one only in ``[q]`` the least length of
        a path through the shared points.

    """
    _require_balanced(square)
    _check_arity(square.p, left.points, "pseudometric")
    _check_arity(square.q, right.points, "pseudometric")
    if (
        metric_pullback(left, square.f).dist
        != metric_pullback(right, square.g).dist
    ):
        msg = "Pseudometrics disagree on their shared points"
        raise IncompatibleRestrictions(msg)
    h_inv = {v: s for s, v in enumerate(square.h.values)}
    k_inv = {v: s for s, v in enumerate(square.k.values)}
    shared = list(zip(square.f.values, square.g.values, strict=True))

    def distance(u: int, v: int) -> Fraction:
        if u in h_inv and v in h_inv:
            return left(h_inv[u], h_inv[v])
        if u in k_inv and v in k_inv:
            return right(k_inv[u], k_inv[v])
        if u in h_inv:
            return min(
                left(h_inv[u], a) + right(b, k_inv[v]) for a, b in shared
            )
        return min(right(k_inv[u], b) + left(a, h_inv[v]) for a, b in shared)

    points = range(square.n + 1)
    return Pseudometric(
        tuple(tuple(distance(u, v) for v in points) for u in points),
        symmetric=left.symmetric and right.symmetric,
    )


def metric_fill(
    left: Pseudometric, right: Pseudometric, overlap: Span
) -> Pseudometric:
    """Shortest-path filler over the balanced completion of ``overlap``."""
    return metric_fill_along(left, right, balanced_completion(overlap))


# -----------------------------------------------------------------------------
# Joint distributions
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Distribution:
    """A joint distribution of ``arity`` variables with rational masses.

    Attributes
    ----------
    arity : int
        Number of variables.
    values : tuple
        Alphabet of every variable.
    prob : mapping of tuple to Fraction
        Mass of each outcome; outcomes of mass zero are dropped.

    """

    arity: int
    values: tuple[Hashable, ...]
    prob: Mapping[Row, Fraction]

    def __post_init__(self) -> None:
        """Drop null outcomes and check the masses sum to one exactly."""
        object.__setattr__(self, "values", tuple(self.values))
        masses = {tuple(k): Fraction(v) for k, v in self.prob.items()}
        alphabet = set(self.values)
        for outcome, mass in masses.items():
            if len(outcome) != self.arity or not set(outcome) <= alphabet:
                msg = f"Outcome {outcome} does not fit arity {self.arity}"
                raise InvalidDistribution(msg)
            if mass < 0:
                msg = f"Negative mass {mass} at {outcome}"
                raise InvalidDistribution(msg)
        total = sum(masses.values(), Fraction(0))
        if total != 1:
            msg = f"Masses sum to {total}, not 1"
            raise InvalidDistribution(msg)
        object.__setattr__(
            self, "prob", {k: v for k, v in sorted(masses.items()) if v}
        )

    @property
    def support(self) -> frozenset[Row]:
        """Outcomes of positive mass."""
        return frozenset(self.prob)


def dist_face(dist: Distribution, f: MonotoneMap) -> Distribution:
    """Pushforward along the map reading variable ``f(i)`` into ``i``."""
    _check_arity(f.cod, dist.arity, "distribution")
    pushed: dict[Row, Fraction] = defaultdict(Fraction)
    for outcome, mass in dist.prob.items():
        pushed[_read(outcome, f)] += mass
    return Distribution(f.dom + 1, dist.values, pushed)


def dist_fill_along(
    left: Distribution, right: Distribution, square: Square
) -> Distribution:
    """Conditional product of two distributions over a balanced square.

    Parameters
    ----------
    left, right : Distribution
        Distributions of the variables ``[p]`` and ``[q]``.
    square : Square
        Balanced square placing both inside ``[n]``.

    Returns
    -------
    Distribution
        ``P(a, s, b) = P_left(a, s) P_right(s, b) / P_shared(s)``; shared
        outcomes of mass zero contribute nothing.

    """
    _require_balanced(square)
    _check_arity(square.p, left.arity, "distribution")
    _check_arity(square.q, right.arity, "distribution")
    shared = dist_face(left, square.f)
    if shared.prob != dist_face(right, square.g).prob:
        msg = "Distributions have different marginals on shared variables"
        raise IncompatibleMarginals(msg)
    over: dict[Row, list[tuple[Row, Fraction]]] = defaultdict(list)
    for outcome, mass in right.prob.items():
        over[_read(outcome, square.g)].append((outcome, mass))
    glued: dict[Row, Fraction] = {}
    for outcome, mass in left.prob.items():
        key = _read(outcome, square.f)
        for other, other_mass in over[key]:
            row = _glue(square, outcome, other)
            glued[row] = mass * other_mass / shared.prob[key]
    return Distribution(
        square.n + 1, _merged_values(left.values, right.values), glued
    )


def dist_fill(
    left: Distribution, right: Distribution, overlap: Span
) -> Distribution:
    """Conditional product over the balanced completion of ``overlap``."""
    return dist_fill_along(left, right, balanced_completion(overlap))


def support_search(
    values: Iterable[Hashable],
    arity: int,
    constraints: Mapping[tuple[int, ...], Iterable[Row]],
) -> list[Row]:
    """Outcomes whose projections all land in prescribed supports.

    Parameters
    ----------
    values : iterable
        Alphabet.
    arity : int
        Number of variables.
    constraints : mapping
        Tuple of variable positions to the allowed sub-outcomes.

    Returns
    -------
    list of tuple
        Every outcome in ``values ** arity`` meeting all constraints; an
        empty list means no joint distribution has those supports.

    """
    allowed = {
        cols: {tuple(r) for r in rows} for cols, rows in constraints.items()
    }
    return [
        outcome
        for outcome in itertools.product(tuple(values), repeat=arity)
        if all(
            tuple(outcome[c] for c in cols) in rows
            for cols, rows in allowed.items()
        )
    ]


# -----------------------------------------------------------------------------
# Providers
# -----------------------------------------------------------------------------


class DatabaseProvider(FillerProvider):
    """Tables, filled by the natural join."""

    def face(self, simplex: Table, f: MonotoneMap) -> Table:
        """Project or duplicate columns."""
        return table_face(simplex, f)

    def span_fill(self, x: Table, y: Table, i: int, j: int, n: int) -> Table:
        """Join over a basic coface square."""
        return join_along(x, y, basic_coface_square(n, i, j))

    def fill_span(self, x: Table, y: Table, square: Square) -> Table:
        """Join over any balanced square."""
        return join_along(x, y, square)


class MetricProvider(FillerProvider):
    """Pseudometrics, filled by shortest paths."""

    def __init__(self, *, symmetric: bool = True) -> None:
        self.symmetric = symmetric

    def face(self, simplex: Pseudometric, f: MonotoneMap) -> Pseudometric:
        """Pull the pseudometric back."""
        return metric_pullback(simplex, f)

    def span_fill(
        self, x: Pseudometric, y: Pseudometric, i: int, j: int, n: int
    ) -> Pseudometric:
        """Shortest-path filler over a basic coface square."""
        return metric_fill_along(x, y, basic_coface_square(n, i, j))

    def fill_span(
        self, x: Pseudometric, y: Pseudometric, square: Square
    ) -> Pseudometric:
        """Shortest-path filler over any balanced square."""
        return metric_fill_along(x, y, square)


class DistributionProvider(FillerProvider):
    """Joint distributions, filled by the conditional product."""

    def face(self, simplex: Distribution, f: MonotoneMap) -> Distribution:
        """Push the distribution forward."""
        return dist_face(simplex, f)

    def span_fill(
        self, x: Distribution, y: Distribution, i: int, j: int, n: int
    ) -> Distribution:
        """Conditional product over a basic coface square."""
        return dist_fill_along(x, y, basic_coface_square(n, i, j))

    def fill_span(
        self, x: Distribution, y: Distribution, square: Square
    ) -> Distribution:
        """Conditional product over any balanced square."""
        return dist_fill_along(x, y, square)


def provider(kind: str, **params: Any) -> FillerProvider:
    """Build a filler provider by name.

    Parameters
    ----------
    kind : str
        One of `PROVIDER_KINDS`.
    **params
        ``symmetric`` for metrics, ``sset`` for simplicial sets.

    Returns
    -------
    FillerProvider
        Provider ready for `fill_configuration`.

    """
    if kind == "database":
        return DatabaseProvider()
    if kind == "metric":
        return MetricProvider(symmetric=params.get("symmetric", True))
    if kind == "distribution":
        return DistributionProvider()
    if kind == "sset":
        return SSetProvider(params["sset"])
    msg = f"Unknown provider {kind!r}; expected one of {PROVIDER_KINDS}"
    raise ValueError(msg)
