"""Tests for instances module."""

import itertools
import random
from fractions import Fraction

import pytest

from spancomplete.acyclic import DirectedComplex, fill_configuration
from spancomplete.datasets import (
    load_database_fill,
    load_metric_fill,
    load_walking_arrow,
)
from spancomplete.delta import (
    MonotoneMap,
    enumerate_maps,
    generating_coface,
    is_coface,
)
from spancomplete.diagrams import Span
from spancomplete.exceptions import (
    ArityMismatch,
    IncompatibleMarginals,
    IncompatibleProjections,
    InvalidDistribution,
    InvalidPseudometric,
)

# functions to test
from spancomplete.instances import (
    Distribution,
    Pseudometric,
    Table,
    dist_face,
    dist_fill,
    dist_fill_along,
    join,
    join_along,
    metric_fill,
    metric_fill_along,
    metric_is_valid,
    metric_pullback,
    provider,
    support_search,
    table_face,
)
from spancomplete.schema import CategoryModel, FillRequest
from spancomplete.squares import balanced_completion
from spancomplete.sset import nerve

OVERLAP = Span(MonotoneMap(0, 1, (1,)), MonotoneMap(0, 1, (0,)))
SPINE2 = DirectedComplex(
    frozenset({0, 1, 2}), frozenset({frozenset({0, 1}), frozenset({1, 2})})
)

RANDOM_CASES = 1000


def _random_square(rng, max_side):
    p, q = rng.randint(0, max_side), rng.randint(0, max_side)
    m = rng.randint(0, min(p, q))
    f = rng.choice([c for c in enumerate_maps(m, p) if is_coface(c)])
    g = rng.choice([c for c in enumerate_maps(m, q) if is_coface(c)])
    return balanced_completion(Span(f, g))


def _random_table(rng, arity):
    outcomes = list(itertools.product((0, 1), repeat=arity))
    rows = {row for row in outcomes if rng.random() < 0.5}
    return Table(arity, (0, 1), rows or {rng.choice(outcomes)})


def _random_metric(rng, points):
    dist = [[Fraction(0)] * points for _ in range(points)]
    for x, y in itertools.combinations(range(points), 2):
        dist[x][y] = dist[y][x] = Fraction(
            rng.randint(0, 12), rng.randint(1, 4)
        )
    for z, x, y in itertools.product(range(points), repeat=3):
        dist[x][y] = min(dist[x][y], dist[x][z] + dist[z][y])
    return Pseudometric(dist)


def _random_distribution(rng, arity):
    outcomes = list(itertools.product((0, 1), repeat=arity))
    weights = [rng.randint(0, 3) for _ in outcomes]
    if not any(weights):
        weights[0] = 1
    total = sum(weights)
    return Distribution(
        arity,
        (0, 1),
        {
            o: Fraction(w, total)
            for o, w in zip(outcomes, weights, strict=True)
        },
    )


# -----------------------------------------------------------------------------
# 1. Tests for relational tables
# -----------------------------------------------------------------------------


def test_table_rejects_wrong_arity():
    """Test a row of the wrong length is refused."""
    with pytest.raises(ArityMismatch):
        Table(2, (0, 1), {(0, 1, 1)})


def test_table_rejects_values_outside_alphabet():
    """Test entries must come from the alphabet."""
    with pytest.raises(ArityMismatch):
        Table(1, (0, 1), {(2,)})


def test_table_face_projects_columns():
    """Test d^1 drops the middle column."""
    table = Table(3, (0, 1), {(0, 1, 0), (1, 1, 1)})
    face = table_face(table, generating_coface(2, 1))
    assert face.rows == frozenset({(0, 0), (1, 1)})
    assert face.arity == 2


def test_join_on_shared_column():
    """Test the join of two edges over their shared vertex."""
    left = Table(2, (0, 1), {(0, 1), (1, 1)})
    right = Table(2, (0, 1), {(1, 0), (1, 1)})
    joined = join(left, right, OVERLAP)
    assert joined.arity == 3
    assert joined.sorted_rows() == [
        (0, 1, 0),
        (0, 1, 1),
        (1, 1, 0),
        (1, 1, 1),
    ]


def test_join_along_completed_overlap():
    """Test tables over [1] fit the two sides of the completed square."""
    square = balanced_completion(OVERLAP)
    assert (square.h.values, square.k.values) == ((0, 1), (1, 2))
    left = Table(2, (0, 1), {(0, 0), (1, 1)})
    right = Table(2, (0, 1), {(0, 1), (1, 0)})
    joined = join_along(left, right, square)
    assert joined.sorted_rows() == [(0, 0, 1), (1, 1, 0)]
    assert provider("database").fill_span(left, right, square) == joined
    with pytest.raises(ArityMismatch):
        join_along(joined, right, square)


def test_join_rejects_different_projections():
    """Test tables disagreeing on the shared column are refused."""
    left = Table(2, (0, 1), {(0, 1)})
    right = Table(2, (0, 1), {(0, 0)})
    with pytest.raises(IncompatibleProjections) as excinfo:
        join(left, right, OVERLAP)
    assert excinfo.value.left.rows == frozenset({(1,)})
    assert excinfo.value.right.rows == frozenset({(0,)})


def test_table_csv(tmp_path):
    """Test a table written to CSV reads back unchanged."""
    table = Table(2, (0, 1), {(0, 1), (1, 1)})
    path = tmp_path / "table.csv"
    table.to_csv(path)
    assert Table.from_csv(path) == table
    assert list(table.to_frame().columns) == [0, 1]


def test_join_along_is_maximal():
    """Test joins hold exactly the rows fitting both sides, up to 4 columns."""
    rng = random.Random(10)  # noqa: S311
    checked = 0
    while checked < RANDOM_CASES:
        square = _random_square(rng, 2)
        if square.n > 3:
            continue
        whole = _random_table(rng, square.n + 1)
        left = table_face(whole, square.h)
        right = table_face(whole, square.k)
        joined = join_along(left, right, square)
        fitting = {
            row
            for row in itertools.product((0, 1), repeat=square.n + 1)
            if tuple(row[c] for c in square.h.values) in left.rows
            and tuple(row[c] for c in square.k.values) in right.rows
        }
        assert joined.rows == fitting
        assert whole.rows <= joined.rows
        checked += 1


# -----------------------------------------------------------------------------
# 2. Tests for pseudometrics
# -----------------------------------------------------------------------------


def test_pseudometric_rejects_triangle_violation():
    """Test a shortcut through a middle point is refused."""
    with pytest.raises(InvalidPseudometric):
        Pseudometric(((0, 1, 3), (1, 0, 1), (3, 1, 0)))


def test_metric_is_valid_symmetry():
    """Test asymmetric matrices pass only without the symmetry check."""
    dist = [[0, 1], [2, 0]]
    assert metric_is_valid(dist, symmetric=False)
    assert not metric_is_valid(dist)


def test_metric_pullback_reads_points():
    """Test pulling back along a vertex of [1]."""
    metric = Pseudometric(((0, "1/2"), ("1/2", 0)))
    pulled = metric_pullback(metric, MonotoneMap(1, 1, (1, 1)))
    assert pulled.dist == ((0, 0), (0, 0))


def test_metric_fill_shortest_path():
    """Test the new distance runs through the shared point."""
    left = Pseudometric(((0, "1/2"), ("1/2", 0)))
    right = Pseudometric(((0, 1), (1, 0)))
    filled = metric_fill(left, right, OVERLAP)
    assert filled(0, 2) == Fraction(3, 2)
    assert filled(2, 0) == Fraction(3, 2)
    assert filled(0, 1) == Fraction(1, 2)


def test_metric_fill_along_checks_side_arity():
    """Test two-point metrics fit the sides and a three-point one does not."""
    square = balanced_completion(OVERLAP)
    left = Pseudometric(((0, "1/2"), ("1/2", 0)))
    right = Pseudometric(((0, 1), (1, 0)))
    filled = metric_fill_along(left, right, square)
    assert filled.points == 3
    assert filled(0, 2) == Fraction(3, 2)
    with pytest.raises(ArityMismatch):
        metric_fill_along(filled, right, square)


def test_metric_fill_is_maximal_pseudometric():
    """Test random fills are pseudometrics above every compatible one."""
    rng = random.Random(11)  # noqa: S311
    for _ in range(RANDOM_CASES):
        square = _random_square(rng, 2)
        whole = _random_metric(rng, square.n + 1)
        left = metric_pullback(whole, square.h)
        right = metric_pullback(whole, square.k)
        filled = metric_fill_along(left, right, square)
        assert metric_is_valid(filled.dist)
        assert metric_pullback(filled, square.h) == left
        assert metric_pullback(filled, square.k) == right
        points = range(square.n + 1)
        assert all(
            filled(u, v) >= whole(u, v)
            for u, v in itertools.product(points, points)
        )


# -----------------------------------------------------------------------------
# 3. Tests for distributions
# -----------------------------------------------------------------------------


def _coupled():
    half = Fraction(1, 2)
    return Distribution(2, (0, 1), {(0, 0): half, (1, 1): half})


def test_distribution_masses_sum_to_one():
    """Test masses are checked exactly."""
    with pytest.raises(InvalidDistribution):
        Distribution(1, (0, 1), {(0,): Fraction(1, 3), (1,): Fraction(1, 3)})


def test_distribution_drops_null_outcomes():
    """Test outcomes of mass zero leave the support."""
    dist = Distribution(1, (0, 1), {(0,): 1, (1,): 0})
    assert dist.support == frozenset({(0,)})


def test_dist_face_marginal():
    """Test the marginal of the first variable."""
    marginal = dist_face(_coupled(), MonotoneMap(0, 1, (0,)))
    assert marginal.prob == {(0,): Fraction(1, 2), (1,): Fraction(1, 2)}


def test_dist_fill_conditional_product():
    """Test gluing two coupled pairs gives a coupled triple."""
    filled = dist_fill(_coupled(), _coupled(), OVERLAP)
    assert filled.prob == {
        (0, 0, 0): Fraction(1, 2),
        (1, 1, 1): Fraction(1, 2),
    }


def test_dist_fill_along_completed_overlap():
    """Test the conditional product over the completed square."""
    square = balanced_completion(OVERLAP)
    filled = dist_fill_along(_coupled(), _coupled(), square)
    assert filled.arity == 3
    assert filled.prob == {
        (0, 0, 0): Fraction(1, 2),
        (1, 1, 1): Fraction(1, 2),
    }
    with pytest.raises(ArityMismatch):
        dist_fill_along(filled, _coupled(), square)


def test_dist_fill_keeps_marginals_and_mass():
    """Test random conditional products have both marginals and mass 1."""
    rng = random.Random(12)  # noqa: S311
    for _ in range(RANDOM_CASES):
        square = _random_square(rng, 2)
        whole = _random_distribution(rng, square.n + 1)
        left = dist_face(whole, square.h)
        right = dist_face(whole, square.k)
        filled = dist_fill_along(left, right, square)
        assert filled.arity == square.n + 1
        assert dist_face(filled, square.h).prob == left.prob
        assert dist_face(filled, square.k).prob == right.prob
        assert sum(filled.prob.values()) == 1


def test_dist_fill_rejects_different_marginals():
    """Test a right marginal differing on the shared variable."""
    right = Distribution(2, (0, 1), {(0, 0): Fraction(1)})
    with pytest.raises(IncompatibleMarginals):
        dist_fill(_coupled(), right, OVERLAP)


def test_support_search():
    """Test outcomes projecting into both edge supports."""
    outcomes = support_search(
        (0, 1),
        3,
        {(0, 1): [(0, 1), (1, 1)], (1, 2): [(1, 0), (1, 1)]},
    )
    assert outcomes == [(0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)]
    assert support_search((0, 1), 2, {(0,): [], (1,): [(0,)]}) == []


# -----------------------------------------------------------------------------
# 4. Tests for 'provider' and filling requests
# -----------------------------------------------------------------------------


def test_provider_rejects_unknown_kind():
    """Test an unknown provider name is refused."""
    with pytest.raises(ValueError, match="Unknown provider"):
        provider("graph")


def test_database_request_fills():
    """Test the bundled database request fills the spine of [2]."""
    request = FillRequest.model_validate(load_database_fill())
    filled = fill_configuration(
        provider(request.provider),
        request.configuration.to_domain(),
        request.simplices(),
    )
    assert len(filled.rows) == 4


def test_metric_request_fills():
    """Test the bundled metric request fills by shortest paths."""
    request = FillRequest.model_validate(load_metric_fill())
    filled = fill_configuration(
        provider(request.provider, symmetric=request.symmetric),
        request.configuration.to_domain(),
        request.simplices(),
    )
    assert filled(0, 2) == Fraction(3, 2)


def test_sset_provider_fills_with_chain():
    """Test an arrow followed by an identity fills in the nerve."""
    category = CategoryModel.model_validate(load_walking_arrow()).to_domain()
    sset_provider = provider("sset", sset=nerve(category, 2))
    assignment = {(0, 1): "a", (1, 2): "id1"}
    assert fill_configuration(sset_provider, SPINE2, assignment) == "a|id1"
