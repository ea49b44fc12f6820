"""Tests for acyclic module."""

import itertools
import random

import networkx as nx
import pytest

# functions to test
from spancomplete.acyclic import (
    Complex,
    DirectedComplex,
    RipOrder,
    basic_span_configuration,
    directed_graham_reduce,
    directed_rip_order,
    fill_configuration,
    graham_reduce,
    has_spine,
    is_acyclic_configuration,
    is_chordal,
    is_connected,
    is_directed_acyclic_configuration,
    is_directed_graham_acyclic,
    is_extremal,
    is_graham_acyclic,
    maximal_simplices,
    membership,
    perfect_elimination_ordering,
    polygon_triangulation,
    rip_order,
    satisfies_rip,
    skeleton1,
    spheres_filled,
)
from spancomplete.datasets import (
    load_fan_triangulation,
    load_hollow_triangle,
    load_spine4,
)
from spancomplete.delta import subset_inclusion
from spancomplete.exceptions import (
    IncompatibleAssignment,
    InvalidComplex,
    NotAcyclic,
    NotATriangulation,
)
from spancomplete.instances import (
    Table,
    provider,
    support_search,
    table_face,
)
from spancomplete.oracle import all_complexes, random_complex
from spancomplete.schema import ComplexModel


def _complex(raw):
    return ComplexModel.model_validate(raw).to_domain()


# -----------------------------------------------------------------------------
# 1. Tests for 'Complex' and 'DirectedComplex'
# -----------------------------------------------------------------------------


def test_complex_keeps_maximal_facets():
    """Test faces of other facets are dropped."""
    complex_ = Complex.from_facets([[0, 1, 2], [0, 1], [2, 3]])
    assert complex_.facets == frozenset(
        {frozenset({0, 1, 2}), frozenset({2, 3})}
    )
    assert membership(complex_, [0, 2])
    assert maximal_simplices(complex_) == [[0, 1, 2], [2, 3]]
    assert is_extremal(complex_, 3)
    assert not is_extremal(complex_, 2)
    assert not membership(complex_, [1, 3])


def test_complex_must_cover_ground():
    """Test an uncovered vertex is an error."""
    with pytest.raises(InvalidComplex):
        Complex(frozenset({0, 1, 2}), frozenset({frozenset({0, 1})}))


def test_directed_complex_needs_ordinal_ground():
    """Test directed complexes live on {0, ..., n}."""
    with pytest.raises(InvalidComplex):
        DirectedComplex(frozenset({1, 2}), frozenset({frozenset({1, 2})}))


def test_directed_remove_vertex_shifts_labels():
    """Test removing a vertex relabels the ones above it."""
    complex_ = _complex(load_spine4())
    smaller = complex_.remove_vertex(0)
    assert smaller.n == 3
    assert has_spine(smaller)


# -----------------------------------------------------------------------------
# 2. Tests for acyclicity criteria
# -----------------------------------------------------------------------------


def test_spine_is_directed_acyclic():
    """Test the spine of [4] reduces to a point."""
    complex_ = _complex(load_spine4())
    assert has_spine(complex_)
    assert is_directed_graham_acyclic(complex_)
    result = directed_graham_reduce(complex_)
    assert len(result.residual.ground) == 1
    assert result.order == (0, 1, 2, 3)
    assert is_directed_acyclic_configuration(complex_)


def test_fan_triangulation_is_directed_acyclic():
    """Test the fan triangulation of the pentagon is directed acyclic."""
    complex_ = _complex(load_fan_triangulation())
    assert is_graham_acyclic(complex_)
    assert is_directed_graham_acyclic(complex_)
    order = directed_rip_order(complex_)
    assert order is not None
    assert satisfies_rip(complex_, order, directed=True)


def test_hollow_triangle_is_cyclic():
    """Test every criterion rejects the boundary of a triangle."""
    complex_ = _complex(load_hollow_triangle())
    assert not is_graham_acyclic(complex_)
    assert is_chordal(skeleton1(complex_))
    assert not spheres_filled(complex_)
    assert rip_order(complex_) is None
    assert is_connected(complex_)
    assert not is_acyclic_configuration(complex_)


def test_graham_reduce_records_order():
    """Test a path reduces lowest extremal vertex first."""
    result = graham_reduce(Complex.from_facets([[0, 1], [1, 2]]))
    assert result.residual.is_empty
    assert result.order == (0, 1, 2)


def test_missing_spine_edge_blocks_directed_acyclicity():
    """Test an edge {0, 2} alone does not cover the spine of [2]."""
    complex_ = DirectedComplex(
        frozenset({0, 1, 2}), frozenset({frozenset({0, 2}), frozenset({1})})
    )
    assert is_graham_acyclic(complex_)
    assert not has_spine(complex_)
    assert not is_directed_graham_acyclic(complex_)
    assert directed_rip_order(complex_) is None
    assert not is_directed_acyclic_configuration(complex_)


def test_disconnected_complex_is_no_configuration():
    """Test two points are acyclic but not an acyclic configuration."""
    complex_ = Complex.from_facets([[0], [1]])
    assert is_graham_acyclic(complex_)
    assert not is_acyclic_configuration(complex_)


def test_perfect_elimination_ordering_on_cycle():
    """Test the 4-cycle has no perfect elimination ordering."""
    assert perfect_elimination_ordering(nx.cycle_graph(4)) is None
    assert perfect_elimination_ordering(nx.path_graph(4)) is not None


def test_chordality_agrees_with_networkx():
    """Test chordality and elimination orders agree with networkx."""
    graphs = [
        nx.gnp_random_graph(n, 0.5, seed=seed)
        for n in range(1, 9)
        for seed in range(50)
    ]
    graphs.extend(
        skeleton1(c) for v in range(2, 5) for c in all_complexes(v)
    )
    for graph in graphs:
        order = perfect_elimination_ordering(graph)
        assert is_chordal(graph) == nx.is_chordal(graph)
        assert (order is None) == (not nx.is_chordal(graph))
        if order is None:
            continue
        rank = {v: r for r, v in enumerate(order)}
        for v in order:
            later = [u for u in graph[v] if rank[u] > rank[v]]
            assert all(
                graph.has_edge(a, b)
                for a, b in itertools.combinations(later, 2)
            )


# -----------------------------------------------------------------------------
# 3. Tests for running intersection orders
# -----------------------------------------------------------------------------


def test_rip_order_of_spine():
    """Test the spine of [4] gets a valid running intersection order."""
    complex_ = _complex(load_spine4())
    order = rip_order(complex_)
    assert order is not None
    assert len(order) == 4
    assert order.witnesses[0] is None
    assert satisfies_rip(complex_, order)
    assert satisfies_rip(complex_, order, directed=True)


def test_satisfies_rip_rejects_bad_witness():
    """Test a wrong witness index breaks the property."""
    complex_ = Complex.from_facets([[0, 1], [1, 2], [2, 3]])
    facets = (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}))
    assert satisfies_rip(complex_, RipOrder(facets, (None, 0, 1)))
    assert not satisfies_rip(complex_, RipOrder(facets, (None, 0, 0)))


def test_directed_rip_rejects_gap_in_union():
    """Test a vertex skipped between two facets breaks the spine test."""
    complex_ = Complex.from_facets([[0, 2], [1]])
    order = RipOrder((frozenset({0, 2}), frozenset({1})), (None, 0))
    assert satisfies_rip(complex_, order)
    assert not satisfies_rip(complex_, order, directed=True)


# -----------------------------------------------------------------------------
# 4. Tests for 'polygon_triangulation' and configurations
# -----------------------------------------------------------------------------


def test_polygon_triangulation_fan():
    """Test the fan triangulation builds the fixture complex."""
    triangles = [[0, 1, 2], [0, 2, 3], [0, 3, 4]]
    complex_ = polygon_triangulation(4, triangles)
    assert complex_ == _complex(load_fan_triangulation())


def test_polygon_triangulation_rejects_reused_boundary():
    """Test two triangles on one boundary edge are refused."""
    with pytest.raises(NotATriangulation):
        polygon_triangulation(3, [[0, 1, 2], [1, 2, 3]])


def test_polygon_triangulation_counts_triangles():
    """Test a polygon on n + 1 vertices needs n - 1 triangles."""
    with pytest.raises(NotATriangulation):
        polygon_triangulation(4, [[0, 1, 2], [0, 2, 3]])


def test_basic_span_configuration():
    """Test the configuration of a basic coface square has two facets."""
    complex_ = basic_span_configuration(3, 0, 2)
    assert sorted(map(sorted, complex_.facets)) == [[0, 1, 3], [1, 2, 3]]
    assert is_directed_graham_acyclic(complex_)


# -----------------------------------------------------------------------------
# 5. Tests for 'fill_configuration'
# -----------------------------------------------------------------------------


def _tables(complex_, rows):
    return {facet: Table(2, (0, 1), rows) for facet in complex_.facets}


def test_fill_configuration_joins_spine():
    """Test the spine of [2] fills with the join of its edges."""
    complex_ = DirectedComplex(
        frozenset({0, 1, 2}),
        frozenset({frozenset({0, 1}), frozenset({1, 2})}),
    )
    assignment = {
        frozenset({0, 1}): Table(2, (0, 1), {(0, 1), (1, 1)}),
        frozenset({1, 2}): Table(2, (0, 1), {(1, 0), (1, 1)}),
    }
    filled = fill_configuration(provider("database"), complex_, assignment)
    assert filled.rows == frozenset(
        {(0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)}
    )


def test_fill_configuration_rejects_cycles():
    """Test a cyclic configuration is refused."""
    complex_ = _complex(load_hollow_triangle())
    with pytest.raises(NotAcyclic):
        fill_configuration(
            provider("database"), complex_, _tables(complex_, {(0, 0)})
        )


def test_fill_configuration_reports_disagreement():
    """Test facets disagreeing on a shared vertex are reported."""
    complex_ = DirectedComplex(
        frozenset({0, 1, 2}),
        frozenset({frozenset({0, 1}), frozenset({1, 2})}),
    )
    assignment = {
        frozenset({0, 1}): Table(2, (0, 1), {(0, 1)}),
        frozenset({1, 2}): Table(2, (0, 1), {(0, 0)}),
    }
    with pytest.raises(IncompatibleAssignment) as excinfo:
        fill_configuration(provider("database"), complex_, assignment)
    assert excinfo.value.facets == ((0, 1), (1, 2))
    assert excinfo.value.face == (1,)


@pytest.mark.slow
def test_fill_configuration_matches_brute_force():
    """Test random acyclic configurations fill to the exhaustive solution."""
    rng = random.Random(6)  # noqa: S311
    checked = 0
    while checked < 1000:
        vertices = rng.randint(2, 5)
        complex_ = random_complex(vertices, rng)
        if not is_acyclic_configuration(complex_):
            continue
        ground = sorted(complex_.ground)
        whole = Table(
            vertices,
            (0, 1),
            {
                row
                for row in itertools.product((0, 1), repeat=vertices)
                if rng.random() < 0.5
            }
            or {(0,) * vertices},
        )
        assignment = {
            facet: table_face(whole, subset_inclusion(facet, ground))
            for facet in complex_.facets
        }
        filled = fill_configuration(provider("database"), complex_, assignment)
        exhaustive = support_search(
            (0, 1),
            vertices,
            {tuple(sorted(f)): t.rows for f, t in assignment.items()},
        )
        assert filled.rows == frozenset(exhaustive)
        for facet, table in assignment.items():
            restricted = table_face(filled, subset_inclusion(facet, ground))
            assert restricted.rows == table.rows
        checked += 1
