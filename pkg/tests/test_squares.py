"""Tests for squares module."""

import pytest

from spancomplete.delta import (
    MonotoneMap,
    compose,
    defect,
    generating_codegeneracy,
    generating_coface,
    identity,
)
from spancomplete.diagrams import Span, Square
from spancomplete.exceptions import (
    HasPushout,
    IndexOutOfRange,
    NonCommuting,
    NoPushout,
    NotBalanced,
    NotPushout,
    TrivialSquare,
)
from spancomplete.oracle import count_factorizations

# functions to test
from spancomplete.squares import (
    BasicKind,
    balanced_completion,
    basic_coface_square,
    basic_kind,
    catalog,
    compute_pushout,
    factor_balanced,
    factor_into_basic,
    factor_pushout_horizontal,
    has_pushout,
    induced_map,
    is_balanced,
    is_concrete_pushout,
    is_pushout_square,
    is_set_pushout,
    mixed_lower_square,
    pushout_failure_witness,
    pushout_violation,
    spine_condition,
)

PUSHOUT_SPAN = Span(generating_coface(2, 0), generating_coface(2, 1))
NO_PUSHOUT_SPAN = Span(generating_coface(2, 1), generating_coface(2, 1))

# -----------------------------------------------------------------------------
# 1. Tests for pushout existence
# -----------------------------------------------------------------------------


def test_pushout_span_has_pushout():
    """Test the span (d^0, d^1) out of [1] satisfies every condition."""
    assert has_pushout(PUSHOUT_SPAN)
    assert pushout_violation(PUSHOUT_SPAN) is None


def test_inner_condition_fails_for_equal_jumps():
    """Test (d^1, d^1) fails the inner condition at position 1."""
    assert pushout_violation(NO_PUSHOUT_SPAN) == (1, 1)
    with pytest.raises(NoPushout) as excinfo:
        compute_pushout(NO_PUSHOUT_SPAN)
    assert excinfo.value.condition == 1
    assert excinfo.value.index == 1


@pytest.mark.parametrize(
    ("value", "expected"),
    [(1, (2, 0)), (0, (3, 0))],
)
def test_endpoint_conditions(value, expected):
    """Test two equal vertices of [1] miss the minimum or the maximum."""
    vertex = MonotoneMap(0, 1, (value,))
    assert pushout_violation(Span(vertex, vertex)) == expected


# -----------------------------------------------------------------------------
# 2. Tests for 'compute_pushout'
# -----------------------------------------------------------------------------


def test_compute_pushout_example():
    """Test the pushout of (d^0, d^1) lands in [3]."""
    square = compute_pushout(PUSHOUT_SPAN)
    assert square.h == MonotoneMap(2, 3, (0, 1, 3))
    assert square.k == MonotoneMap(2, 3, (1, 2, 3))
    assert square.commutes
    assert is_pushout_square(square)


def test_pushout_example_is_concrete():
    """Test the example pushout passes the set and spine criteria."""
    square = compute_pushout(PUSHOUT_SPAN)
    assert is_set_pushout(square)
    assert spine_condition(square)
    assert is_balanced(square)
    assert is_concrete_pushout(square)


def test_pushout_with_codegeneracy_leg():
    """Test the pushout of a coface against a codegeneracy."""
    span = Span(generating_coface(2, 1), generating_codegeneracy(0, 0))
    square = compute_pushout(span)
    assert square.n == 0
    assert square.h == MonotoneMap.constant(2, 0, 0)
    assert square.k == identity(0)


def test_pushout_mirror_symmetry():
    """Test swapping the legs mirrors the pushout square."""
    assert compute_pushout(PUSHOUT_SPAN.mirror()) == (
        compute_pushout(PUSHOUT_SPAN).mirror()
    )


def test_is_pushout_square_requires_commuting():
    """Test a non-commuting square is rejected."""
    square = Square(
        MonotoneMap(0, 1, (0,)),
        MonotoneMap(0, 1, (0,)),
        identity(1),
        MonotoneMap(1, 1, (1, 1)),
    )
    with pytest.raises(NonCommuting):
        is_pushout_square(square)


def test_basic_coface_square_is_not_a_pushout():
    """Test basic_coface_square(2, 0, 1) is balanced but no pushout."""
    square = basic_coface_square(2, 0, 1)
    assert square == Square(
        generating_coface(1, 0),
        generating_coface(1, 0),
        generating_coface(2, 1),
        generating_coface(2, 0),
    )
    assert is_balanced(square)
    assert is_set_pushout(square)
    assert not spine_condition(square)
    assert not is_pushout_square(square)


# -----------------------------------------------------------------------------
# 3. Tests for 'pushout_failure_witness'
# -----------------------------------------------------------------------------


def test_witness_for_inner_failure():
    """Test the witness cocone into [1] for (d^1, d^1)."""
    phi, psi = pushout_failure_witness(NO_PUSHOUT_SPAN)
    assert phi == MonotoneMap(2, 1, (0, 1, 1))
    assert psi == MonotoneMap(2, 1, (0, 0, 1))
    assert compose(phi, NO_PUSHOUT_SPAN.f) == compose(psi, NO_PUSHOUT_SPAN.g)


@pytest.mark.parametrize(
    "cospan",
    [
        (MonotoneMap(2, 3, (0, 1, 3)), MonotoneMap(2, 3, (0, 2, 3))),
        (MonotoneMap(2, 3, (0, 2, 3)), MonotoneMap(2, 3, (0, 1, 3))),
    ],
)
def test_witness_defeats_given_cospan(cospan):
    """Test the oriented witness admits no comparison map."""
    cocone = pushout_failure_witness(NO_PUSHOUT_SPAN, against=cospan)
    assert count_factorizations(cospan, cocone) == 0
    assert induced_map(cospan, cocone) is None


def test_witness_requires_missing_pushout():
    """Test asking for a witness of a span with pushout fails."""
    with pytest.raises(HasPushout):
        pushout_failure_witness(PUSHOUT_SPAN)


def test_witness_rejects_non_commuting_cospan():
    """Test the candidate cospan must complete the span."""
    cospan = (MonotoneMap(2, 3, (0, 1, 3)), MonotoneMap(2, 3, (1, 2, 3)))
    with pytest.raises(NonCommuting):
        pushout_failure_witness(NO_PUSHOUT_SPAN, against=cospan)


# -----------------------------------------------------------------------------
# 4. Tests for balanced squares
# -----------------------------------------------------------------------------


def test_balanced_completion_places_left_first():
    """Test the completion of (d^1, d^1) puts [p] elements first."""
    square = balanced_completion(NO_PUSHOUT_SPAN)
    assert square.h == MonotoneMap(2, 3, (0, 1, 3))
    assert square.k == MonotoneMap(2, 3, (0, 2, 3))
    assert is_balanced(square)


def test_balanced_completion_of_pushout_span_is_pushout():
    """Test the completion agrees with the pushout when one exists."""
    assert balanced_completion(PUSHOUT_SPAN) == compute_pushout(PUSHOUT_SPAN)


def test_balanced_completion_needs_cofaces():
    """Test a codegeneracy leg is refused."""
    span = Span(generating_codegeneracy(0, 0), generating_coface(2, 0))
    with pytest.raises(NotBalanced):
        balanced_completion(span)


def test_factor_balanced_grid():
    """Test a square with apex [4] factors into a 2x2 grid."""
    square = Square(
        MonotoneMap(0, 2, (0,)),
        MonotoneMap(0, 2, (0,)),
        MonotoneMap(2, 4, (0, 1, 2)),
        MonotoneMap(2, 4, (0, 3, 4)),
    )
    grid = factor_balanced(square)
    assert (grid.rows, grid.cols) == (defect(square.g), defect(square.f))
    assert grid.is_rectangular
    assert grid.composite == square
    for cell in grid.leaves():
        assert is_balanced(cell)
        assert cell.n == cell.m + 2


def test_factor_balanced_single_cell_is_basic():
    """Test the smallest nontrivial balanced square is its own grid."""
    square = basic_coface_square(2, 1, 2)
    grid = factor_balanced(square)
    assert grid.cells == ((square,),)


def test_factor_balanced_rejects_trivial():
    """Test a trivial square has no basic factorization."""
    with pytest.raises(TrivialSquare):
        factor_balanced(Square.trivial_on(generating_coface(1, 0)))


def test_factor_balanced_rejects_unbalanced():
    """Test a pushout with a codegeneracy is not balanced."""
    square = compute_pushout(
        Span(generating_coface(2, 1), generating_codegeneracy(0, 0))
    )
    with pytest.raises(NotBalanced):
        factor_balanced(square)


# -----------------------------------------------------------------------------
# 5. Tests for pushout factorizations
# -----------------------------------------------------------------------------


def test_factor_into_basic_recomposes():
    """Test the basic grid of a pushout recomposes to it."""
    span = Span(MonotoneMap(2, 2, (0, 0, 2)), generating_coface(3, 1))
    square = compute_pushout(span)
    grid = factor_into_basic(square)
    assert grid.composite == square
    for cell in grid.leaves():
        assert cell.is_trivial or (
            defect(cell.f) <= 1 and defect(cell.g) <= 1
        )


def test_factor_into_basic_rejects_non_pushout():
    """Test a balanced square that is no pushout cannot be factored."""
    with pytest.raises(NotPushout):
        factor_into_basic(basic_coface_square(2, 0, 1))


def test_factor_pushout_horizontal():
    """Test splitting the top edge splits the pushout square."""
    span = Span(MonotoneMap(0, 2, (0,)), identity(0))
    square = compute_pushout(span)
    f0, f1 = MonotoneMap(0, 1, (0,)), generating_coface(2, 2)
    left, right = factor_pushout_horizontal(square, f0, f1)
    assert is_pushout_square(left)
    assert is_pushout_square(right)
    assert left.hcompose(right) == square


# -----------------------------------------------------------------------------
# 6. Tests for 'catalog' and 'basic_kind'
# -----------------------------------------------------------------------------


def test_catalog_basic_coface_order():
    """Test the basic coface squares of [2] in catalogue order."""
    entries = list(catalog("basic_coface", 2))
    assert [(e.params["i"], e.params["j"]) for e in entries] == [
        (0, 1),
        (0, 2),
        (1, 2),
    ]
    assert [e.kind for e in entries] == [
        BasicKind.COFACE_ADJACENT,
        BasicKind.COFACE_PAIR,
        BasicKind.COFACE_ADJACENT,
    ]


@pytest.mark.parametrize("n", [1, 2])
def test_catalog_basic_pushouts_are_pushouts(n):
    """Test every listed basic pushout is a pushout of its span."""
    entries = list(catalog("basic_pushout", n))
    assert entries
    assert all(is_pushout_square(e.square) for e in entries)


def test_catalog_generator_lists():
    """Test both generator lists have eight squares."""
    assert len(list(catalog("generators_pushout"))) == 8
    assert len(list(catalog("generators_balanced"))) == 8


def test_catalog_rejects_bad_requests():
    """Test unknown kinds and missing parameters are refused."""
    with pytest.raises(ValueError, match="Unknown catalogue"):
        list(catalog("nonsense", 2))
    with pytest.raises(IndexOutOfRange):
        list(catalog("basic_coface", 1))
    with pytest.raises(IndexOutOfRange):
        list(catalog("mixed"))


def test_basic_kind_recognises_mirrors():
    """Test a basic coface square and its mirror share a kind."""
    square = basic_coface_square(3, 0, 2)
    assert basic_kind(square) == BasicKind.COFACE_PAIR
    assert basic_kind(square.mirror()) == BasicKind.COFACE_PAIR


def test_basic_kind_mixed_lower():
    """Test a mixed lower square is classified."""
    assert basic_kind(mixed_lower_square(1, 0, 1)) == BasicKind.MIXED_LOWER


def test_example_pushout_is_basic():
    """Test the example pushout is the basic coface square (3, 0, 2)."""
    square = compute_pushout(PUSHOUT_SPAN)
    assert square == basic_coface_square(3, 0, 2)
    assert basic_kind(square) == BasicKind.COFACE_PAIR


def test_basic_kind_none_for_composites():
    """Test a pushout with a defect two leg is not basic."""
    span = Span(MonotoneMap(2, 2, (0, 0, 2)), generating_coface(3, 1))
    assert basic_kind(compute_pushout(span)) is None
