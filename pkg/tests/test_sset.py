"""Tests for sset module."""

import pytest

from spancomplete.datasets import load_cyclic_group2, load_walking_arrow
from spancomplete.delta import MonotoneMap, generating_coface, identity
from spancomplete.diagrams import Square
from spancomplete.exceptions import (
    IncompatiblePair,
    IndexOutOfRange,
    InvalidCategory,
    InvalidSimplicialSet,
    NonCommuting,
    OutOfTruncation,
)
from spancomplete.schema import CategoryModel
from spancomplete.squares import basic_coface_square

# functions to test
from spancomplete.sset import (
    FinCategory,
    TruncatedSSet,
    apply_square,
    check_always_comp,
    check_forced_discrete,
    check_span_complete,
    classify,
    comp_contains,
    discrete_sset,
    evaluate,
    evaluation_mismatches,
    ex_contains,
    find_filler,
    horn_has_filler,
    horn_instances,
    is_2segal_restricted,
    is_discrete,
    is_inner_span_complete,
    is_kan,
    is_quasicategory,
    is_segal_nerve,
    is_span_complete,
    is_split,
    is_stiff,
    is_strong_pullback,
    is_weak_pullback,
    nerve,
    representable,
    segal_square,
    validate,
    weak_pullback_counterexample,
)


def _category(raw):
    return CategoryModel.model_validate(raw).to_domain()


def _broken_sset():
    return TruncatedSSet(
        1,
        {0: ("a", "b"), 1: ("e",)},
        {(1, 0): {"e": "a"}, (1, 1): {"e": "b"}},
        {(0, 0): {"a": "e", "b": "e"}},
    )


# -----------------------------------------------------------------------------
# 1. Tests for 'TruncatedSSet' and 'validate'
# -----------------------------------------------------------------------------


def test_truncated_sset_sorts_cells():
    """Test levels are stored in lexicographic order."""
    sset = discrete_sset(["q", "p"], 1)
    assert sset.level(0) == ("p", "q")
    with pytest.raises(OutOfTruncation):
        sset.level(2)


def test_truncated_sset_requires_total_tables():
    """Test a face map missing a cell is refused."""
    with pytest.raises(InvalidSimplicialSet):
        TruncatedSSet(
            1,
            {0: ("a",), 1: ("e", "f")},
            {(1, 0): {"e": "a"}, (1, 1): {"e": "a", "f": "a"}},
            {(0, 0): {"a": "e"}},
        )


def test_truncated_sset_rejects_missing_degeneracies():
    """Test every degeneracy key below the top level must be given."""
    with pytest.raises(InvalidSimplicialSet):
        TruncatedSSet(
            1,
            {0: ("a",), 1: ("e",)},
            {(1, 0): {"e": "a"}, (1, 1): {"e": "a"}},
        )


def test_validate_nerve_is_ok():
    """Test the nerve of a category satisfies every identity."""
    sset = nerve(_category(load_walking_arrow()), 3)
    report = validate(sset)
    assert report.ok
    assert report.to_frame().empty


def test_validate_reports_broken_identities():
    """Test a collapsing degeneracy breaks d s = id and injectivity."""
    report = validate(_broken_sset())
    assert not report.ok
    kinds = {v.kind for v in report.violations}
    assert kinds == {"ds_identity", "injective"}
    assert list(report.to_frame().columns) == ["kind", "n", "i", "j", "cell"]


# -----------------------------------------------------------------------------
# 2. Tests for 'evaluate'
# -----------------------------------------------------------------------------


def test_evaluate_generator_reads_table():
    """Test a coface acts by the matching face map."""
    sset = nerve(_category(load_walking_arrow()), 2)
    assert evaluate(sset, generating_coface(2, 1)) == sset.faces[(2, 1)]


def test_evaluate_composite_map():
    """Test the vertex map 0 -> [2] picks the source of the chain."""
    sset = nerve(_category(load_walking_arrow()), 2)
    action = evaluate(sset, MonotoneMap(0, 2, (0,)))
    assert action["a|id1"] == "0"
    assert evaluate(sset, identity(1)) == {c: c for c in sset.cells[1]}


def test_evaluate_rejects_maps_above_truncation():
    """Test maps into levels above the truncation fail."""
    sset = nerve(_category(load_walking_arrow()), 1)
    with pytest.raises(OutOfTruncation):
        evaluate(sset, generating_coface(2, 0))


def test_evaluation_words_agree_on_nerve():
    """Test both generator words act alike on a valid set."""
    sset = nerve(_category(load_cyclic_group2()), 3)
    assert evaluation_mismatches(sset, samples=50, seed=1) == []


# -----------------------------------------------------------------------------
# 3. Tests for squares of sets
# -----------------------------------------------------------------------------


def test_weak_pullback_counterexample():
    """Test the outer and right squares are weak pullbacks, the left not."""
    left, right, outer = weak_pullback_counterexample()
    assert not is_weak_pullback(left)
    assert is_weak_pullback(right)
    assert not is_strong_pullback(right)
    assert is_weak_pullback(outer)
    assert is_strong_pullback(outer)


def test_apply_square_corners():
    """Test the corner sets are the levels of the square's ordinals."""
    sset = nerve(_category(load_walking_arrow()), 2)
    image = apply_square(sset, basic_coface_square(2, 0, 2))
    assert image.a == sset.cells[2]
    assert image.d == sset.cells[0]
    assert image.commutes


def test_comp_and_ex_on_segal_square():
    """Test the vertex gluing square is a pullback for a nerve."""
    sset = nerve(_category(load_walking_arrow()), 2)
    square = segal_square(1, 1)
    assert comp_contains(sset, square)
    assert ex_contains(sset, square)


def test_comp_contains_rejects_non_commuting():
    """Test a non-commuting square is refused."""
    sset = nerve(_category(load_walking_arrow()), 2)
    square = Square(
        MonotoneMap(0, 1, (0,)),
        MonotoneMap(0, 1, (1,)),
        identity(1),
        identity(1),
    )
    with pytest.raises(NonCommuting):
        comp_contains(sset, square)


def test_segal_square_needs_positive_lengths():
    """Test a piece of length zero is refused."""
    assert segal_square(1, 2).n == 3
    with pytest.raises(IndexOutOfRange):
        segal_square(0, 1)


# -----------------------------------------------------------------------------
# 4. Tests for classifiers
# -----------------------------------------------------------------------------


def test_walking_arrow_is_not_span_complete():
    """Test the nerve of 0 -> 1 fails an adjacent coface square."""
    sset = nerve(_category(load_walking_arrow()), 3)
    assert is_quasicategory(sset)
    assert is_inner_span_complete(sset)
    assert is_segal_nerve(sset)
    assert not is_kan(sset)
    result = check_span_complete(sset)
    assert not result.holds
    assert result.dim == 3
    assert result.witness["family"] == "coface_adjacent"
    assert (result.witness["i"], result.witness["j"]) == (0, 1)
    assert result.witness["pair"] == ["id1", "a"]


def test_group_nerve_is_span_complete():
    """Test the nerve of a group passes the coface and horn checks."""
    sset = nerve(_category(load_cyclic_group2()), 4)
    assert is_kan(sset)
    assert is_span_complete(sset)
    assert is_segal_nerve(sset)


def test_discrete_set_passes_mixed_checks():
    """Test a constant set passes the mixed and restricted checks."""
    sset = discrete_sset(["p", "q"], 4)
    assert is_split(sset)
    assert is_stiff(sset)
    assert is_2segal_restricted(sset)


def test_nerve_is_restricted_2segal():
    """Test the nerve of a category passes the restricted 2-Segal check."""
    assert is_2segal_restricted(nerve(_category(load_walking_arrow()), 4))


@pytest.mark.parametrize(
    ("keep", "expected"),
    [(None, True), ([[0, 1], [1, 2], [0, 2]], False)],
)
def test_segal_condition_on_representables(keep, expected):
    """Test the simplex is a nerve and its boundary is not."""
    assert is_segal_nerve(representable(2, 2, keep=keep)) is expected


def test_always_comp_holds_for_nerve():
    """Test trivial, coface corner and codegeneracy squares hold."""
    sset = nerve(_category(load_walking_arrow()), 2)
    assert check_always_comp(sset).holds


def test_forced_discrete_on_discrete_set():
    """Test a constant set passes every discreteness family."""
    sset = discrete_sset(["p", "q"], 3)
    assert is_discrete(sset)
    check = check_forced_discrete(sset)
    assert check.families_hold
    assert check.discrete
    assert check.consistent


def test_forced_discrete_fails_for_walking_arrow():
    """Test the adjacent coface family fails and nothing is forced."""
    check = check_forced_discrete(nerve(_category(load_walking_arrow()), 2))
    assert not check.families_hold
    assert not check.discrete
    assert check.consistent
    assert check.witness is not None


def test_classify_order():
    """Test classify runs every classifier in a fixed order."""
    sset = nerve(_category(load_walking_arrow()), 2)
    names = [result.name for result in classify(sset)]
    assert names == [
        "span_complete",
        "inner_span_complete",
        "segal_nerve",
        "split",
        "stiff",
        "2segal_restricted",
        "forced_discrete",
        "always_comp",
        "kan",
        "quasicategory",
    ]


# -----------------------------------------------------------------------------
# 5. Tests for fillers and horns
# -----------------------------------------------------------------------------


def test_find_filler_in_nerve():
    """Test the span of a and id1 fills with the chain a|id1."""
    sset = nerve(_category(load_walking_arrow()), 2)
    assert find_filler(sset, 2, 0, 2, "a", "id1") == "a|id1"
    assert find_filler(sset, 2, 0, 2, "a", "id1", count=True) == 1


def test_find_filler_rejects_incompatible_pair():
    """Test faces that do not meet are refused."""
    sset = nerve(_category(load_walking_arrow()), 2)
    with pytest.raises(IncompatiblePair):
        find_filler(sset, 2, 0, 2, "a", "a")
    with pytest.raises(IndexOutOfRange):
        find_filler(sset, 2, 2, 1, "a", "id1")


def test_horn_instances_are_compatible():
    """Test every inner 2-horn of a nerve has a filler."""
    sset = nerve(_category(load_walking_arrow()), 2)
    horns = list(horn_instances(sset, 2, 1))
    assert len(horns) == 4
    assert all(horn_has_filler(sset, 2, 1, horn) for horn in horns)


def test_horn_has_filler_rejects_listed_missing_face():
    """Test a horn may not list the face it misses."""
    sset = nerve(_category(load_walking_arrow()), 2)
    with pytest.raises(IndexOutOfRange):
        horn_has_filler(sset, 2, 1, {1: "a"})


# -----------------------------------------------------------------------------
# 6. Tests for 'FinCategory', 'nerve' and 'representable'
# -----------------------------------------------------------------------------


def test_nerve_cells():
    """Test vertices, arrows and chains of the walking arrow."""
    sset = nerve(_category(load_walking_arrow()), 2)
    assert sset.cells[0] == ("0", "1")
    assert sset.cells[1] == ("a", "id0", "id1")
    assert len(sset.cells[2]) == 4
    assert sset.face(1, 0, "a") == "1"
    assert sset.face(1, 1, "a") == "0"
    assert sset.degeneracy(1, 0, "a") == "id0|a"


def test_category_requires_composites():
    """Test a composable pair without a composite is refused."""
    with pytest.raises(InvalidCategory):
        FinCategory(
            ("0", "1", "2"),
            {
                "id0": ("0", "0"),
                "id1": ("1", "1"),
                "id2": ("2", "2"),
                "f": ("0", "1"),
                "g": ("1", "2"),
            },
            {"0": "id0", "1": "id1", "2": "id2"},
        )


def test_category_rejects_separator_in_names():
    """Test names may not contain the chain separator."""
    with pytest.raises(InvalidCategory):
        FinCategory(("a|b",), {"e": ("a|b", "a|b")}, {"a|b": "e"})


def test_representable_boundary_cells():
    """Test the boundary of the 2-simplex misses 0-1-2."""
    sset = representable(2, 2, keep=[[0, 1], [1, 2], [0, 2]])
    assert "0-1-2" not in sset.cells[2]
    assert "0-1-1" in sset.cells[2]
    assert validate(sset).ok
