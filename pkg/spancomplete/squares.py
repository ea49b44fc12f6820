"""Pushouts and balanced squares in the simplex category.

A span ``(f, g)`` has a pushout exactly when three conditions hold: no
position ``i`` makes both legs jump by more than one, some leg preserves
the minimum, and some leg preserves the maximum. The pushout itself is
assembled component by component over the canonical vee decomposition of
the span source, where every component span is one of four minimal
shapes.

Balanced squares are commuting squares of coface maps that are pushouts of
finite sets; they factor into grids of basic coface squares.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import StrEnum

from networkx.utils import UnionFind

from .delta import (
    MonotoneMap,
    compose,
    defect,
    factor_into_generators,
    generating_codegeneracy,
    generating_coface,
    identity,
    is_codegeneracy,
    is_coface,
    is_efficient,
    is_generator,
    is_identity,
    missing_values,
    repeated_positions,
    subset_inclusion,
)
from .diagrams import Grid, Span, Square
from .exceptions import (
    DomainMismatch,
    HasPushout,
    IndexOutOfRange,
    InefficientFactorization,
    NonCommuting,
    NoPushout,
    NotBalanced,
    NotPushout,
    TrivialSquare,
)
from .vee import canonical, decompose_span, vee_product_squares

logger = logging.getLogger(__name__)

CONDITION_NAMES = {1: "inner", 2: "minimum", 3: "maximum"}
MAX_NESTING = 4

Cospan = tuple[MonotoneMap, MonotoneMap]


# -----------------------------------------------------------------------------
# Pushout existence and construction
# -----------------------------------------------------------------------------


def pushout_violation(span: Span) -> tuple[int, int] | None:
    """Find the first failing pushout condition.

    Parameters
    ----------
    span : Span
        The span ``(f, g)``.

    Returns
    -------
    tuple of int or None
        ``(condition, index)`` with condition 1 (both legs jump by more
        than one at ``index``), 2 (neither leg preserves the minimum) or
        3 (neither preserves the maximum); None when a pushout exists.

    """
    f, g = span.f, span.g
    for i in range(1, span.m + 1):
        if f(i) > f(i - 1) + 1 and g(i) > g(i - 1) + 1:
            return (1, i)
    if f(0) != 0 and g(0) != 0:
        return (2, 0)
    if f(span.m) != span.p and g(span.m) != span.q:
        return (3, span.m)
    return None


def has_pushout(span: Span) -> bool:
    """Whether the span has a pushout in the simplex category."""
    return pushout_violation(span) is None


def _component_pushout(f: MonotoneMap, g: MonotoneMap) -> Square:
    """Pushout of one component span of the canonical decomposition."""
    if is_identity(f):
        return Square(f, g, g, identity(g.cod))
    if is_identity(g):
        return Square(f, g, identity(f.cod), f)
    if f.cod == 0:
        return Square(f, g, identity(0), MonotoneMap.constant(g.cod, 0, 0))
    if g.cod == 0:
        return Square(f, g, MonotoneMap.constant(f.cod, 0, 0), identity(0))
    msg = f"Component span ({f}, {g}) has no pushout"
    raise NoPushout(msg, condition=1, index=0)


def compute_pushout(span: Span) -> Square:
    """Compute the pushout square of a span.

    Parameters
    ----------
    span : Span
        A span satisfying `has_pushout`.

    Returns
    -------
    Square
        The unique pushout square with this span.

    """
    violation = pushout_violation(span)
    if violation is not None:
        condition, index = violation
        msg = (
            f"Span ({span.f}, {span.g}) has no pushout: the "
            f"{CONDITION_NAMES[condition]} condition fails at {index}"
        )
        raise NoPushout(msg, condition=condition, index=index)
    parts = [
        _component_pushout(s.f, s.g)
        for s in decompose_span(span, canonical(span.m))
    ]
    logger.debug("Pushout assembled from %d components", len(parts))
    return vee_product_squares(parts)


def is_jointly_surjective(h: MonotoneMap, k: MonotoneMap) -> bool:
    """Whether the images of ``h`` and ``k`` cover their codomain."""
    return len(h.image | k.image) == h.cod + 1


def induced_map(cospan: Cospan, cocone: Cospan) -> MonotoneMap | None:
    """Find a map from the cospan's apex through which a cocone factors.

    Parameters
    ----------
    cospan : tuple of MonotoneMap
        ``(h, k)`` into ``[n]``.
    cocone : tuple of MonotoneMap
        ``(phi, psi)`` into ``[N]`` with the same domains as ``h``, ``k``.

    Returns
    -------
    MonotoneMap or None
        Some ``gamma: [n] -> [N]`` with ``gamma ∘ h == phi`` and
        ``gamma ∘ k == psi``; unique when the cospan is jointly
        surjective. None when no such map exists.

    """
    h, k = cospan
    phi, psi = cocone
    assigned: dict[int, int] = {}
    for leg, target in ((h, phi), (k, psi)):
        for x, y in zip(leg.values, target.values, strict=True):
            if assigned.setdefault(x, y) != y:
                return None
    values = []
    current = 0
    for x in range(h.cod + 1):
        if x in assigned:
            if assigned[x] < current:
                return None
            current = assigned[x]
        values.append(current)
    return MonotoneMap(h.cod, phi.cod, tuple(values))


def pushout_failure_witness(
    span: Span, against: Cospan | None = None
) -> Cospan:
    """Build a cocone into ``[1]`` that defeats candidate pushouts.

    The cocone is built on the first failing component of the span and
    extended by constants elsewhere. A candidate cospan ``(h, k)`` is
    defeated when no map ``gamma`` satisfies ``gamma ∘ h == phi`` and
    ``gamma ∘ k == psi``. Each of the two possible orientations defeats
    the candidates on one side of the failing component; passing
    ``against`` picks the orientation that defeats that cospan.

    Parameters
    ----------
    span : Span
        A span without pushout.
    against : tuple of MonotoneMap, optional
        A commuting cospan completing the span.

    Returns
    -------
    tuple of MonotoneMap
        ``(phi, psi)`` with ``phi ∘ f == psi ∘ g``.

    """
    violation = pushout_violation(span)
    if violation is None:
        msg = f"Span ({span.f}, {span.g}) has a pushout"
        raise HasPushout(msg)
    if against is not None:
        h, k = against
        if compose(h, span.f) != compose(k, span.g):
            msg = f"Cospan ({h}, {k}) does not complete the span"
            raise NonCommuting(msg)
    condition, index = violation
    f, g = span.f, span.g
    p, q = span.p, span.q

    def step(size: int, above: int) -> tuple[int, ...]:
        return tuple(int(x > above) for x in range(size + 1))

    if condition == 1:
        a, b = f(index - 1), f(index)
        c, d = g(index - 1), g(index)
        early = against is None or against[0](a + 1) <= against[1](c + 1)
        phi, psi = (step(p, a), step(q, d - 1)) if early else (
            step(p, b - 1),
            step(q, c),
        )
    elif condition == 3:
        a, c = f(index), g(index)
        early = against is None or against[0](a + 1) <= against[1](c + 1)
        phi, psi = (step(p, a), (0,) * (q + 1)) if early else (
            (0,) * (p + 1),
            step(q, c),
        )
    else:
        a, c = f(0), g(0)
        early = against is None or against[0](a - 1) >= against[1](c - 1)
        phi, psi = (step(p, a - 1), (1,) * (q + 1)) if early else (
            (1,) * (p + 1),
            step(q, c - 1),
        )
    logger.debug(
        "Witness for the %s condition at %d", CONDITION_NAMES[condition], index
    )
    return MonotoneMap(p, 1, phi), MonotoneMap(q, 1, psi)


def _require_commuting(square: Square) -> None:
    if not square.commutes:
        msg = f"Square {square} does not commute"
        raise NonCommuting(msg)


def is_pushout_square(square: Square) -> bool:
    """Whether a commuting square is a pushout."""
    _require_commuting(square)
    span = square.span
    return has_pushout(span) and compute_pushout(span) == square


def is_balanced(square: Square) -> bool:
    """Whether a commuting square is a balanced square of coface maps.

    Parameters
    ----------
    square : Square
        A commuting square.

    Returns
    -------
    bool
        True when all edges are cofaces, ``h`` and ``k`` are jointly
        surjective and ``p + q == m + n``.

    """
    _require_commuting(square)
    if not all(is_coface(edge) for edge in square.maps):
        logger.debug("Square has an edge that is not a coface")
        return False
    return (
        is_jointly_surjective(square.h, square.k)
        and square.p + square.q == square.m + square.n
    )


def covers_spine(h: MonotoneMap, k: MonotoneMap) -> bool:
    """Whether every edge ``{i, i+1}`` of the apex lies in one image."""
    h_image, k_image = h.image, k.image
    return all(
        {i, i + 1} <= h_image or {i, i + 1} <= k_image for i in range(h.cod)
    )


def spine_condition(square: Square) -> bool:
    """Whether the cospan of a square covers the spine of ``[n]``."""
    return covers_spine(square.h, square.k)


def is_set_pushout(square: Square) -> bool:
    """Whether a commuting square is a pushout of underlying finite sets.

    Parameters
    ----------
    square : Square
        A commuting square.

    Returns
    -------
    bool
        True when ``[p]`` and ``[q]`` glued along ``f(i) ~ g(i)`` map
        bijectively onto ``[n]``.

    """
    _require_commuting(square)
    classes = UnionFind()
    for x in range(square.p + 1):
        classes[("p", x)]
    for y in range(square.q + 1):
        classes[("q", y)]
    for x, y in zip(square.f.values, square.g.values, strict=True):
        classes.union(("p", x), ("q", y))
    blocks = list(classes.to_sets())
    return len(blocks) == square.n + 1 and is_jointly_surjective(
        square.h, square.k
    )


def is_concrete_pushout(square: Square) -> bool:
    """Whether a square is a pushout that is also a pushout of sets."""
    return is_pushout_square(square) and is_set_pushout(square)


def defect_monotone_holds(square: Square) -> bool:
    """Check ``defect(k) <= defect(f)`` when ``f`` is a coface or ``g`` a
    codegeneracy; vacuously true otherwise.
    """
    if is_coface(square.f) or is_codegeneracy(square.g):
        return defect(square.k) <= defect(square.f)
    return True


def balanced_completion(span: Span) -> Square:
    """Complete a span of cofaces to a balanced square.

    In each gap between shared elements, the free elements of ``[p]`` are
    placed before those of ``[q]``. When the span has a pushout this is
    the pushout.

    Parameters
    ----------
    span : Span
        Span of coface maps.

    Returns
    -------
    Square
        A balanced square on the span.

    """
    f, g = span.f, span.g
    if not (is_coface(f) and is_coface(g)):
        msg = f"Span ({f}, {g}) is not a span of cofaces"
        raise NotBalanced(msg)
    h: list[int] = []
    k: list[int] = []
    level = 0
    for i in range(span.m + 1):
        while len(h) < f(i):
            h.append(level)
            level += 1
        while len(k) < g(i):
            k.append(level)
            level += 1
        h.append(level)
        k.append(level)
        level += 1
    while len(h) <= span.p:
        h.append(level)
        level += 1
    while len(k) <= span.q:
        k.append(level)
        level += 1
    n = level - 1
    return Square(f, g, MonotoneMap(span.p, n, h), MonotoneMap(span.q, n, k))


# -----------------------------------------------------------------------------
# Factorizations
# -----------------------------------------------------------------------------


def factor_pushout_horizontal(
    square: Square, f0: MonotoneMap, f1: MonotoneMap
) -> tuple[Square, Square]:
    """Split a pushout square along an efficient factorization of its top.

    Parameters
    ----------
    square : Square
        A pushout square.
    f0, f1 : MonotoneMap
        Maps with ``square.f == f1 ∘ f0``.

    Returns
    -------
    tuple of Square
        Left and right pushout squares whose horizontal composite is
        ``square``.

    """
    if not is_pushout_square(square):
        msg = f"Square {square} is not a pushout"
        raise NotPushout(msg)
    if compose(f1, f0) != square.f:
        msg = f"{f1} after {f0} is not the top edge {square.f}"
        raise DomainMismatch(msg)
    if not is_efficient(f1, f0):
        msg = f"Factorization {f1} after {f0} is not efficient"
        raise InefficientFactorization(msg)
    left = compute_pushout(Span(f0, square.g))
    k1 = induced_map(
        (left.h, left.k), (compose(square.h, f1), square.k)
    )
    if k1 is None:
        msg = f"No comparison map out of the left pushout {left}"
        raise NotPushout(msg)
    return left, Square(f1, left.h, square.h, k1)


def _factor_row(
    top: MonotoneMap, left: MonotoneMap, depth: int = 0
) -> list[Square | Grid]:
    """Pushout cells of ``(top, left)`` with ``top`` split into generators."""
    if depth > MAX_NESTING:
        msg = f"Could not factor the pushout of ({top}, {left})"
        raise NotPushout(msg)
    cells: list[Square | Grid] = []
    vertical = left
    for generator in factor_into_generators(top) or [top]:
        square = compute_pushout(Span(generator, vertical))
        if defect(vertical) > 1:
            column = _factor_row(vertical, generator, depth + 1)
            cells.append(Grid.row(column).mirror())
        else:
            cells.append(square)
        vertical = square.h
    return cells


def factor_into_basic(square: Square) -> Grid:
    """Factor a pushout square into basic and trivial pushouts.

    The left edge is split into generators first, one row each; every row
    is then split along the generators of its top edge, codegeneracies
    first. A cell whose left edge has defect above one is split again as
    a column.

    Parameters
    ----------
    square : Square
        A pushout square.

    Returns
    -------
    Grid
        Cells whose spans have legs of defect at most one.

    """
    if not is_pushout_square(square):
        msg = f"Square {square} is not a pushout"
        raise NotPushout(msg)
    rows = []
    top = square.f
    for generator in factor_into_generators(square.g) or [square.g]:
        row = _factor_row(top, generator)
        rows.append(tuple(row))
        top = Grid.row(row).composite.k
    return Grid(tuple(rows))


def factor_balanced(square: Square) -> Grid:
    """Factor a nontrivial balanced square into basic coface squares.

    The corners of the grid are the subsets ``M ∪ Q_r ∪ P_c`` of ``[n]``,
    where ``M`` is the image of the span source, and ``P_c`` / ``Q_r`` are
    the first ``c`` / ``r`` elements hit only by ``h`` / only by ``k``.

    Parameters
    ----------
    square : Square
        A balanced, nontrivial square.

    Returns
    -------
    Grid
        A rectangular grid with ``defect(g)`` rows and ``defect(f)``
        columns.

    """
    if not is_balanced(square):
        msg = f"Square {square} is not balanced"
        raise NotBalanced(msg)
    if square.is_trivial:
        msg = f"Square {square} is trivial"
        raise TrivialSquare(msg)
    shared = set(compose(square.h, square.f).values)
    only_h = sorted(square.h.image - shared)
    only_k = sorted(square.k.image - shared)

    def corner(r: int, c: int) -> set[int]:
        return shared | set(only_k[:r]) | set(only_h[:c])

    cells = tuple(
        tuple(
            Square(
                subset_inclusion(corner(r, c), corner(r, c + 1)),
                subset_inclusion(corner(r, c), corner(r + 1, c)),
                subset_inclusion(corner(r, c + 1), corner(r + 1, c + 1)),
                subset_inclusion(corner(r + 1, c), corner(r + 1, c + 1)),
            )
            for c in range(len(only_h))
        )
        for r in range(len(only_k))
    )
    return Grid(cells)


# -----------------------------------------------------------------------------
# Basic squares
# -----------------------------------------------------------------------------


class BasicKind(StrEnum):
    """Families of basic squares."""

    COFACE_PAIR = "coface_pair"
    COFACE_ADJACENT = "coface_adjacent"
    MIXED_LOWER = "mixed_lower"
    MIXED_COLLAPSE = "mixed_collapse"
    MIXED_UPPER = "mixed_upper"
    CODEGENERACY_PAIR = "codegeneracy_pair"
    CODEGENERACY_DIAGONAL = "codegeneracy_diagonal"


def _check(
    condition: bool,  # noqa: FBT001
    family: str,
    **params: int,
) -> None:
    if not condition:
        msg = f"No {family} square with parameters {params}"
        raise IndexOutOfRange(msg)


def basic_coface_square(n: int, i: int, j: int) -> Square:
    """Square ``d^i, d^{j-1}`` over ``[n-2]`` into ``[n]``, ``i < j``.

    Parameters
    ----------
    n : int
        Apex ordinal, at least 2.
    i, j : int
        ``0 <= i < j <= n``.

    Returns
    -------
    Square
        ``(d^{n-1,i}, d^{n-1,j-1}, d^{n,j}, d^{n,i})``.

    """
    _check(n >= 2 and 0 <= i < j <= n, "basic coface", n=n, i=i, j=j)
    return Square(
        generating_coface(n - 1, i),
        generating_coface(n - 1, j - 1),
        generating_coface(n, j),
        generating_coface(n, i),
    )


def mixed_lower_square(n: int, i: int, j: int) -> Square:
    """Pushout of ``d^i: [n] -> [n+1]`` and ``s^{j-1}``, ``i < j``."""
    _check(n >= 1 and 0 <= i < j <= n, "mixed lower", n=n, i=i, j=j)
    return Square(
        generating_coface(n + 1, i),
        generating_codegeneracy(n - 1, j - 1),
        generating_codegeneracy(n, j),
        generating_coface(n, i),
    )


def mixed_collapse_square(n: int, i: int) -> Square:
    """Pushout of ``d^{i+1}: [n+1] -> [n+2]`` and ``s^i: [n+1] -> [n]``."""
    _check(n >= 0 and 0 <= i <= n, "mixed collapse", n=n, i=i)
    return Square(
        generating_coface(n + 2, i + 1),
        generating_codegeneracy(n, i),
        compose(
            generating_codegeneracy(n, i),
            generating_codegeneracy(n + 1, i),
        ),
        identity(n),
    )


def mixed_upper_square(n: int, i: int, j: int) -> Square:
    """Pushout of ``d^{i+1}: [n] -> [n+1]`` and ``s^j``, ``j < i``."""
    _check(n >= 1 and 0 <= j < i <= n, "mixed upper", n=n, i=i, j=j)
    return Square(
        generating_coface(n + 1, i + 1),
        generating_codegeneracy(n - 1, j),
        generating_codegeneracy(n, j),
        generating_coface(n, i),
    )


def codegeneracy_pair_square(n: int, i: int, j: int) -> Square:
    """Pushout of ``s^i`` and ``s^{j+1}`` out of ``[n+2]``, ``i <= j``."""
    _check(n >= 0 and 0 <= i <= j <= n, "codegeneracy pair", n=n, i=i, j=j)
    return Square(
        generating_codegeneracy(n + 1, i),
        generating_codegeneracy(n + 1, j + 1),
        generating_codegeneracy(n, j),
        generating_codegeneracy(n, i),
    )


def codegeneracy_diagonal_square(n: int, i: int) -> Square:
    """Pushout of ``s^i`` with itself, completed by identities."""
    _check(n >= 0 and 0 <= i <= n, "codegeneracy diagonal", n=n, i=i)
    s = generating_codegeneracy(n, i)
    return Square(s, s, identity(n), identity(n))


def basic_coface_parameters(
    square: Square,
) -> tuple[int, int, int, bool] | None:
    """Recognise a basic coface square.

    Parameters
    ----------
    square : Square
        Any square.

    Returns
    -------
    tuple or None
        ``(n, i, j, mirrored)`` when the square, or its mirror if
        ``mirrored``, equals ``basic_coface_square(n, i, j)``.

    """
    if not all(is_coface(e) and is_generator(e) for e in square.maps):
        return None
    n = square.n
    if n < 2:
        return None
    j = missing_values(square.h)[0]
    i = missing_values(square.k)[0]
    if i < j and square == basic_coface_square(n, i, j):
        return (n, i, j, False)
    if j < i and square.mirror() == basic_coface_square(n, j, i):
        return (n, j, i, True)
    return None


def _unmirrored_kind(square: Square) -> BasicKind | None:
    f, g, h, k = square.maps
    if not (is_generator(f) and is_generator(g)):
        return None
    if is_coface(f) and is_coface(g):
        found = basic_coface_parameters(square)
        if found is None or found[3]:
            return None
        _, i, j, _ = found
        if j == i + 1:
            return BasicKind.COFACE_ADJACENT
        return BasicKind.COFACE_PAIR
    if is_coface(f) and is_codegeneracy(g):
        top_missing = missing_values(f)[0]
        n = square.n
        if is_identity(k):
            i = top_missing - 1
            if 0 <= i <= n and square == mixed_collapse_square(n, i):
                return BasicKind.MIXED_COLLAPSE
            return None
        if not (is_generator(h) and is_codegeneracy(h)):
            return None
        j = repeated_positions(h)[0]
        lower = (n, top_missing, j)
        if 0 <= lower[1] < lower[2] <= n and square == mixed_lower_square(
            *lower
        ):
            return BasicKind.MIXED_LOWER
        upper = (n, top_missing - 1, j)
        if 0 <= upper[2] < upper[1] <= n and square == mixed_upper_square(
            *upper
        ):
            return BasicKind.MIXED_UPPER
        return None
    if is_codegeneracy(f) and is_codegeneracy(g):
        n = square.n
        if is_identity(h) and is_identity(k):
            i = repeated_positions(f)[0]
            if square == codegeneracy_diagonal_square(n, i):
                return BasicKind.CODEGENERACY_DIAGONAL
            return None
        if not (is_generator(h) and is_generator(k)):
            return None
        i = repeated_positions(k)[0]
        j = repeated_positions(h)[0]
        if i <= j and square == codegeneracy_pair_square(n, i, j):
            return BasicKind.CODEGENERACY_PAIR
    return None


def basic_kind(square: Square) -> BasicKind | None:
    """Classify a square as a member of a basic family, up to mirror."""
    return _unmirrored_kind(square) or _unmirrored_kind(square.mirror())


# -----------------------------------------------------------------------------
# Catalogue
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """A named square of a catalogue.

    Attributes
    ----------
    kind : str
        Family the square belongs to.
    params : dict of str to int
        Family parameters.
    square : Square
        The square; its mirror image is implied, not listed.
    self_mirror : bool
        Whether the square equals its own mirror.

    """

    kind: str
    square: Square
    params: dict[str, int] = field(default_factory=dict)

    @property
    def self_mirror(self) -> bool:
        """Whether the mirror image is the same square."""
        return self.square.mirror() == self.square


def _entry(kind: str, square: Square, **params: int) -> CatalogEntry:
    return CatalogEntry(kind=kind, square=square, params=params)


def _coface_entries(n: int, *, adjacent: bool) -> Iterator[CatalogEntry]:
    for j in range(1, n + 1):
        for i in range(j):
            if adjacent or i < j - 1:
                kind = (
                    BasicKind.COFACE_ADJACENT
                    if i == j - 1
                    else BasicKind.COFACE_PAIR
                )
                yield _entry(kind, basic_coface_square(n, i, j), n=n, i=i, j=j)


def _mixed_entries(n: int, *, collapse: bool = True) -> Iterator[CatalogEntry]:
    for j in range(1, n + 1):
        for i in range(j):
            square = mixed_lower_square(n, i, j)
            yield _entry(BasicKind.MIXED_LOWER, square, n=n, i=i, j=j)
    if collapse:
        for i in range(n + 1):
            square = mixed_collapse_square(n, i)
            yield _entry(BasicKind.MIXED_COLLAPSE, square, n=n, i=i)
    for i in range(1, n + 1):
        for j in range(i):
            square = mixed_upper_square(n, i, j)
            yield _entry(BasicKind.MIXED_UPPER, square, n=n, i=i, j=j)


def _codegeneracy_entries(n: int) -> Iterator[CatalogEntry]:
    for j in range(n + 1):
        for i in range(j + 1):
            square = codegeneracy_pair_square(n, i, j)
            yield _entry(BasicKind.CODEGENERACY_PAIR, square, n=n, i=i, j=j)
    for i in range(n + 1):
        square = codegeneracy_diagonal_square(n, i)
        yield _entry(BasicKind.CODEGENERACY_DIAGONAL, square, n=n, i=i)


def pushout_generators() -> list[CatalogEntry]:
    """Squares generating all pushouts under vee and composition."""
    d01, d11 = generating_coface(1, 0), generating_coface(1, 1)
    d21 = generating_coface(2, 1)
    s00 = generating_codegeneracy(0, 0)
    return [
        _entry("identity", Square.trivial_on(identity(0))),
        _entry("identity", Square.trivial_on(identity(1))),
        _entry("trivial", Square.trivial_on(d01)),
        _entry("trivial", Square.trivial_on(d11)),
        _entry("trivial", Square.trivial_on(s00)),
        _entry("trivial", Square.trivial_on(d21)),
        _entry(
            BasicKind.CODEGENERACY_DIAGONAL, codegeneracy_diagonal_square(0, 0)
        ),
        _entry(BasicKind.MIXED_COLLAPSE, mixed_collapse_square(0, 0)),
    ]


def balanced_generators() -> list[CatalogEntry]:
    """Squares generating all balanced squares under vee and composition."""
    d01, d11 = generating_coface(1, 0), generating_coface(1, 1)
    d21 = generating_coface(2, 1)
    return [
        _entry("identity", Square.trivial_on(identity(0))),
        _entry("identity", Square.trivial_on(identity(1))),
        _entry("trivial", Square.trivial_on(d01)),
        _entry("trivial", Square.trivial_on(d11)),
        _entry("trivial", Square.trivial_on(d21)),
        _entry(
            BasicKind.COFACE_ADJACENT,
            basic_coface_square(2, 0, 1).mirror(),
        ),
        _entry(
            BasicKind.COFACE_ADJACENT,
            basic_coface_square(2, 1, 2).mirror(),
        ),
        _entry(
            BasicKind.COFACE_ADJACENT,
            basic_coface_square(3, 1, 2).mirror(),
        ),
    ]


def minimal_vee_squares(p: int) -> list[CatalogEntry]:
    """The four component shapes pushouts are glued from, for ``[p]``."""
    top = MonotoneMap(1, p, (0, p))
    left_end = MonotoneMap.constant(0, p, p)
    right_end = MonotoneMap.constant(0, p, 0)
    collapse = Square(
        top,
        generating_codegeneracy(0, 0),
        MonotoneMap.constant(p, 0, 0),
        identity(0),
    )
    return [
        _entry("left_end", Square.trivial_on(left_end), p=p),
        _entry("middle", Square(top, identity(1), identity(p), top), p=p),
        _entry("middle_collapse", collapse, p=p),
        _entry("right_end", Square.trivial_on(right_end), p=p),
    ]


CATALOG_KINDS = (
    "basic_pushout",
    "basic_coface",
    "mixed",
    "codegeneracy",
    "concrete_pushout",
    "generators_pushout",
    "generators_balanced",
    "minimal_vee",
)


def catalog(kind: str, n: int | None = None) -> Iterator[CatalogEntry]:
    """Enumerate a catalogue of squares.

    Parameters
    ----------
    kind : str
        One of `CATALOG_KINDS`.
    n : int, optional
        Family parameter; required for every kind except the generator
        lists (``minimal_vee`` reads it as ``p``).

    Yields
    ------
    CatalogEntry
        Squares in a fixed order; mirrors are not repeated.

    """
    if kind == "generators_pushout":
        yield from pushout_generators()
        return
    if kind == "generators_balanced":
        yield from balanced_generators()
        return
    if kind not in CATALOG_KINDS:
        msg = f"Unknown catalogue {kind!r}; expected one of {CATALOG_KINDS}"
        raise ValueError(msg)
    if n is None or n < 0:
        msg = f"Catalogue {kind!r} needs a nonnegative parameter, got {n}"
        raise IndexOutOfRange(msg)
    if kind == "minimal_vee":
        yield from minimal_vee_squares(n)
    elif kind == "basic_coface":
        if n < 2:  # noqa: PLR2004
            msg = f"Basic coface squares need n >= 2, got {n}"
            raise IndexOutOfRange(msg)
        yield from _coface_entries(n, adjacent=True)
    elif kind == "mixed":
        yield from _mixed_entries(n) if n >= 1 else _collapse_only(n)
    elif kind == "codegeneracy":
        yield from _codegeneracy_entries(n)
    else:
        concrete = kind == "concrete_pushout"
        if n >= 2:  # noqa: PLR2004
            yield from _coface_entries(n, adjacent=False)
        if n >= 1:
            yield from _mixed_entries(n, collapse=not concrete)
        elif not concrete:
            yield from _collapse_only(n)
        yield from _codegeneracy_entries(n)


def _collapse_only(n: int) -> Iterator[CatalogEntry]:
    for i in range(n + 1):
        square = mixed_collapse_square(n, i)
        yield _entry(BasicKind.MIXED_COLLAPSE, square, n=n, i=i)
