"""Simplicial complexes, acyclicity and fillers of acyclic configurations.

A complex is stored by its maximal simplices (facets); membership of any
other subset is decided by containment in a facet. Directed complexes live
on the ground set ``{0, ..., n}`` with its natural order and additionally
care about the spine edges ``{v, v + 1}``.

Graham reduction, chordality of the 1-skeleton together with filled
spheres, and the running intersection property are three equivalent
acyclicity tests. The last one drives `fill_configuration`, which glues
simplices of a `FillerProvider` along an acyclic configuration one span at
a time.
"""

from __future__ import annotations

import itertools
import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from typing import Any

import networkx as nx

from .delta import is_identity, subset_inclusion
from .diagrams import Square
from .exceptions import (
    IncompatibleAssignment,
    InvalidComplex,
    NoFiller,
    NotAcyclic,
    NotATriangulation,
)
from .squares import basic_coface_parameters, factor_balanced

logger = logging.getLogger(__name__)

Facet = frozenset[int]


def _maximal(sets: Iterable[Facet]) -> frozenset[Facet]:
    pool = {s for s in sets if s}
    return frozenset(s for s in pool if not any(s < other for other in pool))


@dataclass(frozen=True)
class Complex:
    """A simplicial complex given by its facets.

    Attributes
    ----------
    ground : frozenset of int
        Vertex set; the union of the facets.
    facets : frozenset of frozenset of int
        Maximal simplices. Non-maximal and empty sets passed in are
        dropped.

    """

    ground: frozenset[int]
    facets: frozenset[Facet]

    def __post_init__(self) -> None:
        """Normalise the facets and check they cover the ground set."""
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(
            self, "facets", _maximal(frozenset(f) for f in self.facets)
        )
        covered = frozenset().union(*self.facets)
        if covered != self.ground:
            msg = (
                f"Facets cover {sorted(covered)}, not the ground set "
                f"{sorted(self.ground)}"
            )
            raise InvalidComplex(msg)

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> Complex:
        """Build a complex whose ground set is the union of ``facets``."""
        sets = [frozenset(f) for f in facets]
        return cls(frozenset().union(*sets), frozenset(sets))

    @property
    def is_empty(self) -> bool:
        """Whether the complex has no vertices."""
        return not self.ground

    def sorted_facets(self) -> list[Facet]:
        """Facets ordered by their sorted vertex lists."""
        return sorted(self.facets, key=sorted)

    def remove_vertex(self, v: int) -> Complex:
        """Delete ``v`` from every simplex and from the ground set."""
        return Complex(
            self.ground - {v}, frozenset(f - {v} for f in self.facets)
        )


@dataclass(frozen=True)
class DirectedComplex(Complex):
    """A complex on the totally ordered ground set ``{0, ..., n}``."""

    def __post_init__(self) -> None:
        """Additionally require the ground set to be an ordinal."""
        Complex.__post_init__(self)
        if self.ground != frozenset(range(len(self.ground))):
            msg = f"Ground set {sorted(self.ground)} is not {{0, ..., n}}"
            raise InvalidComplex(msg)

    @property
    def n(self) -> int:
        """Top vertex."""
        return len(self.ground) - 1

    def remove_vertex(self, v: int) -> DirectedComplex:
        """Delete ``v`` and shift the vertices above it down by one."""

        def shift(facet: Facet) -> Facet:
            return frozenset(w - (w > v) for w in facet if w != v)

        return DirectedComplex(
            frozenset(range(self.n)),
            frozenset(shift(f) for f in self.facets),
        )


# -----------------------------------------------------------------------------
# Queries
# -----------------------------------------------------------------------------


def membership(complex_: Complex, simplex: Iterable[int]) -> bool:
    """Whether ``simplex`` is contained in some facet."""
    simplex = frozenset(simplex)
    return any(simplex <= facet for facet in complex_.facets)


def maximal_simplices(complex_: Complex) -> list[list[int]]:
    """Facets as sorted vertex lists, in lexicographic order."""
    return [sorted(f) for f in complex_.sorted_facets()]


def skeleton1(complex_: Complex) -> nx.Graph:
    """The graph of vertices and 1-simplices."""
    graph = nx.Graph()
    graph.add_nodes_from(sorted(complex_.ground))
    for facet in complex_.facets:
        graph.add_edges_from(itertools.combinations(sorted(facet), 2))
    return graph


def is_connected(complex_: Complex) -> bool:
    """Whether the 1-skeleton is connected; False for the empty complex."""
    if complex_.is_empty:
        return False
    return nx.is_connected(skeleton1(complex_))


def is_extremal(complex_: Complex, v: int) -> bool:
    """Whether ``v`` lies in exactly one facet."""
    return sum(1 for facet in complex_.facets if v in facet) == 1


def spheres_filled(complex_: Complex) -> bool:
    """Whether every combinatorial sphere in the complex has a filler.

    Parameters
    ----------
    complex_ : Complex
        The complex.

    Returns
    -------
    bool
        False when some ``A`` with at least 3 vertices has all proper
        subsets in the complex but is not itself a member.

    """
    graph = skeleton1(complex_)
    for clique in nx.enumerate_all_cliques(graph):
        if len(clique) < 3:  # noqa: PLR2004
            continue
        boundary = all(
            membership(complex_, face)
            for face in itertools.combinations(clique, len(clique) - 1)
        )
        if boundary and not membership(complex_, clique):
            logger.debug("Unfilled sphere on %s", sorted(clique))
            return False
    return True


# -----------------------------------------------------------------------------
# Chordality
# -----------------------------------------------------------------------------


def perfect_elimination_ordering(graph: nx.Graph) -> list[Any] | None:
    """Find a perfect elimination ordering by maximum cardinality search.

    Parameters
    ----------
    graph : networkx.Graph
        Any simple graph with sortable nodes.

    Returns
    -------
    list or None
        Vertices in elimination order, each simplicial among the vertices
        after it; None when the graph is not chordal.

    """
    weight = dict.fromkeys(graph.nodes, 0)
    visited: list[Any] = []
    position: dict[Any, int] = {}
    while weight:
        best = max(weight.values())
        v = min(u for u, w in weight.items() if w == best)
        del weight[v]
        position[v] = len(visited)
        visited.append(v)
        for u in graph.neighbors(v):
            if u in weight:
                weight[u] += 1
    for v in visited:
        earlier = [u for u in graph.neighbors(v) if position[u] < position[v]]
        for a, b in itertools.combinations(earlier, 2):
            if not graph.has_edge(a, b):
                return None
    return visited[::-1]


def is_chordal(graph: nx.Graph) -> bool:
    """Whether every cycle of length at least four has a chord."""
    return perfect_elimination_ordering(graph) is not None


# -----------------------------------------------------------------------------
# Graham reduction
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class GrahamResult:
    """Outcome of a Graham reduction.

    Attributes
    ----------
    residual : Complex
        What is left when no eligible vertex remains.
    order : tuple of int
        Eliminated vertices, as labelled in the input complex.

    """

    residual: Complex
    order: tuple[int, ...]


def _reduce(
    complex_: Complex,
    eligible: Callable[[Complex, int], bool],
    *,
    highest: bool = False,
    stop: Callable[[Complex], bool] = lambda c: c.is_empty,
) -> tuple[Complex, list[tuple[int, int, Facet]]]:
    """Eliminate eligible vertices until none is left.

    Returns the residual and, per step, the current label, the original
    label and the facet the vertex was removed from.
    """
    labels = sorted(complex_.ground)
    steps: list[tuple[int, int, Facet]] = []
    current = complex_
    while not stop(current):
        candidates = sorted(
            (v for v in current.ground if eligible(current, v)),
            reverse=highest,
        )
        if not candidates:
            break
        v = candidates[0]
        facet = next(f for f in current.facets if v in f)
        original = labels[v] if isinstance(current, DirectedComplex) else v
        if isinstance(current, DirectedComplex):
            labels.pop(v)
        steps.append((v, original, facet))
        logger.debug("Eliminating extremal vertex %d", original)
        current = current.remove_vertex(v)
    return current, steps


def graham_reduce(complex_: Complex) -> GrahamResult:
    """Remove extremal vertices, lowest first, until none remain.

    Parameters
    ----------
    complex_ : Complex
        The complex; directed complexes are reduced as undirected ones.

    Returns
    -------
    GrahamResult
        Empty residual exactly when the complex is Graham acyclic.

    """
    plain = Complex(complex_.ground, complex_.facets)
    residual, steps = _reduce(plain, is_extremal)
    return GrahamResult(residual, tuple(s[1] for s in steps))


def is_graham_acyclic(complex_: Complex) -> bool:
    """Whether Graham reduction empties the complex."""
    return graham_reduce(complex_).residual.is_empty


def has_spine(complex_: DirectedComplex) -> bool:
    """Whether every edge ``{i, i + 1}`` is a simplex."""
    return all(
        membership(complex_, (i, i + 1)) for i in range(complex_.n)
    )


def directed_eligible(complex_: DirectedComplex, v: int) -> bool:
    """Whether ``v`` is extremal and touches its spine neighbours."""
    if not is_extremal(complex_, v):
        return False
    if v > 0 and not membership(complex_, (v - 1, v)):
        return False
    return not (v < complex_.n and not membership(complex_, (v, v + 1)))


def directed_graham_reduce(complex_: DirectedComplex) -> GrahamResult:
    """Directed Graham reduction, lowest eligible vertex first.

    Vertices above a removed one are relabelled after each step; the
    recorded order uses the input labels. The reduction succeeds when a
    single vertex is left.
    """
    residual, steps = _reduce(
        complex_, directed_eligible, stop=lambda c: len(c.ground) <= 1
    )
    return GrahamResult(residual, tuple(s[1] for s in steps))


def is_directed_graham_acyclic(complex_: DirectedComplex) -> bool:
    """Whether directed Graham reduction ends at a single vertex."""
    return len(directed_graham_reduce(complex_).residual.ground) <= 1


# -----------------------------------------------------------------------------
# Running intersection orders
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class RipOrder:
    """Facets in an order with the running intersection property.

    Attributes
    ----------
    facets : tuple of frozenset of int
        ``T_1, ..., T_m``.
    witnesses : tuple of int or None
        For each ``T_k`` past the first, the smallest ``j < k`` with
        ``T_k ∩ (T_1 ∪ ... ∪ T_{k-1}) ⊆ T_j``, zero-based; None for the
        first facet.

    """

    facets: tuple[Facet, ...]
    witnesses: tuple[int | None, ...]

    def __len__(self) -> int:
        """Number of facets."""
        return len(self.facets)


def _witness(facets: list[Facet], k: int) -> int | None:
    if k == 0:
        return None
    seen = frozenset().union(*facets[:k])
    shared = facets[k] & seen
    return next((j for j in range(k) if shared <= facets[j]), None)


def _with_witnesses(facets: list[Facet]) -> RipOrder | None:
    witnesses = [_witness(facets, k) for k in range(len(facets))]
    if any(w is None for w in witnesses[1:]):
        return None
    return RipOrder(tuple(facets), tuple(witnesses))


def rip_order(complex_: Complex) -> RipOrder | None:
    """Order the facets with the running intersection property.

    The highest extremal vertex is eliminated first; the order is then
    rebuilt backwards, each step either enlarging the facet it shrank or
    appending it.

    Parameters
    ----------
    complex_ : Complex
        The complex.

    Returns
    -------
    RipOrder or None
        None when the complex is not Graham acyclic.

    """
    plain = Complex(complex_.ground, complex_.facets)
    residual, steps = _reduce(plain, is_extremal, highest=True)
    if not residual.is_empty:
        return None
    order: list[Facet] = []
    for v, _, facet in reversed(steps):
        smaller = facet - {v}
        if smaller in order:
            order[order.index(smaller)] = facet
        else:
            order.append(facet)
    return _with_witnesses(order)


def satisfies_rip(
    complex_: Complex, order: RipOrder, *, directed: bool = False
) -> bool:
    """Check an ordering against the running intersection property.

    Parameters
    ----------
    complex_ : Complex
        The complex.
    order : RipOrder
        Candidate ordering with witnesses.
    directed : bool, default False
        Also require that vertices consecutive in ``T_1 ∪ ... ∪ T_k`` lie
        together in ``T_k`` or in an earlier union.

    Returns
    -------
    bool
        True when the facets match and every condition holds.

    """
    facets = list(order.facets)
    if len(set(facets)) != len(facets) or set(facets) != complex_.facets:
        return False
    seen: frozenset[int] = frozenset()
    for k, facet in enumerate(facets):
        if k > 0:
            j = order.witnesses[k]
            if j is None or not 0 <= j < k or not facet & seen <= facets[j]:
                return False
        union = sorted(seen | facet)
        if directed:
            for v, w in itertools.pairwise(union):
                if not ({v, w} <= facet or {v, w} <= seen):
                    return False
        seen = seen | facet
    return True


def _search_directed_rip(complex_: DirectedComplex) -> RipOrder | None:
    facets = complex_.sorted_facets()

    def extend(chosen: list[Facet]) -> list[Facet] | None:
        if len(chosen) == len(facets):
            return chosen
        for facet in facets:
            if facet in chosen:
                continue
            candidate = [*chosen, facet]
            partial = _with_witnesses(candidate)
            if partial is None:
                continue
            seen = frozenset().union(*chosen)
            union = sorted(seen | facet)
            if all(
                {v, w} <= facet or {v, w} <= seen
                for v, w in itertools.pairwise(union)
            ):
                found = extend(candidate)
                if found is not None:
                    return found
        return None

    found = extend([])
    return None if found is None else _with_witnesses(found)


def directed_rip_order(complex_: DirectedComplex) -> RipOrder | None:
    """Order the facets with the directed running intersection property.

    Parameters
    ----------
    complex_ : DirectedComplex
        The directed complex.

    Returns
    -------
    RipOrder or None
        None when the complex lacks part of its spine or is not acyclic.

    """
    if not has_spine(complex_):
        return None
    order = rip_order(complex_)
    if order is None:
        return None
    if satisfies_rip(complex_, order, directed=True):
        return order
    logger.debug("Undirected order fails the spine test; searching")
    return _search_directed_rip(complex_)


def is_acyclic_configuration(complex_: Complex) -> bool:
    """Whether the complex is connected and Graham acyclic."""
    return is_connected(complex_) and is_graham_acyclic(complex_)


def is_directed_acyclic_configuration(complex_: DirectedComplex) -> bool:
    """Whether the complex has its spine and is directed Graham acyclic."""
    return has_spine(complex_) and is_directed_graham_acyclic(complex_)


# -----------------------------------------------------------------------------
# Configurations
# -----------------------------------------------------------------------------


def span_configuration(square: Square) -> DirectedComplex:
    """The subsets of ``[n]`` inside the image of ``h`` or of ``k``."""
    return DirectedComplex(
        frozenset(range(square.n + 1)),
        frozenset({square.h.image, square.k.image}),
    )


def basic_span_configuration(n: int, i: int, j: int) -> DirectedComplex:
    """Span configuration of the basic coface square ``(n, i, j)``."""
    ground = frozenset(range(n + 1))
    return DirectedComplex(ground, frozenset({ground - {j}, ground - {i}}))


def polygon_triangulation(
    n: int, triangles: Iterable[Iterable[int]]
) -> DirectedComplex:
    """Directed complex of a triangulated polygon on vertices ``0..n``.

    Parameters
    ----------
    n : int
        Top vertex, at least 2.
    triangles : iterable of iterable of int
        The ``n - 1`` triangles.

    Returns
    -------
    DirectedComplex
        Edges and triangles of the triangulation.

    """
    tris = [frozenset(t) for t in triangles]
    if n < 2 or len(tris) != n - 1:  # noqa: PLR2004
        msg = f"A polygon on {n + 1} vertices needs {n - 1} triangles"
        raise NotATriangulation(msg)
    vertices = set(range(n + 1))
    if any(len(t) != 3 or not t <= vertices for t in tris):  # noqa: PLR2004
        msg = f"Triangles {sorted(map(sorted, tris))} are not in [{n}]"
        raise NotATriangulation(msg)
    uses: dict[Facet, int] = {}
    for t in tris:
        for edge in itertools.combinations(sorted(t), 2):
            key = frozenset(edge)
            uses[key] = uses.get(key, 0) + 1
    boundary = {frozenset({i, i + 1}) for i in range(n)} | {
        frozenset({0, n})
    }
    for edge in boundary:
        if uses.get(edge) != 1:
            msg = f"Boundary edge {sorted(edge)} is used {uses.get(edge, 0)}x"
            raise NotATriangulation(msg)
    diagonals = [e for e in uses if e not in boundary]
    bad = [e for e in diagonals if uses[e] != 2]  # noqa: PLR2004
    if bad or len(diagonals) != n - 2:
        msg = f"Diagonals {sorted(map(sorted, diagonals))} do not triangulate"
        raise NotATriangulation(msg)
    for e1, e2 in itertools.combinations(diagonals, 2):
        a, b = sorted(e1)
        c, d = sorted(e2)
        if a < c < b < d or c < a < d < b:
            msg = f"Diagonals {[a, b]} and {[c, d]} cross"
            raise NotATriangulation(msg)
    return DirectedComplex(frozenset(range(n + 1)), frozenset(tris))


# -----------------------------------------------------------------------------
# Fillers
# -----------------------------------------------------------------------------


class FillerProvider(ABC):
    """A simplicial object that can fill spans of simplices.

    Attributes
    ----------
    inner_only : bool
        True when `span_fill` only handles ``i < j - 1``; such providers
        can only fill directed acyclic configurations.

    """

    inner_only: bool = False

    @abstractmethod
    def face(self, simplex: Any, f: Any) -> Any:
        """Restrict ``simplex`` along the coface map ``f``."""

    @abstractmethod
    def span_fill(
        self, x: Any, y: Any, i: int, j: int, n: int
    ) -> Any | None:
        """Find ``z`` in dimension ``n`` with ``d_j z = x`` and
        ``d_i z = y``, or None.
        """

    def fill_span(self, x: Any, y: Any, square: Square) -> Any | None:
        """Fill a span over a balanced square.

        Parameters
        ----------
        x, y : Any
            Simplices over ``[p]`` and ``[q]`` agreeing on ``[m]``.
        square : Square
            Balanced square ``(f, g, h, k)``.

        Returns
        -------
        Any or None
            ``z`` over ``[n]`` restricting to ``x`` along ``h`` and to
            ``y`` along ``k``.

        """
        if square.is_trivial:
            return y if is_identity(square.k) else x
        grid = factor_balanced(square)
        rows, cols = grid.rows, grid.cols
        corner: dict[tuple[int, int], Any] = {}
        top = [cell.f for cell in grid.cells[0]]
        left = [row[0].g for row in grid.cells]
        corner[(0, cols)] = x
        for c in range(cols - 1, -1, -1):
            corner[(0, c)] = self.face(corner[(0, c + 1)], top[c])
        corner[(rows, 0)] = y
        for r in range(rows - 1, -1, -1):
            corner[(r, 0)] = self.face(corner[(r + 1, 0)], left[r])
        for r in range(rows):
            for c in range(cols):
                cell = grid.cells[r][c]
                n, i, j, mirrored = basic_coface_parameters(cell)
                above, beside = corner[(r, c + 1)], corner[(r + 1, c)]
                if mirrored:
                    above, beside = beside, above
                z = self.span_fill(above, beside, i, j, n)
                if z is None:
                    return None
                corner[(r + 1, c + 1)] = z
        return corner[(rows, cols)]


def _check_compatible(
    provider: FillerProvider,
    complex_: Complex,
    assignment: Mapping[Facet, Any],
) -> None:
    facets = complex_.sorted_facets()
    if set(assignment) != set(facets):
        msg = "Assignment keys do not match the facets of the complex"
        raise IncompatibleAssignment(msg, facets=(), face=())
    for t1, t2 in itertools.combinations(facets, 2):
        shared = t1 & t2
        if not shared:
            continue
        left = provider.face(assignment[t1], subset_inclusion(shared, t1))
        right = provider.face(assignment[t2], subset_inclusion(shared, t2))
        if left != right:
            msg = (
                f"Facets {sorted(t1)} and {sorted(t2)} disagree on "
                f"{sorted(shared)}"
            )
            raise IncompatibleAssignment(
                msg,
                facets=(tuple(sorted(t1)), tuple(sorted(t2))),
                face=tuple(sorted(shared)),
            )


def fill_configuration(
    provider: FillerProvider,
    complex_: Complex,
    assignment: Mapping[Iterable[int], Any],
) -> Any:
    """Glue facet simplices into one simplex on the whole ground set.

    Parameters
    ----------
    provider : FillerProvider
        Simplicial object to fill in.
    complex_ : Complex or DirectedComplex
        An acyclic configuration; directed configurations are required
        for inner-only providers.
    assignment : mapping
        Facet (any iterable of vertices) to simplex of matching dimension.

    Returns
    -------
    Any
        A simplex whose restriction to every facet is the assigned one.

    """
    directed = isinstance(complex_, DirectedComplex)
    if directed:
        acyclic = is_directed_acyclic_configuration(complex_)
    else:
        acyclic = (not provider.inner_only) and is_acyclic_configuration(
            complex_
        )
    if not acyclic:
        msg = "Configuration is not acyclic for this provider"
        raise NotAcyclic(msg)
    values = {frozenset(k): v for k, v in assignment.items()}
    _check_compatible(provider, complex_, values)
    order = (
        directed_rip_order(complex_) if directed else rip_order(complex_)
    )
    if order is None:
        msg = "No running intersection order found"
        raise NotAcyclic(msg)
    first = order.facets[0]
    current, union = values[first], first
    for step, facet in enumerate(order.facets[1:], start=1):
        shared = facet & union
        bigger = union | facet
        square = Square(
            subset_inclusion(shared, union),
            subset_inclusion(shared, facet),
            subset_inclusion(union, bigger),
            subset_inclusion(facet, bigger),
        )
        logger.debug("Filling step %d over %s", step, sorted(bigger))
        filled = provider.fill_span(current, values[facet], square)
        if filled is None:
            msg = f"No span filler at step {step} for facet {sorted(facet)}"
            raise NoFiller(msg, step=step)
        current, union = filled, bigger
    return current
