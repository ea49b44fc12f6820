"""Brute-force oracles and exhaustive sweeps.

The oracles decide the same questions as `squares` and `acyclic` by plain
enumeration, and the sweeps run them over every small input in parallel
with joblib. Shards are merged in their canonical order, so the returned
tables do not depend on scheduling.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterator
from typing import Any

import pandas as pd
from joblib import Parallel, delayed

from .acyclic import (
    Complex,
    DirectedComplex,
    directed_rip_order,
    has_spine,
    is_chordal,
    is_directed_graham_acyclic,
    is_graham_acyclic,
    rip_order,
    satisfies_rip,
    skeleton1,
    spheres_filled,
)
from .delta import (
    MonotoneMap,
    compose,
    defect,
    enumerate_maps,
    subset_inclusion,
)
from .diagrams import Span, Square
from .squares import (
    compute_pushout,
    covers_spine,
    factor_balanced,
    factor_into_basic,
    has_pushout,
    is_balanced,
    is_jointly_surjective,
    is_pushout_square,
    is_set_pushout,
)

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Pushout oracle
# -----------------------------------------------------------------------------


def _extensions(
    size: int, target: int, fixed: dict[int, int]
) -> Iterator[tuple[int, ...]]:
    """Monotone sequences on ``[size]`` into ``[target]`` through ``fixed``."""

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        y = len(prefix)
        if y > size:
            yield prefix
            return
        low = prefix[-1] if prefix else 0
        if y in fixed:
            if fixed[y] >= low:
                yield from extend((*prefix, fixed[y]))
            return
        high = min(
            (v for x, v in fixed.items() if x > y), default=target
        )
        for value in range(low, high + 1):
            yield from extend((*prefix, value))

    yield from extend(())


def cocones(
    span: Span, target: int
) -> Iterator[tuple[MonotoneMap, MonotoneMap]]:
    """Yield every commuting cospan from the span into ``[target]``.

    Parameters
    ----------
    span : Span
        The span ``(f, g)``.
    target : int
        The apex ``[target]``.

    Yields
    ------
    tuple of MonotoneMap
        ``(phi, psi)`` with ``phi ∘ f == psi ∘ g``.

    """
    for phi in enumerate_maps(span.p, target):
        fixed: dict[int, int] = {}
        consistent = True
        for i in range(span.m + 1):
            value = phi(span.f(i))
            if fixed.setdefault(span.g(i), value) != value:
                consistent = False
                break
        if not consistent:
            continue
        for values in _extensions(span.q, target, fixed):
            yield phi, MonotoneMap(span.q, target, values)


def jointly_surjective_cospans(
    span: Span,
) -> Iterator[tuple[MonotoneMap, MonotoneMap]]:
    """Yield commuting, jointly surjective cospans under a span.

    A pushout cospan is jointly surjective, and its apex has at most
    ``p + q + 2`` elements, so these are all the candidates.
    """
    for target in range(span.p + span.q + 2):
        for h, k in cocones(span, target):
            if is_jointly_surjective(h, k):
                yield h, k


def count_factorizations(
    cospan: tuple[MonotoneMap, MonotoneMap],
    cocone: tuple[MonotoneMap, MonotoneMap],
) -> int:
    """Count maps ``gamma`` with ``gamma ∘ h == phi`` and
    ``gamma ∘ k == psi``.
    """
    h, k = cospan
    phi, psi = cocone
    return sum(
        1
        for gamma in enumerate_maps(h.cod, phi.cod)
        if compose(gamma, h) == phi and compose(gamma, k) == psi
    )


def is_universal(
    span: Span,
    cospan: tuple[MonotoneMap, MonotoneMap],
    max_target: int = 1,
) -> bool:
    """Whether cocones into ``[N]``, ``N <= max_target``, factor uniquely.

    Only cocones up to ``max_target`` are tested. The default of 1 checks
    threshold cocones into ``[0]`` and ``[1]`` only; this is enough because
    a monotone map into ``[N]`` is fixed by its ``N`` threshold maps into
    ``[1]``. Pass ``max_target=span.p + span.q + 1`` to test every cocone
    into an apex at least as large as any jointly surjective candidate.

    Parameters
    ----------
    span : Span
        The span.
    cospan : tuple of MonotoneMap
        Candidate ``(h, k)`` under the span.
    max_target : int, default 1
        Largest cocone apex ``[N]`` tested.

    Returns
    -------
    bool
        True when each tested cocone has exactly one induced map.

    """
    return all(
        count_factorizations(cospan, cocone) == 1
        for target in range(max_target + 1)
        for cocone in cocones(span, target)
    )


def brute_force_pushout(span: Span, max_target: int = 1) -> Square | None:
    """Search the candidate cospans for a universal one.

    Parameters
    ----------
    span : Span
        The span.
    max_target : int, default 1
        Largest cocone apex tested.

    Returns
    -------
    Square or None
        The pushout square found by enumeration.

    """
    for h, k in jointly_surjective_cospans(span):
        if is_universal(span, (h, k), max_target):
            return Square(span.f, span.g, h, k)
    return None


def all_spans(m: int, p: int, q: int) -> Iterator[Span]:
    """Every span ``[p] <- [m] -> [q]`` in lexicographic order."""
    for f in enumerate_maps(m, p):
        for g in enumerate_maps(m, q):
            yield Span(f, g)


def _shapes(max_size: int) -> list[tuple[int, int, int]]:
    return list(itertools.product(range(max_size + 1), repeat=3))


def _pushout_shard(m: int, p: int, q: int) -> list[dict[str, Any]]:
    rows = []
    for span in all_spans(m, p, q):
        expected = has_pushout(span)
        found = brute_force_pushout(span)
        computed = compute_pushout(span) if expected else None
        rows.append(
            {
                "m": m,
                "p": p,
                "q": q,
                "f": span.f.values,
                "g": span.g.values,
                "has_pushout": expected,
                "oracle": found is not None,
                "matches": found == computed,
            }
        )
    return rows


def _run_shards(
    shard: Any, keys: list[tuple[int, ...]], n_jobs: int
) -> pd.DataFrame:
    results = Parallel(n_jobs=n_jobs)(delayed(shard)(*key) for key in keys)
    records = [row for shard_rows in results for row in shard_rows]
    logger.info("Sweep over %d shards gave %d rows", len(keys), len(records))
    return pd.DataFrame.from_records(records)


def sweep_pushouts(max_size: int = 2, n_jobs: int = -1) -> pd.DataFrame:
    """Compare `has_pushout` and `compute_pushout` with the oracle.

    Parameters
    ----------
    max_size : int, default 2
        Largest ``m``, ``p`` and ``q``.
    n_jobs : int, default -1
        Number of parallel jobs.

    Returns
    -------
    pandas.DataFrame
        One row per span with columns ``has_pushout``, ``oracle`` and
        ``matches``.

    """
    return _run_shards(_pushout_shard, _shapes(max_size), n_jobs)


# -----------------------------------------------------------------------------
# Factorization sweeps
# -----------------------------------------------------------------------------


def balanced_squares(n: int) -> Iterator[Square]:
    """Every balanced square with apex ``[n]``.

    Such a square is fixed by the images ``A`` of ``h`` and ``B`` of ``k``,
    which cover ``[n]`` and meet.
    """
    ground = range(n + 1)
    for labels in itertools.product((0, 1, 2), repeat=n + 1):
        a = [x for x in ground if labels[x] in (0, 2)]
        b = [x for x in ground if labels[x] in (1, 2)]
        shared = [x for x in ground if labels[x] == 2]  # noqa: PLR2004
        if not shared:
            continue
        yield Square(
            subset_inclusion(shared, a),
            subset_inclusion(shared, b),
            subset_inclusion(a, ground),
            subset_inclusion(b, ground),
        )


def coface_squares(n: int) -> Iterator[Square]:
    """Every commuting square of cofaces with apex ``[n]``."""
    ground = range(n + 1)
    # 0 outside both, 1 in A only, 2 in B only, 3 in both, 4 in the source
    for labels in itertools.product(range(5), repeat=n + 1):
        a = [x for x in ground if labels[x] in (1, 3, 4)]
        b = [x for x in ground if labels[x] in (2, 3, 4)]
        source = [x for x in ground if labels[x] == 4]  # noqa: PLR2004
        if not source:
            continue
        yield Square(
            subset_inclusion(source, a),
            subset_inclusion(source, b),
            subset_inclusion(a, ground),
            subset_inclusion(b, ground),
        )


def _cell_ok(cell: Square) -> bool:
    if cell.is_trivial:
        return True
    return (
        is_pushout_square(cell)
        and defect(cell.f) <= 1
        and defect(cell.g) <= 1
    )


def _factor_shard(m: int, p: int, q: int) -> list[dict[str, Any]]:
    rows = []
    for span in all_spans(m, p, q):
        if not has_pushout(span):
            continue
        square = compute_pushout(span)
        grid = factor_into_basic(square)
        rows.append(
            {
                "kind": "pushout",
                "m": m,
                "p": p,
                "q": q,
                "n": square.n,
                "cells": sum(1 for _ in grid.leaves()),
                "cells_ok": all(_cell_ok(c) for c in grid.leaves()),
                "recomposes": grid.composite == square,
            }
        )
    return rows


def _balanced_shard(n: int) -> list[dict[str, Any]]:
    rows = []
    for square in balanced_squares(n):
        if square.is_trivial:
            continue
        grid = factor_balanced(square)
        rows.append(
            {
                "kind": "balanced",
                "m": square.m,
                "p": square.p,
                "q": square.q,
                "n": n,
                "cells": grid.rows * grid.cols,
                "cells_ok": all(
                    is_balanced(c) and _is_basic_coface(c)
                    for c in grid.leaves()
                ),
                "recomposes": grid.composite == square,
            }
        )
    return rows


def _is_basic_coface(cell: Square) -> bool:
    return cell.n == cell.m + 2 and all(defect(e) == 1 for e in cell.maps)


def sweep_factorizations(
    max_size: int = 3, max_balanced: int = 4, n_jobs: int = -1
) -> pd.DataFrame:
    """Check `factor_into_basic` and `factor_balanced` exhaustively.

    Parameters
    ----------
    max_size : int, default 3
        Largest span objects for pushout factorizations.
    max_balanced : int, default 4
        Largest apex for balanced factorizations.
    n_jobs : int, default -1
        Number of parallel jobs.

    Returns
    -------
    pandas.DataFrame
        One row per factored square.

    """
    pushouts = _run_shards(_factor_shard, _shapes(max_size), n_jobs)
    balanced = _run_shards(
        _balanced_shard, [(n,) for n in range(max_balanced + 1)], n_jobs
    )
    return pd.concat([pushouts, balanced], ignore_index=True)


def _concrete_shard(n: int) -> list[dict[str, Any]]:
    rows = []
    for square in coface_squares(n):
        pushout = is_pushout_square(square)
        concrete = is_set_pushout(square) and covers_spine(
            square.h, square.k
        )
        rows.append(
            {
                "n": n,
                "f": square.f.values,
                "g": square.g.values,
                "h": square.h.values,
                "k": square.k.values,
                "pushout": pushout,
                "set_pushout_and_spine": concrete,
            }
        )
    return rows


def sweep_concrete_criterion(max_n: int = 4, n_jobs: int = -1) -> pd.DataFrame:
    """Compare pushouts of cofaces with set pushouts covering the spine.

    Parameters
    ----------
    max_n : int, default 4
        Largest apex.
    n_jobs : int, default -1
        Number of parallel jobs.

    Returns
    -------
    pandas.DataFrame
        One row per commuting coface square.

    """
    return _run_shards(
        _concrete_shard, [(n,) for n in range(max_n + 1)], n_jobs
    )


# -----------------------------------------------------------------------------
# Complexes
# -----------------------------------------------------------------------------


def all_complexes(vertices: int) -> Iterator[Complex]:
    """Every complex on the ground set ``{0, ..., vertices - 1}``.

    Complexes are enumerated as antichains of nonempty subsets covering
    the ground set.
    """
    ground = frozenset(range(vertices))
    subsets = [
        frozenset(c)
        for size in range(vertices, 0, -1)
        for c in itertools.combinations(range(vertices), size)
    ]

    def grow(
        start: int, chosen: list[frozenset[int]]
    ) -> Iterator[list[frozenset[int]]]:
        yield chosen
        for index in range(start, len(subsets)):
            candidate = subsets[index]
            if any(candidate <= other for other in chosen):
                continue
            yield from grow(index + 1, [*chosen, candidate])

    for facets in grow(0, []):
        if facets and frozenset().union(*facets) == ground:
            yield Complex(ground, frozenset(facets))


def random_complex(vertices: int, rng: random.Random) -> Complex:
    """Draw a random complex on ``{0, ..., vertices - 1}``.

    Parameters
    ----------
    vertices : int
        Number of ground vertices.
    rng : random.Random
        Source of randomness.

    Returns
    -------
    Complex
        A few random facets, plus singletons for uncovered vertices.

    """
    ground = list(range(vertices))
    facets = []
    for _ in range(rng.randint(1, vertices + 1)):
        size = rng.randint(1, min(vertices, 4))
        facets.append(frozenset(rng.sample(ground, size)))
    covered = frozenset().union(*facets)
    facets.extend(frozenset({v}) for v in ground if v not in covered)
    return Complex(frozenset(ground), frozenset(facets))


def acyclicity_row(complex_: Complex) -> dict[str, Any]:
    """Evaluate every acyclicity criterion on one complex."""
    order = rip_order(complex_)
    directed = DirectedComplex(complex_.ground, complex_.facets)
    spine = has_spine(directed)
    directed_order = directed_rip_order(directed)
    return {
        "vertices": len(complex_.ground),
        "facets": sorted(sorted(facet) for facet in complex_.facets),
        "graham": is_graham_acyclic(complex_),
        "chordal_and_spheres": is_chordal(skeleton1(complex_))
        and spheres_filled(complex_),
        "rip": order is not None and satisfies_rip(complex_, order),
        "directed_graham": is_directed_graham_acyclic(directed),
        "directed_chordal_and_spheres": spine
        and is_chordal(skeleton1(directed))
        and spheres_filled(directed),
        "directed_rip": directed_order is not None
        and satisfies_rip(directed, directed_order, directed=True),
    }


def _acyclicity_shard(
    vertices: int, samples: int, seed: int
) -> list[dict[str, Any]]:
    if samples == 0:
        return [acyclicity_row(c) for c in all_complexes(vertices)]
    rng = random.Random(seed)  # noqa: S311
    return [
        acyclicity_row(random_complex(vertices, rng)) for _ in range(samples)
    ]


def sweep_acyclicity(
    vertices: list[int],
    samples: int = 0,
    seed: int = 0,
    n_jobs: int = -1,
) -> pd.DataFrame:
    """Evaluate the acyclicity criteria over many complexes.

    Parameters
    ----------
    vertices : list of int
        Ground set sizes, one shard each.
    samples : int, default 0
        Random complexes per size; 0 enumerates every complex.
    seed : int, default 0
        Base seed; shard ``i`` uses ``seed + i``.
    n_jobs : int, default -1
        Number of parallel jobs.

    Returns
    -------
    pandas.DataFrame
        One row per complex with a column per criterion.

    """
    keys = [(v, samples, seed + i) for i, v in enumerate(vertices)]
    return _run_shards(_acyclicity_shard, keys, n_jobs)

