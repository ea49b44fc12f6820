"""Finite truncated simplicial sets and the squares they complete.

A simplicial set truncated at dimension ``N`` keeps its cells ``X_0, ...,
X_N`` as sorted tuples of string identifiers, its face maps
``d_i: X_n -> X_{n-1}`` and its degeneracy maps ``s_i: X_n -> X_{n+1}`` as
dictionaries keyed by ``(n, i)``. Monotone maps act contravariantly, so a
square of monotone maps becomes a square of finite sets. The square lies
in ``Comp(X)`` when that square of sets is a weak pullback and in
``Ex(X)`` when it is a pullback.

Every classifier below quantifies over squares whose ordinals fit in the
truncation and reports the dimension it checked.
"""

from __future__ import annotations

import logging
import random
from collections import Counter, defaultdict
from collections.abc import Hashable, Iterable, Iterator, Mapping
from dataclasses import asdict, dataclass, field
from typing import Any

import pandas as pd

from .acyclic import FillerProvider
from .delta import (
    MonotoneMap,
    enumerate_maps,
    factor_into_generators,
    identity,
    is_coface,
    is_identity,
    missing_values,
    repeated_positions,
)
from .diagrams import Square
from .exceptions import (
    DomainMismatch,
    IncompatiblePair,
    IndexOutOfRange,
    InvalidCategory,
    InvalidSimplicialSet,
    NonCommuting,
    OutOfTruncation,
)
from .squares import BasicKind, catalog

logger = logging.getLogger(__name__)

Cell = str
Table = Mapping[Cell, Cell]
SEPARATOR = "|"


# -----------------------------------------------------------------------------
# Truncated simplicial sets
# -----------------------------------------------------------------------------


def face_keys(dim: int) -> set[tuple[int, int]]:
    """Keys ``(n, i)`` of the face maps of a ``dim``-truncated set."""
    return {(n, i) for n in range(1, dim + 1) for i in range(n + 1)}


def degeneracy_keys(dim: int) -> set[tuple[int, int]]:
    """Keys ``(n, i)`` of the degeneracy maps of a ``dim``-truncated set."""
    return {(n, i) for n in range(dim) for i in range(n + 1)}


@dataclass(frozen=True)
class TruncatedSSet:
    """A simplicial set truncated at dimension ``dim``.

    Attributes
    ----------
    dim : int
        Truncation dimension ``N``.
    cells : mapping of int to tuple of str
        ``cells[n]`` lists ``X_n`` in lexicographic order.
    faces : mapping of (int, int) to dict
        ``faces[(n, i)]`` is ``d_i: X_n -> X_{n-1}`` for ``1 <= n <= N``.
    degeneracies : mapping of (int, int) to dict
        ``degeneracies[(n, i)]`` is ``s_i: X_n -> X_{n+1}`` for
        ``0 <= n < N``.

    """

    dim: int
    cells: Mapping[int, tuple[Cell, ...]]
    faces: Mapping[tuple[int, int], Table]
    degeneracies: Mapping[tuple[int, int], Table] = field(
        default_factory=dict
    )

    def __post_init__(self) -> None:
        """Sort the cells and check every table is total and well typed."""
        if self.dim < 0:
            msg = f"Truncation dimension must be nonnegative, got {self.dim}"
            raise InvalidSimplicialSet(msg)
        extra = set(self.cells) - set(range(self.dim + 1))
        if extra:
            msg = f"Cells given above the truncation: levels {sorted(extra)}"
            raise InvalidSimplicialSet(msg)
        cells = {
            n: tuple(sorted(set(self.cells.get(n, ()))))
            for n in range(self.dim + 1)
        }
        object.__setattr__(self, "cells", cells)
        object.__setattr__(
            self, "faces", {key: dict(t) for key, t in self.faces.items()}
        )
        object.__setattr__(
            self,
            "degeneracies",
            {key: dict(t) for key, t in self.degeneracies.items()},
        )
        self._check_tables(self.faces, face_keys(self.dim), -1, "face")
        self._check_tables(
            self.degeneracies, degeneracy_keys(self.dim), 1, "degeneracy"
        )

    def _check_tables(
        self,
        tables: Mapping[tuple[int, int], Table],
        expected: set[tuple[int, int]],
        step: int,
        label: str,
    ) -> None:
        if set(tables) != expected:
            missing = sorted(expected - set(tables))
            extra = sorted(set(tables) - expected)
            msg = f"{label} maps: missing {missing}, unexpected {extra}"
            raise InvalidSimplicialSet(msg)
        for (n, i), table in sorted(tables.items()):
            if set(table) != set(self.cells[n]):
                msg = f"{label} map ({n}, {i}) is not total on X_{n}"
                raise InvalidSimplicialSet(msg)
            target = set(self.cells[n + step])
            stray = sorted(set(table.values()) - target)
            if stray:
                msg = (
                    f"{label} map ({n}, {i}) sends cells outside "
                    f"X_{n + step}: {stray}"
                )
                raise InvalidSimplicialSet(msg)

    def level(self, n: int) -> tuple[Cell, ...]:
        """Return ``X_n``, raising `OutOfTruncation` above the bound."""
        if not 0 <= n <= self.dim:
            msg = f"Level {n} is outside the truncation 0..{self.dim}"
            raise OutOfTruncation(msg)
        return self.cells[n]

    def face(self, n: int, i: int, x: Cell) -> Cell:
        """``d_i x`` for ``x`` in ``X_n``."""
        return self.faces[(n, i)][x]

    def degeneracy(self, n: int, i: int, x: Cell) -> Cell:
        """``s_i x`` for ``x`` in ``X_n``."""
        return self.degeneracies[(n, i)][x]


@dataclass(frozen=True)
class Violation:
    """One failed simplicial identity.

    Attributes
    ----------
    kind : str
        ``dd``, ``ds_lower``, ``ds_identity``, ``ds_upper``, ``ss`` or
        ``injective``.
    n : int
        Dimension of the offending cell.
    i, j : int
        Indices of the identity; ``j`` is None for injectivity.
    cell : str
        The cell on which both sides differ.

    """

    kind: str
    n: int
    i: int
    j: int | None
    cell: Cell


@dataclass(frozen=True)
class ValidationReport:
    """Every simplicial identity that fails, in a fixed order."""

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        """Whether no identity fails."""
        return not self.violations

    def to_frame(self) -> pd.DataFrame:
        """Return the violations as a DataFrame."""
        return pd.DataFrame(
            [asdict(v) for v in self.violations],
            columns=["kind", "n", "i", "j", "cell"],
        )


def _face_face(sset: TruncatedSSet) -> Iterator[Violation]:
    for n in range(2, sset.dim + 1):
        for j in range(1, n + 1):
            for i in range(j):
                for x in sset.cells[n]:
                    left = sset.face(n - 1, i, sset.face(n, j, x))
                    right = sset.face(n - 1, j - 1, sset.face(n, i, x))
                    if left != right:
                        yield Violation("dd", n, i, j, x)


def _face_degeneracy_rhs(
    sset: TruncatedSSet, n: int, i: int, j: int, x: Cell
) -> tuple[str, Cell]:
    if i < j:
        return "ds_lower", sset.degeneracy(n - 1, j - 1, sset.face(n, i, x))
    if i in (j, j + 1):
        return "ds_identity", x
    return "ds_upper", sset.degeneracy(n - 1, j, sset.face(n, i - 1, x))


def _face_degeneracy(sset: TruncatedSSet) -> Iterator[Violation]:
    for n in range(sset.dim):
        for j in range(n + 1):
            for x in sset.cells[n]:
                lifted = sset.degeneracy(n, j, x)
                for i in range(n + 2):
                    kind, right = _face_degeneracy_rhs(sset, n, i, j, x)
                    if sset.face(n + 1, i, lifted) != right:
                        yield Violation(kind, n, i, j, x)


def _degeneracy_degeneracy(sset: TruncatedSSet) -> Iterator[Violation]:
    for n in range(sset.dim - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for x in sset.cells[n]:
                    left = sset.degeneracy(n + 1, i, sset.degeneracy(n, j, x))
                    right = sset.degeneracy(
                        n + 1, j + 1, sset.degeneracy(n, i, x)
                    )
                    if left != right:
                        yield Violation("ss", n, i, j, x)


def _non_injective(sset: TruncatedSSet) -> Iterator[Violation]:
    for (n, i), table in sorted(sset.degeneracies.items()):
        seen: dict[Cell, Cell] = {}
        for x in sset.cells[n]:
            image = table[x]
            if image in seen:
                yield Violation("injective", n, i, None, x)
                break
            seen[image] = x


def validate(sset: TruncatedSSet) -> ValidationReport:
    """Audit the simplicial identities within the truncation.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set to audit.

    Returns
    -------
    ValidationReport
        Empty exactly when every identity holds and every degeneracy map
        is injective.

    """
    violations = (
        *_face_face(sset),
        *_face_degeneracy(sset),
        *_degeneracy_degeneracy(sset),
        *_non_injective(sset),
    )
    logger.debug("Validation found %d violations", len(violations))
    return ValidationReport(violations)


# -----------------------------------------------------------------------------
# Evaluation of monotone maps
# -----------------------------------------------------------------------------


def _generator_action(sset: TruncatedSSet, gen: MonotoneMap) -> Table:
    if is_coface(gen):
        return sset.faces[(gen.cod, missing_values(gen)[0])]
    return sset.degeneracies[(gen.cod, repeated_positions(gen)[0])]


def evaluate(
    sset: TruncatedSSet, f: MonotoneMap, *, reverse: bool = False
) -> dict[Cell, Cell]:
    """Contravariant action ``X_f: X_{f.cod} -> X_{f.dom}``.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set.
    f : MonotoneMap
        Map with both ordinals inside the truncation.
    reverse : bool, default False
        Evaluate through the alternative generator word; the result is the
        same for a valid simplicial set.

    Returns
    -------
    dict of str to str
        The function on cells.

    """
    if max(f.dom, f.cod) > sset.dim:
        msg = f"Map {f} leaves the truncation at {sset.dim}"
        raise OutOfTruncation(msg)
    action = {x: x for x in sset.cells[f.cod]}
    for gen in reversed(factor_into_generators(f, reverse=reverse)):
        table = _generator_action(sset, gen)
        action = {x: table[y] for x, y in action.items()}
    return action


def _random_map(dim: int, rng: random.Random) -> MonotoneMap:
    dom, cod = rng.randint(0, dim), rng.randint(0, dim)
    values = sorted(rng.choices(range(cod + 1), k=dom + 1))
    return MonotoneMap(dom, cod, tuple(values))


def evaluation_mismatches(
    sset: TruncatedSSet, samples: int = 100, seed: int = 0
) -> list[MonotoneMap]:
    """Random maps whose two generator words act differently.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set.
    samples : int, default 100
        Number of random maps.
    seed : int, default 0
        Seed for the map generator.

    Returns
    -------
    list of MonotoneMap
        Empty for every valid simplicial set.

    """
    rng = random.Random(seed)  # noqa: S311
    mismatches = []
    for _ in range(samples):
        f = _random_map(sset.dim, rng)
        if evaluate(sset, f) != evaluate(sset, f, reverse=True):
            mismatches.append(f)
    return mismatches


# -----------------------------------------------------------------------------
# Squares of sets
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class SetSquare:
    """A square of finite sets::

        A --top--> B
        |          |
       left      right
        v          v
        C -bottom-> D

    """

    a: tuple[Hashable, ...]
    b: tuple[Hashable, ...]
    c: tuple[Hashable, ...]
    d: tuple[Hashable, ...]
    top: Mapping[Hashable, Hashable]
    left: Mapping[Hashable, Hashable]
    right: Mapping[Hashable, Hashable]
    bottom: Mapping[Hashable, Hashable]

    @property
    def commutes(self) -> bool:
        """Whether ``right ∘ top == bottom ∘ left``."""
        return all(
            self.right[self.top[x]] == self.bottom[self.left[x]]
            for x in self.a
        )

    def mirror(self) -> SetSquare:
        """Transpose along the diagonal through ``A`` and ``D``."""
        return SetSquare(
            self.a,
            self.c,
            self.b,
            self.d,
            self.left,
            self.top,
            self.bottom,
            self.right,
        )

    def hcompose(self, other: SetSquare) -> SetSquare:
        """Paste ``other`` to the right, along this square's right edge."""
        if (
            other.a != self.b
            or other.c != self.d
            or dict(other.left) != dict(self.right)
        ):
            msg = "Squares do not share a vertical edge"
            raise DomainMismatch(msg)
        return SetSquare(
            self.a,
            other.b,
            self.c,
            other.d,
            {x: other.top[self.top[x]] for x in self.a},
            self.left,
            other.right,
            {x: other.bottom[self.bottom[x]] for x in self.c},
        )


def apply_square(sset: TruncatedSSet, square: Square) -> SetSquare:
    """Send a square of monotone maps to a square of sets.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set.
    square : Square
        ``(f, g, h, k)`` with every ordinal inside the truncation.

    Returns
    -------
    SetSquare
        ``X_n`` on the corner, ``X_h`` on top, ``X_k`` on the left,
        ``X_f`` on the right and ``X_g`` on the bottom.

    """
    return SetSquare(
        a=sset.level(square.n),
        b=sset.level(square.p),
        c=sset.level(square.q),
        d=sset.level(square.m),
        top=evaluate(sset, square.h),
        left=evaluate(sset, square.k),
        right=evaluate(sset, square.f),
        bottom=evaluate(sset, square.g),
    )


def _require_commuting(square: SetSquare) -> None:
    if not square.commutes:
        msg = "Square of sets does not commute"
        raise NonCommuting(msg)


def _compatible_pairs(
    square: SetSquare,
) -> Iterator[tuple[Hashable, Hashable]]:
    over: dict[Hashable, list[Hashable]] = defaultdict(list)
    for c in square.c:
        over[square.bottom[c]].append(c)
    for b in square.b:
        for c in over[square.right[b]]:
            yield b, c


def _preimages(square: SetSquare) -> Counter:
    return Counter((square.top[x], square.left[x]) for x in square.a)


def weak_pullback_failure(
    square: SetSquare,
) -> tuple[Hashable, Hashable] | None:
    """First compatible pair ``(b, c)`` with no preimage in ``A``."""
    _require_commuting(square)
    counts = _preimages(square)
    return next(
        (pair for pair in _compatible_pairs(square) if counts[pair] == 0),
        None,
    )


def strong_pullback_failure(
    square: SetSquare,
) -> tuple[Hashable, Hashable] | None:
    """First compatible pair without exactly one preimage in ``A``."""
    _require_commuting(square)
    counts = _preimages(square)
    return next(
        (pair for pair in _compatible_pairs(square) if counts[pair] != 1),
        None,
    )


def is_weak_pullback(square: SetSquare) -> bool:
    """Whether every compatible pair lifts to ``A``."""
    return weak_pullback_failure(square) is None


def is_strong_pullback(square: SetSquare) -> bool:
    """Whether every compatible pair lifts to ``A`` exactly once."""
    return strong_pullback_failure(square) is None


def _require_commuting_square(square: Square) -> None:
    if not square.commutes:
        msg = f"Square {square.maps} does not commute"
        raise NonCommuting(msg)


def comp_contains(sset: TruncatedSSet, square: Square) -> bool:
    """Whether ``sset`` sends ``square`` to a weak pullback."""
    _require_commuting_square(square)
    return is_weak_pullback(apply_square(sset, square))


def ex_contains(sset: TruncatedSSet, square: Square) -> bool:
    """Whether ``sset`` sends ``square`` to a pullback."""
    _require_commuting_square(square)
    return is_strong_pullback(apply_square(sset, square))


def weak_pullback_counterexample() -> tuple[SetSquare, SetSquare, SetSquare]:
    """Two pasted squares where the outer and right squares are weak
    pullbacks but the left square is not.

    Returns
    -------
    tuple of SetSquare
        ``(left, right, outer)`` with ``outer = left.hcompose(right)``.

    """
    point = ("*",)
    to_point = {"a": "*", "b": "*"}
    same = {"*": "*"}
    left = SetSquare(
        point, ("a", "b"), point, point, {"*": "a"}, same, to_point, same
    )
    right = SetSquare(
        ("a", "b"), point, point, point, to_point, to_point, same, same
    )
    return left, right, left.hcompose(right)


# -----------------------------------------------------------------------------
# Classifiers
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassifierResult:
    """Verdict of a classifier up to the truncation.

    Attributes
    ----------
    name : str
        Property checked.
    holds : bool
        Verdict for every square of the family inside the truncation.
    dim : int
        Truncation dimension the verdict refers to.
    witness : dict, optional
        Family parameters and failing pair of the first failure.

    """

    name: str
    holds: bool
    dim: int
    witness: dict[str, Any] | None = None


Family = Iterable[tuple[dict[str, Any], Square]]


def _fits(square: Square, dim: int) -> bool:
    return max(square.m, square.p, square.q, square.n) <= dim


def _first_failure(
    sset: TruncatedSSet, family: Family, *, exact: bool
) -> dict[str, Any] | None:
    search = strong_pullback_failure if exact else weak_pullback_failure
    for params, square in family:
        pair = search(apply_square(sset, square))
        if pair is not None:
            logger.debug("Square %s fails at %s", params, pair)
            return {**params, "pair": list(pair)}
    return None


def _verdict(
    name: str, sset: TruncatedSSet, family: Family, *, exact: bool = False
) -> ClassifierResult:
    witness = _first_failure(sset, family, exact=exact)
    return ClassifierResult(name, witness is None, sset.dim, witness)


def _coface_family(
    dim: int, *, inner: bool = False, restricted: bool = False
) -> Iterator[tuple[dict[str, Any], Square]]:
    for n in range(2, dim + 1):
        for entry in catalog("basic_coface", n):
            i, j = entry.params["i"], entry.params["j"]
            if inner and i >= j - 1:
                continue
            if restricted and (i < 1 or j > n - 1):
                continue
            yield {"family": str(entry.kind), **entry.params}, entry.square


def _mixed_family(
    dim: int, kinds: tuple[BasicKind, ...]
) -> Iterator[tuple[dict[str, Any], Square]]:
    for n in range(dim):
        for entry in catalog("mixed", n):
            if entry.kind in kinds and _fits(entry.square, dim):
                yield {"family": str(entry.kind), **entry.params}, entry.square


def segal_square(a: int, b: int) -> Square:
    """The square gluing ``[a]`` and ``[b]`` along a vertex into ``[a+b]``.

    Parameters
    ----------
    a, b : int
        Lengths of the two pieces, both at least 1.

    Returns
    -------
    Square
        Span of the last vertex of ``[a]`` and the first of ``[b]``,
        completed by the front and back inclusions.

    """
    if a < 1 or b < 1:
        msg = f"Segal squares need a, b >= 1, got a={a}, b={b}"
        raise IndexOutOfRange(msg)
    return Square(
        MonotoneMap.constant(0, a, a),
        MonotoneMap.constant(0, b, 0),
        MonotoneMap(a, a + b, tuple(range(a + 1))),
        MonotoneMap(b, a + b, tuple(range(a, a + b + 1))),
    )


def _segal_family(dim: int) -> Iterator[tuple[dict[str, Any], Square]]:
    for total in range(2, dim + 1):
        for a in range(1, total):
            b = total - a
            params = {"family": "segal", "a": a, "b": b}
            yield params, segal_square(a, b)


def check_span_complete(sset: TruncatedSSet) -> ClassifierResult:
    """Basic coface squares in ``Comp(X)``."""
    return _verdict("span_complete", sset, _coface_family(sset.dim))


def check_inner_span_complete(sset: TruncatedSSet) -> ClassifierResult:
    """Basic coface squares with ``i < j - 1`` in ``Comp(X)``."""
    return _verdict(
        "inner_span_complete", sset, _coface_family(sset.dim, inner=True)
    )


def check_segal_nerve(sset: TruncatedSSet) -> ClassifierResult:
    """Vertex gluing squares in ``Ex(X)``."""
    return _verdict(
        "segal_nerve", sset, _segal_family(sset.dim), exact=True
    )


def check_split(sset: TruncatedSSet) -> ClassifierResult:
    """Every mixed pushout square in ``Ex(X)``."""
    kinds = (
        BasicKind.MIXED_LOWER,
        BasicKind.MIXED_COLLAPSE,
        BasicKind.MIXED_UPPER,
    )
    return _verdict(
        "split", sset, _mixed_family(sset.dim, kinds), exact=True
    )


def check_stiff(sset: TruncatedSSet) -> ClassifierResult:
    """Lower and upper mixed pushout squares in ``Ex(X)``."""
    kinds = (BasicKind.MIXED_LOWER, BasicKind.MIXED_UPPER)
    return _verdict(
        "stiff", sset, _mixed_family(sset.dim, kinds), exact=True
    )


def check_2segal_restricted(sset: TruncatedSSet) -> ClassifierResult:
    """Inner coface pushouts avoiding the outer cofaces in ``Ex(X)``."""
    family = _coface_family(sset.dim, inner=True, restricted=True)
    return _verdict("2segal_restricted", sset, family, exact=True)


def is_span_complete(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` is span complete up to its truncation."""
    return check_span_complete(sset).holds


def is_inner_span_complete(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` is inner span complete up to its truncation."""
    return check_inner_span_complete(sset).holds


def is_segal_nerve(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` satisfies the Segal condition up to truncation."""
    return check_segal_nerve(sset).holds


def is_split(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` is split up to its truncation."""
    return check_split(sset).holds


def is_stiff(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` is stiff up to its truncation."""
    return check_stiff(sset).holds


def is_2segal_restricted(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` passes the restricted 2-Segal check."""
    return check_2segal_restricted(sset).holds


def is_discrete(sset: TruncatedSSet, up_to: int | None = None) -> bool:
    """Whether every structure map between levels ``<= up_to`` is bijective.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set.
    up_to : int, optional
        Highest level involved; defaults to the truncation.

    Returns
    -------
    bool
        True when all face and degeneracy maps in range are bijections.

    """
    top = sset.dim if up_to is None else min(up_to, sset.dim)
    tables = [(t, n - 1) for (n, _), t in sset.faces.items() if n <= top]
    tables += [
        (t, n + 1) for (n, _), t in sset.degeneracies.items() if n < top
    ]
    return all(
        len(set(t.values())) == len(t) == len(sset.cells[level])
        for t, level in tables
    )


@dataclass(frozen=True)
class DiscretenessCheck:
    """Outcome of the discreteness test.

    Attributes
    ----------
    families_hold : bool
        Collapse squares and adjacent coface squares all lie in
        ``Comp(X)`` up to the truncation.
    discrete : bool
        All structure maps below the top level are bijections.
    dim : int
        Truncation dimension.
    witness : dict, optional
        First failing square when the families do not hold.

    """

    families_hold: bool
    discrete: bool
    dim: int
    witness: dict[str, Any] | None = None

    @property
    def consistent(self) -> bool:
        """Whether the families holding forced discreteness."""
        return self.discrete or not self.families_hold


def _discreteness_family(
    dim: int,
) -> Iterator[tuple[dict[str, Any], Square]]:
    yield from _mixed_family(dim, (BasicKind.MIXED_COLLAPSE,))
    for params, square in _coface_family(dim):
        if params["j"] == params["i"] + 1:
            yield params, square


def check_forced_discrete(sset: TruncatedSSet) -> DiscretenessCheck:
    """Test the two discreteness-forcing families and discreteness itself.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set.

    Returns
    -------
    DiscretenessCheck
        Whether the families lie in ``Comp(X)`` and whether the structure
        maps below the top level are bijections.

    """
    witness = _first_failure(sset, _discreteness_family(sset.dim), exact=False)
    check = DiscretenessCheck(
        families_hold=witness is None,
        discrete=is_discrete(sset, sset.dim - 1),
        dim=sset.dim,
        witness=witness,
    )
    if not check.consistent:
        logger.warning("Discreteness families hold but maps are not bijective")
    return check


def forced_discrete(sset: TruncatedSSet) -> bool:
    """Whether the discreteness-forcing families lie in ``Comp(X)``."""
    return check_forced_discrete(sset).families_hold


def _always_comp_family(
    dim: int,
) -> Iterator[tuple[dict[str, Any], Square]]:
    for m in range(dim + 1):
        for n in range(dim + 1):
            for f in enumerate_maps(m, n):
                params = {"map": list(f.values), "dom": m, "cod": n}
                trivial = Square.trivial_on(f)
                yield {"family": "trivial", **params}, trivial
                yield {"family": "trivial_mirror", **params}, trivial.mirror()
                if f.is_injective and not is_identity(f):
                    corner = Square(identity(m), identity(m), f, f)
                    yield {"family": "coface_corner", **params}, corner
    for n in range(dim + 1):
        for entry in catalog("codegeneracy", n):
            if _fits(entry.square, dim):
                yield {"family": str(entry.kind), **entry.params}, entry.square


def check_always_comp(sset: TruncatedSSet) -> ClassifierResult:
    """Squares every simplicial set sends to weak pullbacks.

    Trivial squares, pushouts of codegeneracies and the squares
    ``(id, id; f, f)`` with ``f`` a coface map.
    """
    return _verdict("always_comp", sset, _always_comp_family(sset.dim))


def comp_to_ex_holds(sset: TruncatedSSet, square: Square) -> bool:
    """Whether membership in ``Comp(X)`` upgrades to ``Ex(X)``.

    Vacuously true unless ``h`` or ``k`` is surjective and the square lies
    in ``Comp(X)``.
    """
    if not (square.h.is_surjective or square.k.is_surjective):
        return True
    if not comp_contains(sset, square):
        return True
    return ex_contains(sset, square)


def composite_in_comp(
    sset: TruncatedSSet,
    first: Square,
    second: Square,
    *,
    horizontal: bool = True,
) -> bool:
    """Whether the pasting of two squares lies in ``Comp(X)``."""
    outer = first.hcompose(second) if horizontal else first.vcompose(second)
    return comp_contains(sset, outer)


# -----------------------------------------------------------------------------
# Fillers and horns
# -----------------------------------------------------------------------------


def find_filler(
    sset: TruncatedSSet,
    n: int,
    i: int,
    j: int,
    x: Cell,
    y: Cell,
    *,
    count: bool = False,
) -> Cell | int | None:
    """Fill the span of ``x`` and ``y`` with an ``n``-simplex.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set.
    n : int
        Dimension of the filler, ``2 <= n <= dim``.
    i, j : int
        Face indices, ``0 <= i < j <= n``.
    x, y : str
        ``(n-1)``-simplices with ``d_i x == d_{j-1} y``.
    count : bool, default False
        Return the number of fillers instead of the first.

    Returns
    -------
    str, int or None
        First ``z`` in cell order with ``d_j z == x`` and ``d_i z == y``,
        None if there is none, or the count.

    """
    if n < 2 or not 0 <= i < j <= n:  # noqa: PLR2004
        msg = f"No span of faces ({i}, {j}) in dimension {n}"
        raise IndexOutOfRange(msg)
    lower = set(sset.level(n - 1))
    sset.level(n)
    for cell in (x, y):
        if cell not in lower:
            msg = f"{cell!r} is not a {n - 1}-simplex"
            raise IncompatiblePair(msg)
    if sset.face(n - 1, i, x) != sset.face(n - 1, j - 1, y):
        msg = f"d_{i} {x!r} differs from d_{j - 1} {y!r}"
        raise IncompatiblePair(msg)
    fillers = (
        z
        for z in sset.cells[n]
        if sset.face(n, j, z) == x and sset.face(n, i, z) == y
    )
    if count:
        return sum(1 for _ in fillers)
    return next(fillers, None)


def horn_instances(
    sset: TruncatedSSet, n: int, k: int
) -> Iterator[dict[int, Cell]]:
    """Yield every compatible horn ``Λ^n_k`` in ``sset``.

    Parameters
    ----------
    sset : TruncatedSSet
        Simplicial set.
    n : int
        Horn dimension, ``1 <= n <= dim``.
    k : int
        Missing face, ``0 <= k <= n``.

    Yields
    ------
    dict of int to str
        Face index to ``(n-1)``-simplex, for every index but ``k``.

    """
    if n < 1 or not 0 <= k <= n:
        msg = f"No horn ({n}, {k})"
        raise IndexOutOfRange(msg)
    lower = sset.level(n - 1)
    sset.level(n)
    slots = [i for i in range(n + 1) if i != k]

    def fits(horn: dict[int, Cell], j: int, y: Cell) -> bool:
        return all(
            sset.face(n - 1, i, y) == sset.face(n - 1, j - 1, horn[i])
            for i in horn
        )

    def extend(horn: dict[int, Cell]) -> Iterator[dict[int, Cell]]:
        if len(horn) == len(slots):
            yield dict(horn)
            return
        j = slots[len(horn)]
        for y in lower:
            if fits(horn, j, y):
                horn[j] = y
                yield from extend(horn)
                del horn[j]

    yield from extend({})


def horn_has_filler(
    sset: TruncatedSSet, n: int, k: int, horn: Mapping[int, Cell]
) -> bool:
    """Whether some ``n``-simplex has the faces listed in ``horn``."""
    if k in horn:
        msg = f"Horn ({n}, {k}) lists its missing face"
        raise IndexOutOfRange(msg)
    return any(
        all(sset.face(n, i, z) == y for i, y in horn.items())
        for z in sset.level(n)
    )


def _horn_check(
    name: str, sset: TruncatedSSet, *, inner: bool
) -> ClassifierResult:
    for n in range(1, sset.dim + 1):
        indices = range(1, n) if inner else range(n + 1)
        for k in indices:
            for horn in horn_instances(sset, n, k):
                if not horn_has_filler(sset, n, k, horn):
                    return ClassifierResult(
                        name=name,
                        holds=False,
                        dim=sset.dim,
                        witness={"n": n, "k": k, "horn": horn},
                    )
    return ClassifierResult(name=name, holds=True, dim=sset.dim)


def check_kan(sset: TruncatedSSet) -> ClassifierResult:
    """Every horn up to the truncation has a filler."""
    return _horn_check("kan", sset, inner=False)


def check_quasicategory(sset: TruncatedSSet) -> ClassifierResult:
    """Every inner horn up to the truncation has a filler."""
    return _horn_check("quasicategory", sset, inner=True)


def is_kan(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` is Kan up to its truncation."""
    return check_kan(sset).holds


def is_quasicategory(sset: TruncatedSSet) -> bool:
    """Whether ``sset`` is a quasicategory up to its truncation."""
    return check_quasicategory(sset).holds


def classify(sset: TruncatedSSet) -> list[ClassifierResult]:
    """Run every classifier, in a fixed order."""
    discreteness = check_forced_discrete(sset)
    return [
        check_span_complete(sset),
        check_inner_span_complete(sset),
        check_segal_nerve(sset),
        check_split(sset),
        check_stiff(sset),
        check_2segal_restricted(sset),
        ClassifierResult(
            "forced_discrete",
            discreteness.families_hold,
            sset.dim,
            discreteness.witness,
        ),
        check_always_comp(sset),
        check_kan(sset),
        check_quasicategory(sset),
    ]


class SSetProvider(FillerProvider):
    """Fill acyclic configurations inside a truncated simplicial set."""

    def __init__(self, sset: TruncatedSSet) -> None:
        self.sset = sset
        self._actions: dict[MonotoneMap, dict[Cell, Cell]] = {}

    def face(self, simplex: Cell, f: MonotoneMap) -> Cell:
        """Restrict ``simplex`` along ``f``."""
        if f not in self._actions:
            self._actions[f] = evaluate(self.sset, f)
        return self._actions[f][simplex]

    def span_fill(
        self, x: Cell, y: Cell, i: int, j: int, n: int
    ) -> Cell | None:
        """First filler in cell order."""
        return find_filler(self.sset, n, i, j, x, y)


# -----------------------------------------------------------------------------
# Constructions
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class FinCategory:
    """A finite category given by explicit tables.

    Composition is written in diagrammatic order: ``composition[(f, g)]``
    is ``g ∘ f``, defined when the target of ``f`` is the source of ``g``.
    Composites with identities may be omitted and are filled in.

    Attributes
    ----------
    objects : tuple of str
        Object names.
    arrows : mapping of str to (str, str)
        Arrow name to ``(source, target)``; identities included.
    identities : mapping of str to str
        Object to its identity arrow.
    composition : mapping of (str, str) to str
        Composition table.

    """

    objects: tuple[str, ...]
    arrows: Mapping[str, tuple[str, str]]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Fill unit composites and check the category axioms."""
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(
            self, "arrows", {a: tuple(e) for a, e in self.arrows.items()}
        )
        self._check_names()
        table = dict(self.composition)
        for a, (src, tgt) in self.arrows.items():
            units = ((self.identities[src], a), (a, self.identities[tgt]))
            for pair in units:
                if table.setdefault(pair, a) != a:
                    msg = f"Unit law fails for {pair}: gives {table[pair]}"
                    raise InvalidCategory(msg)
        object.__setattr__(self, "composition", table)
        self._check_composition()

    def _check_names(self) -> None:
        names = [*self.objects, *self.arrows]
        if any(SEPARATOR in name for name in names):
            msg = f"Names may not contain {SEPARATOR!r}"
            raise InvalidCategory(msg)
        if len(set(self.objects)) != len(self.objects):
            msg = f"Repeated objects in {self.objects}"
            raise InvalidCategory(msg)
        known = set(self.objects)
        for a, (src, tgt) in self.arrows.items():
            if src not in known or tgt not in known:
                msg = f"Arrow {a!r} has unknown endpoints ({src}, {tgt})"
                raise InvalidCategory(msg)
        for obj in self.objects:
            unit = self.identities.get(obj)
            if unit is None or self.arrows.get(unit) != (obj, obj):
                msg = f"Object {obj!r} has no identity arrow"
                raise InvalidCategory(msg)

    def _check_composition(self) -> None:
        for (f, g), h in self.composition.items():
            if f not in self.arrows or g not in self.arrows:
                msg = f"Composite of unknown arrows ({f}, {g})"
                raise InvalidCategory(msg)
            if self.target(f) != self.source(g):
                msg = f"Arrows {f!r} and {g!r} are not composable"
                raise InvalidCategory(msg)
            if self.arrows.get(h) != (self.source(f), self.target(g)):
                msg = f"Composite {h!r} of ({f}, {g}) has wrong endpoints"
                raise InvalidCategory(msg)
        for f, g in self.composable_pairs():
            if (f, g) not in self.composition:
                msg = f"Missing composite of ({f}, {g})"
                raise InvalidCategory(msg)
        for f, g in self.composable_pairs():
            for h in self.arrows:
                if self.source(h) != self.target(g):
                    continue
                left = self.then(self.then(f, g), h)
                right = self.then(f, self.then(g, h))
                if left != right:
                    msg = f"Associativity fails for ({f}, {g}, {h})"
                    raise InvalidCategory(msg)

    def source(self, arrow: str) -> str:
        """Source object of ``arrow``."""
        return self.arrows[arrow][0]

    def target(self, arrow: str) -> str:
        """Target object of ``arrow``."""
        return self.arrows[arrow][1]

    def then(self, f: str, g: str) -> str:
        """``g ∘ f``."""
        return self.composition[(f, g)]

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        """Every pair ``(f, g)`` with the target of ``f`` the source of
        ``g``.
        """
        for f in self.arrows:
            for g in self.arrows:
                if self.target(f) == self.source(g):
                    yield f, g


def _chains(category: FinCategory, n: int) -> list[tuple[str, ...]]:
    chains = [(a,) for a in category.arrows]
    for _ in range(n - 1):
        chains = [
            (*chain, a)
            for chain in chains
            for a in category.arrows
            if category.source(a) == category.target(chain[-1])
        ]
    return chains


def _drop_vertex(
    category: FinCategory, chain: tuple[str, ...], i: int
) -> tuple[str, ...]:
    if i == 0:
        return chain[1:]
    if i == len(chain):
        return chain[:-1]
    merged = category.then(chain[i - 1], chain[i])
    return (*chain[: i - 1], merged, *chain[i + 1 :])


def _insert_identity(
    category: FinCategory, chain: tuple[str, ...], i: int
) -> tuple[str, ...]:
    vertex = (
        category.source(chain[0]) if i == 0 else category.target(chain[i - 1])
    )
    return (*chain[:i], category.identities[vertex], *chain[i:])


def nerve(category: FinCategory, dim: int) -> TruncatedSSet:
    """Truncated nerve of a finite category.

    Parameters
    ----------
    category : FinCategory
        The category.
    dim : int
        Truncation dimension.

    Returns
    -------
    TruncatedSSet
        Objects at level 0; at level ``n >= 1`` strings of ``n``
        composable arrows joined by ``|``.

    """
    chains = {n: _chains(category, n) for n in range(1, dim + 1)}
    cells: dict[int, list[Cell]] = {0: list(category.objects)}
    for n, level in chains.items():
        cells[n] = [SEPARATOR.join(chain) for chain in level]
    faces: dict[tuple[int, int], dict[Cell, Cell]] = {}
    if dim >= 1:
        faces[(1, 0)] = {a: category.target(a) for a in category.arrows}
        faces[(1, 1)] = {a: category.source(a) for a in category.arrows}
    for n in range(2, dim + 1):
        for i in range(n + 1):
            faces[(n, i)] = {
                SEPARATOR.join(chain): SEPARATOR.join(
                    _drop_vertex(category, chain, i)
                )
                for chain in chains[n]
            }
    degeneracies: dict[tuple[int, int], dict[Cell, Cell]] = {}
    if dim >= 1:
        degeneracies[(0, 0)] = dict(category.identities)
    for n in range(1, dim):
        for i in range(n + 1):
            degeneracies[(n, i)] = {
                SEPARATOR.join(chain): SEPARATOR.join(
                    _insert_identity(category, chain, i)
                )
                for chain in chains[n]
            }
    return TruncatedSSet(dim, cells, faces, degeneracies)


def _vertex_name(values: Iterable[int]) -> Cell:
    return "-".join(str(v) for v in values)


def representable(
    n: int, dim: int, keep: Iterable[Iterable[int]] | None = None
) -> TruncatedSSet:
    """The standard ``n``-simplex, or a face-closed part of it, truncated.

    Parameters
    ----------
    n : int
        Simplex dimension.
    dim : int
        Truncation dimension.
    keep : iterable of iterable of int, optional
        Vertex sets generating a subcomplex; by default the whole simplex.
        ``[[0, 1], [1, 2], [0, 2]]`` with ``n = 2`` gives the boundary of
        the 2-simplex.

    Returns
    -------
    TruncatedSSet
        Cells are monotone maps ``[k] -> [n]`` named like ``"0-0-1"``.

    """
    allowed = (
        [frozenset(range(n + 1))]
        if keep is None
        else [frozenset(face) for face in keep]
    )
    levels = {
        k: [
            f.values
            for f in enumerate_maps(k, n)
            if any(set(f.values) <= face for face in allowed)
        ]
        for k in range(dim + 1)
    }
    cells = {
        k: [_vertex_name(v) for v in level] for k, level in levels.items()
    }
    faces = {
        (k, i): {
            _vertex_name(v): _vertex_name(v[:i] + v[i + 1 :])
            for v in levels[k]
        }
        for k, i in face_keys(dim)
    }
    degeneracies = {
        (k, i): {
            _vertex_name(v): _vertex_name(v[: i + 1] + v[i:])
            for v in levels[k]
        }
        for k, i in degeneracy_keys(dim)
    }
    return TruncatedSSet(dim, cells, faces, degeneracies)


def discrete_sset(points: Iterable[Cell], dim: int) -> TruncatedSSet:
    """The constant simplicial set on ``points``, truncated at ``dim``."""
    points = tuple(points)
    same = {x: x for x in points}
    return TruncatedSSet(
        dim,
        dict.fromkeys(range(dim + 1), points),
        dict.fromkeys(face_keys(dim), same),
        dict.fromkeys(degeneracy_keys(dim), same),
    )
