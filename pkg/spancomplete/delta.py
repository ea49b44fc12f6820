"""Objects and morphisms of the simplex category.

An object ``[n] = {0, ..., n}`` is represented by the integer ``n``. A
morphism is a `MonotoneMap` that stores its dense value sequence; generator
words are derived from it on demand by `factor_into_generators`.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .exceptions import DomainMismatch, IndexOutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class MonotoneMap:
    """A monotone map ``[dom] -> [cod]``.

    Attributes
    ----------
    dom : int
        Source ordinal ``m``.
    cod : int
        Target ordinal ``n``.
    values : tuple of int
        ``values[i]`` is the image of ``i``; nondecreasing and bounded by
        ``cod``.

    """

    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate shape and monotonicity."""
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))
        if self.dom < 0 or self.cod < 0:
            msg = (
                "Ordinals must be nonnegative, got "
                f"[{self.dom}]->[{self.cod}]"
            )
            raise IndexOutOfRange(msg)
        if len(self.values) != self.dom + 1:
            msg = (
                f"A map out of [{self.dom}] needs {self.dom + 1} values, "
                f"got {len(self.values)}"
            )
            raise DomainMismatch(msg)
        previous = 0
        for i, value in enumerate(self.values):
            if not 0 <= value <= self.cod:
                msg = f"Value {value} at {i} lies outside [{self.cod}]"
                raise IndexOutOfRange(msg)
            if value < previous:
                msg = f"Values {self.values} are not monotone at {i}"
                raise IndexOutOfRange(msg)
            previous = value

    def __call__(self, i: int) -> int:
        """Evaluate the map at ``i``."""
        return self.values[i]

    def __str__(self) -> str:
        """Render as ``[m]->[n] (v0, ..., vm)``."""
        return f"[{self.dom}]->[{self.cod}] {self.values}"

    @property
    def image(self) -> frozenset[int]:
        """Set of values hit by the map."""
        return frozenset(self.values)

    @property
    def is_injective(self) -> bool:
        """Whether the map is a coface map."""
        return len(self.image) == self.dom + 1

    @property
    def is_surjective(self) -> bool:
        """Whether the map is a codegeneracy map."""
        return len(self.image) == self.cod + 1

    @property
    def preserves_min(self) -> bool:
        """Whether ``0`` is sent to ``0``."""
        return self.values[0] == 0

    @property
    def preserves_max(self) -> bool:
        """Whether ``dom`` is sent to ``cod``."""
        return self.values[-1] == self.cod

    def key(self) -> tuple[int, int, tuple[int, ...]]:
        """Total ordering key used to normalise mirror images."""
        return (self.dom, self.cod, self.values)

    @classmethod
    def identity(cls, n: int) -> MonotoneMap:
        """Identity map of ``[n]``."""
        return cls(n, n, tuple(range(n + 1)))

    @classmethod
    def constant(cls, m: int, n: int, value: int) -> MonotoneMap:
        """Constant map ``[m] -> [n]`` with the given value."""
        return cls(m, n, (value,) * (m + 1))


def identity(n: int) -> MonotoneMap:
    """Return the identity map of ``[n]``.

    Parameters
    ----------
    n : int
        The ordinal.

    Returns
    -------
    MonotoneMap
        ``id_[n]``.

    """
    return MonotoneMap.identity(n)


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Return the composite ``f ∘ g`` (apply ``g`` first).

    Parameters
    ----------
    f : MonotoneMap
        Second map.
    g : MonotoneMap
        First map; its codomain must be the domain of ``f``.

    Returns
    -------
    MonotoneMap
        The composite ``[g.dom] -> [f.cod]``.

    """
    if g.cod != f.dom:
        msg = f"Cannot compose {f} after {g}: [{g.cod}] is not [{f.dom}]"
        raise DomainMismatch(msg)
    return MonotoneMap(g.dom, f.cod, tuple(f.values[v] for v in g.values))


def compose_all(
    maps: Sequence[MonotoneMap], dom: int | None = None
) -> MonotoneMap:
    """Compose a word of maps given in application order.

    Parameters
    ----------
    maps : sequence of MonotoneMap
        ``maps[0]`` is applied first.
    dom : int, optional
        Domain used when ``maps`` is empty.

    Returns
    -------
    MonotoneMap
        The composite, or the identity of ``[dom]`` for an empty word.

    """
    if not maps:
        if dom is None:
            msg = "An empty word needs an explicit domain"
            raise DomainMismatch(msg)
        return identity(dom)
    result = maps[0]
    for step in maps[1:]:
        result = compose(step, result)
    return result


def generating_coface(n: int, i: int) -> MonotoneMap:
    """Return ``d^{n,i}: [n-1] -> [n]``, the injection skipping ``i``.

    Parameters
    ----------
    n : int
        Target ordinal, at least 1.
    i : int
        Omitted value, ``0 <= i <= n``.

    Returns
    -------
    MonotoneMap
        The generating coface map.

    """
    if n < 1 or not 0 <= i <= n:
        msg = f"No coface d^{{{n},{i}}}: need n >= 1 and 0 <= i <= n"
        raise IndexOutOfRange(msg)
    values = tuple(j if j < i else j + 1 for j in range(n))
    return MonotoneMap(n - 1, n, values)


def generating_codegeneracy(n: int, i: int) -> MonotoneMap:
    """Return ``s^{n,i}: [n+1] -> [n]``, the surjection hitting ``i`` twice.

    Parameters
    ----------
    n : int
        Target ordinal.
    i : int
        Doubled value, ``0 <= i <= n``.

    Returns
    -------
    MonotoneMap
        The generating codegeneracy map.

    """
    if n < 0 or not 0 <= i <= n:
        msg = f"No codegeneracy s^{{{n},{i}}}: need 0 <= i <= n"
        raise IndexOutOfRange(msg)
    return MonotoneMap(
        n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2))
    )


def defect(f: MonotoneMap) -> int:
    """Return ``n + m + 2 - 2|im f|``, the number of generators of ``f``."""
    return f.cod + f.dom + 2 - 2 * len(f.image)


def is_identity(f: MonotoneMap) -> bool:
    """Whether ``f`` is an identity map."""
    return f.dom == f.cod and f.values == tuple(range(f.dom + 1))


def is_coface(f: MonotoneMap) -> bool:
    """Whether ``f`` is injective."""
    return f.is_injective


def is_codegeneracy(f: MonotoneMap) -> bool:
    """Whether ``f`` is surjective."""
    return f.is_surjective


def is_generator(f: MonotoneMap) -> bool:
    """Whether ``f`` is a generating coface or codegeneracy map."""
    return defect(f) == 1


def missing_values(f: MonotoneMap) -> list[int]:
    """Values of ``[cod]`` outside the image, ascending."""
    image = f.image
    return [v for v in range(f.cod + 1) if v not in image]


def repeated_positions(f: MonotoneMap) -> list[int]:
    """Positions ``j`` with ``f(j) == f(j+1)``, ascending."""
    return [j for j in range(f.dom) if f.values[j] == f.values[j + 1]]


def reedy_factorize(f: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Split ``f`` through its image.

    Parameters
    ----------
    f : MonotoneMap
        Any map.

    Returns
    -------
    tuple of MonotoneMap
        ``(s, d)`` with ``s`` surjective, ``d`` injective and
        ``f == compose(d, s)``.

    """
    image = sorted(f.image)
    rank = {v: r for r, v in enumerate(image)}
    top = len(image) - 1
    s = MonotoneMap(f.dom, top, tuple(rank[v] for v in f.values))
    d = MonotoneMap(top, f.cod, tuple(image))
    return s, d


def factor_into_generators(
    f: MonotoneMap, *, reverse: bool = False
) -> list[MonotoneMap]:
    """Factor ``f`` into ``defect(f)`` generating maps.

    Codegeneracies come first, in decreasing index order, followed by
    cofaces in increasing index order. The list is in application order,
    so ``compose_all(result, f.dom) == f``.

    Parameters
    ----------
    f : MonotoneMap
        Map to factor.
    reverse : bool, default False
        Use increasing codegeneracy and decreasing coface indices
        instead; the composite is the same.

    Returns
    -------
    list of MonotoneMap
        Generating maps; empty exactly when ``f`` is an identity.

    """
    word: list[MonotoneMap] = []
    current = f.dom
    repeated = repeated_positions(f)
    missing = missing_values(f)
    if reverse:
        for merged, j in enumerate(repeated):
            word.append(generating_codegeneracy(current - 1, j - merged))
            current -= 1
        for below, i in reversed(list(enumerate(missing))):
            current += 1
            word.append(generating_coface(current, i - below))
        return word
    for j in reversed(repeated):
        word.append(generating_codegeneracy(current - 1, j))
        current -= 1
    for i in missing:
        current += 1
        word.append(generating_coface(current, i))
    return word


def is_efficient(f: MonotoneMap, g: MonotoneMap) -> bool:
    """Whether ``f ∘ g`` has defect ``defect(f) + defect(g)``.

    Parameters
    ----------
    f : MonotoneMap
        Second map.
    g : MonotoneMap
        First map.

    Returns
    -------
    bool
        True when the factorization adds defects.

    """
    return defect(compose(f, g)) == defect(f) + defect(g)


def enumerate_maps(m: int, n: int) -> Iterator[MonotoneMap]:
    """Yield every monotone map ``[m] -> [n]`` in lexicographic order.

    Parameters
    ----------
    m : int
        Source ordinal.
    n : int
        Target ordinal.

    Yields
    ------
    MonotoneMap
        Each of the ``C(m+n+1, m+1)`` maps exactly once.

    """
    for values in itertools.combinations_with_replacement(
        range(n + 1), m + 1
    ):
        yield MonotoneMap(m, n, values)


def subset_inclusion(
    subset: Iterable[int], superset: Iterable[int]
) -> MonotoneMap:
    """Coface map induced by an inclusion of finite sets of integers.

    Both sets are identified with ordinals through their sorted order.

    Parameters
    ----------
    subset : iterable of int
        Nonempty subset of ``superset``.
    superset : iterable of int
        Ambient set.

    Returns
    -------
    MonotoneMap
        ``[|subset|-1] -> [|superset|-1]`` sending ranks to ranks.

    """
    small = sorted(set(subset))
    big = sorted(set(superset))
    position = {v: r for r, v in enumerate(big)}
    try:
        values = tuple(position[v] for v in small)
    except KeyError as err:
        msg = f"{small} is not contained in {big}"
        raise DomainMismatch(msg) from err
    if not small:
        msg = "Cannot include the empty set into an ordinal"
        raise DomainMismatch(msg)
    return MonotoneMap(len(small) - 1, len(big) - 1, values)
