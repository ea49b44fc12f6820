"""Vee decompositions and vee products.

A map ``g: [r] -> [n]`` cuts ``[n]`` into ``r + 2`` consecutive blocks
``[0, g(0)], [g(0), g(1)], ..., [g(r), n]`` which overlap in single
points. Gluing ordinals end to start along those points is the vee
product; maps glue the same way when neighbouring parts agree on the
shared endpoints.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from .delta import MonotoneMap, compose, identity
from .diagrams import Span, Square
from .exceptions import DomainMismatch, EndpointViolation, NonCommuting

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class VeeDecomposition:
    """A decomposition of ``[n]`` given by its structure map.

    Attributes
    ----------
    base : MonotoneMap
        The map ``[r] -> [n]``.

    """

    base: MonotoneMap

    @property
    def r(self) -> int:
        """Number of interior cut points minus one."""
        return self.base.dom

    @property
    def n(self) -> int:
        """The decomposed ordinal."""
        return self.base.cod

    def offsets(self) -> tuple[int, ...]:
        """Block boundaries ``0, g(0), ..., g(r), n``."""
        return (0, *self.base.values, self.base.cod)

    def components(self) -> tuple[int, ...]:
        """Sizes ``n_0, ..., n_{r+1}`` of the blocks; they sum to ``n``."""
        cuts = self.offsets()
        return tuple(b - a for a, b in zip(cuts, cuts[1:], strict=False))


@dataclass(frozen=True, slots=True)
class VeeFamily:
    """Maps that can be glued by the vee product.

    Every part but the last preserves the maximum and every part but the
    first preserves the minimum.

    Attributes
    ----------
    parts : tuple of MonotoneMap
        ``f_0, ..., f_{r+1}``.

    """

    parts: tuple[MonotoneMap, ...]

    def __post_init__(self) -> None:
        """Check the endpoint conditions."""
        if not isinstance(self.parts, tuple):
            object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            msg = "A vee family needs at least one part"
            raise DomainMismatch(msg)
        last = len(self.parts) - 1
        for i, part in enumerate(self.parts):
            if i < last and not part.preserves_max:
                msg = f"Part {i} ({part}) does not preserve the maximum"
                raise EndpointViolation(msg, part=i, endpoint="max")
            if i > 0 and not part.preserves_min:
                msg = f"Part {i} ({part}) does not preserve the minimum"
                raise EndpointViolation(msg, part=i, endpoint="min")

    @property
    def dom_sizes(self) -> tuple[int, ...]:
        """Domain ordinals of the parts."""
        return tuple(part.dom for part in self.parts)

    @property
    def cod_sizes(self) -> tuple[int, ...]:
        """Codomain ordinals of the parts."""
        return tuple(part.cod for part in self.parts)


def canonical(n: int) -> VeeDecomposition:
    """Return the decomposition ``[0] v [1] v ... v [1] v [0]`` of ``[n]``."""
    return VeeDecomposition(identity(n))


def pushforward(dec: VeeDecomposition, f: MonotoneMap) -> VeeDecomposition:
    """Transport a decomposition of ``f.dom`` along ``f``.

    Parameters
    ----------
    dec : VeeDecomposition
        Decomposition of the domain of ``f``.
    f : MonotoneMap
        Map to push along.

    Returns
    -------
    VeeDecomposition
        The decomposition of ``f.cod`` with base ``f ∘ dec.base``.

    """
    if f.dom != dec.n:
        msg = f"Cannot push a decomposition of [{dec.n}] along {f}"
        raise DomainMismatch(msg)
    return VeeDecomposition(compose(f, dec.base))


def vee_product(parts: VeeFamily | Sequence[MonotoneMap]) -> MonotoneMap:
    """Glue a family of maps blockwise.

    Parameters
    ----------
    parts : VeeFamily or sequence of MonotoneMap
        The family; a plain sequence is validated first.

    Returns
    -------
    MonotoneMap
        The map ``[sum of doms] -> [sum of cods]``.

    """
    family = parts if isinstance(parts, VeeFamily) else VeeFamily(parts)
    values: list[int] = []
    offset = 0
    for i, part in enumerate(family.parts):
        # Shared points are emitted once, by the left part.
        tail = part.values if i == 0 else part.values[1:]
        values.extend(offset + v for v in tail)
        offset += part.cod
    return MonotoneMap(sum(family.dom_sizes), offset, tuple(values))


def vee(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Binary vee product ``f v g``."""
    return vee_product((f, g))


def components_of_map(f: MonotoneMap, dec: VeeDecomposition) -> VeeFamily:
    """Restrict ``f`` to the blocks of a decomposition of its domain.

    Parameters
    ----------
    f : MonotoneMap
        Map to cut up.
    dec : VeeDecomposition
        Decomposition of ``[f.dom]``.

    Returns
    -------
    VeeFamily
        The unique family whose vee product is ``f``.

    """
    if dec.n != f.dom:
        msg = f"Decomposition of [{dec.n}] does not match {f}"
        raise DomainMismatch(msg)
    source = dec.offsets()
    target = pushforward(dec, f).offsets()
    parts = []
    for i in range(len(source) - 1):
        lo, hi = source[i], source[i + 1]
        base, top = target[i], target[i + 1]
        parts.append(
            MonotoneMap(
                hi - lo,
                top - base,
                tuple(f.values[x] - base for x in range(lo, hi + 1)),
            )
        )
    return VeeFamily(tuple(parts))


def decompose_span(span: Span, dec: VeeDecomposition) -> list[Span]:
    """Cut a span into component spans over a decomposition of its source.

    Parameters
    ----------
    span : Span
        The span.
    dec : VeeDecomposition
        Decomposition of ``[span.m]``.

    Returns
    -------
    list of Span
        One span per block.

    """
    fs = components_of_map(span.f, dec).parts
    gs = components_of_map(span.g, dec).parts
    return [Span(f, g) for f, g in zip(fs, gs, strict=True)]


def decompose_square(square: Square, dec: VeeDecomposition) -> list[Square]:
    """Cut a commuting square into component squares.

    Parameters
    ----------
    square : Square
        A commuting square.
    dec : VeeDecomposition
        Decomposition of ``[square.m]``.

    Returns
    -------
    list of Square
        One square per block.

    """
    if not square.commutes:
        msg = f"Cannot decompose a non-commuting square {square}"
        raise NonCommuting(msg)
    fs = components_of_map(square.f, dec).parts
    gs = components_of_map(square.g, dec).parts
    hs = components_of_map(square.h, pushforward(dec, square.f)).parts
    ks = components_of_map(square.k, pushforward(dec, square.g)).parts
    return [
        Square(f, g, h, k)
        for f, g, h, k in zip(fs, gs, hs, ks, strict=True)
    ]


def vee_product_spans(spans: Sequence[Span]) -> Span:
    """Glue component spans legwise."""
    return Span(
        vee_product([s.f for s in spans]), vee_product([s.g for s in spans])
    )


def vee_product_squares(squares: Sequence[Square]) -> Square:
    """Glue component squares edgewise."""
    return Square(
        vee_product([s.f for s in squares]),
        vee_product([s.g for s in squares]),
        vee_product([s.h for s in squares]),
        vee_product([s.k for s in squares]),
    )
