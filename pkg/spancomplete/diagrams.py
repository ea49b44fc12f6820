"""Spans, squares and grids of monotone maps.

A square is drawn with ``f`` on top, ``g`` on the left, ``h`` on the right
and ``k`` on the bottom::

    [m] --f--> [p]
     |          |
     g          h
     v          v
    [q] --k--> [n]

Squares are stored even when they do not commute; operations that need a
commuting square check `Square.commutes` and raise `NonCommuting`.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

from .delta import MonotoneMap, compose, identity, is_identity
from .exceptions import DomainMismatch


@dataclass(frozen=True, slots=True)
class Span:
    """Two maps out of a common ordinal.

    Attributes
    ----------
    f : MonotoneMap
        Map ``[m] -> [p]``.
    g : MonotoneMap
        Map ``[m] -> [q]``.

    """

    f: MonotoneMap
    g: MonotoneMap

    def __post_init__(self) -> None:
        """Check the legs share their domain."""
        if self.f.dom != self.g.dom:
            msg = f"Span legs start at [{self.f.dom}] and [{self.g.dom}]"
            raise DomainMismatch(msg)

    @property
    def m(self) -> int:
        """Source ordinal."""
        return self.f.dom

    @property
    def p(self) -> int:
        """Target of ``f``."""
        return self.f.cod

    @property
    def q(self) -> int:
        """Target of ``g``."""
        return self.g.cod

    def mirror(self) -> Span:
        """Swap the legs."""
        return Span(self.g, self.f)


@dataclass(frozen=True, slots=True)
class Square:
    """A square of monotone maps ``h ∘ f`` vs ``k ∘ g``.

    Attributes
    ----------
    f, g, h, k : MonotoneMap
        Top, left, right and bottom edges.

    """

    f: MonotoneMap
    g: MonotoneMap
    h: MonotoneMap
    k: MonotoneMap

    def __post_init__(self) -> None:
        """Check the four edges fit together."""
        if (
            self.f.dom != self.g.dom
            or self.h.dom != self.f.cod
            or self.k.dom != self.g.cod
            or self.h.cod != self.k.cod
        ):
            msg = (
                "Edges do not form a square: "
                f"f={self.f}, g={self.g}, h={self.h}, k={self.k}"
            )
            raise DomainMismatch(msg)

    @property
    def m(self) -> int:
        """Top-left ordinal."""
        return self.f.dom

    @property
    def p(self) -> int:
        """Top-right ordinal."""
        return self.f.cod

    @property
    def q(self) -> int:
        """Bottom-left ordinal."""
        return self.g.cod

    @property
    def n(self) -> int:
        """Bottom-right ordinal."""
        return self.h.cod

    @property
    def span(self) -> Span:
        """The span ``(f, g)``."""
        return Span(self.f, self.g)

    @property
    def cospan(self) -> tuple[MonotoneMap, MonotoneMap]:
        """The cospan ``(h, k)``."""
        return (self.h, self.k)

    @property
    def commutes(self) -> bool:
        """Whether ``h ∘ f == k ∘ g``."""
        return compose(self.h, self.f) == compose(self.k, self.g)

    @property
    def is_trivial(self) -> bool:
        """Whether one pair of parallel edges are identities."""
        return (is_identity(self.f) and is_identity(self.k)) or (
            is_identity(self.g) and is_identity(self.h)
        )

    @property
    def maps(self) -> tuple[MonotoneMap, ...]:
        """The edges in the order ``f, g, h, k``."""
        return (self.f, self.g, self.h, self.k)

    def mirror(self) -> Square:
        """Reflect along the diagonal, swapping ``f``/``g`` and ``h``/``k``."""
        return Square(self.g, self.f, self.k, self.h)

    def key(self) -> tuple:
        """Ordering key over the four edges."""
        return tuple(edge.key() for edge in self.maps)

    def normalized(self) -> Square:
        """Return the smaller of the square and its mirror."""
        other = self.mirror()
        return other if other.key() < self.key() else self

    def hcompose(self, right: Square) -> Square:
        """Paste ``right`` to the right of this square.

        Parameters
        ----------
        right : Square
            Square whose left edge is this square's right edge.

        Returns
        -------
        Square
            The outer square.

        """
        if right.g != self.h:
            msg = f"Right square's left edge {right.g} is not {self.h}"
            raise DomainMismatch(msg)
        return Square(
            compose(right.f, self.f),
            self.g,
            right.h,
            compose(right.k, self.k),
        )

    def vcompose(self, below: Square) -> Square:
        """Paste ``below`` under this square.

        Parameters
        ----------
        below : Square
            Square whose top edge is this square's bottom edge.

        Returns
        -------
        Square
            The outer square.

        """
        if below.f != self.k:
            msg = f"Lower square's top edge {below.f} is not {self.k}"
            raise DomainMismatch(msg)
        return Square(
            self.f,
            compose(below.g, self.g),
            compose(below.h, self.h),
            below.k,
        )

    @classmethod
    def trivial_on(cls, f: MonotoneMap) -> Square:
        """The square with ``f`` on top and bottom and identities on the sides.

        Parameters
        ----------
        f : MonotoneMap
            Horizontal map.

        Returns
        -------
        Square
            ``(f, id, id, f)``.

        """
        return cls(f, identity(f.dom), identity(f.cod), f)


@dataclass(frozen=True)
class Grid:
    """Rows of squares pasted together.

    A cell is either a `Square` or a nested `Grid` standing for its
    composite. Inside a row, neighbouring cells share their vertical edge;
    consecutive rows share the composite horizontal edge. Rows may differ
    in length when a factorization nests; `is_rectangular` reports whether
    the cells line up column by column as well.

    Attributes
    ----------
    cells : tuple of tuple
        ``cells[r][c]`` is the cell in row ``r``, column ``c``.

    """

    cells: tuple[tuple[Square | Grid, ...], ...]

    def __post_init__(self) -> None:
        """Check adjacency within rows and between rows."""
        if not self.cells or any(not row for row in self.cells):
            msg = "A grid needs at least one cell in every row"
            raise DomainMismatch(msg)
        previous = None
        for row in self.cells:
            composite = _compose_row(row)
            if previous is not None and composite.f != previous.k:
                msg = (
                    f"Row tops {composite.f} and bottoms {previous.k} "
                    "do not match"
                )
                raise DomainMismatch(msg)
            previous = composite

    @property
    def rows(self) -> int:
        """Number of rows."""
        return len(self.cells)

    @property
    def cols(self) -> int:
        """Length of the longest row."""
        return max(len(row) for row in self.cells)

    @cached_property
    def composite(self) -> Square:
        """The outer square of the grid."""
        rows = [_compose_row(row) for row in self.cells]
        outer = rows[0]
        for square in rows[1:]:
            outer = outer.vcompose(square)
        return outer

    @property
    def is_rectangular(self) -> bool:
        """Whether every cell is a square and columns share edges too."""
        if any(isinstance(c, Grid) for row in self.cells for c in row):
            return False
        if len({len(row) for row in self.cells}) != 1:
            return False
        return all(
            upper.k == lower.f
            for top, bottom in zip(self.cells, self.cells[1:], strict=False)
            for upper, lower in zip(top, bottom, strict=True)
        )

    def leaves(self) -> Iterator[Square]:
        """Iterate over the basic cells, descending into nested grids."""
        for row in self.cells:
            for cell in row:
                if isinstance(cell, Grid):
                    yield from cell.leaves()
                else:
                    yield cell

    def mirror(self) -> Grid:
        """Transpose the grid and mirror every cell.

        Only single-row, single-column or rectangular grids can be
        transposed; nested cells are mirrored recursively.
        """
        widths = {len(row) for row in self.cells}
        if len(widths) != 1:
            msg = "Only grids with rows of equal length can be mirrored"
            raise DomainMismatch(msg)
        width = widths.pop()
        return Grid(
            tuple(
                tuple(_mirror_cell(row[c]) for row in self.cells)
                for c in range(width)
            )
        )

    @classmethod
    def single(cls, square: Square) -> Grid:
        """A 1x1 grid."""
        return cls(((square,),))

    @classmethod
    def row(cls, cells: list[Square | Grid]) -> Grid:
        """A single-row grid."""
        return cls((tuple(cells),))


def cell_square(cell: Square | Grid) -> Square:
    """Return the square a cell stands for."""
    return cell.composite if isinstance(cell, Grid) else cell


def _mirror_cell(cell: Square | Grid) -> Square | Grid:
    return cell.mirror()


def _compose_row(row: tuple[Square | Grid, ...]) -> Square:
    outer = cell_square(row[0])
    for cell in row[1:]:
        outer = outer.hcompose(cell_square(cell))
    return outer
