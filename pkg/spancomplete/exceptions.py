"""Exception hierarchy for spancomplete.

Every error raised by the library derives from `SpanCompleteError`, which
is itself a `ValueError`, so callers that already guard against bad input
with ``except ValueError`` keep working.
"""

from __future__ import annotations

from typing import Any


class SpanCompleteError(ValueError):
    """Base class for all spancomplete errors."""


class DomainMismatch(SpanCompleteError):
    """Maps are not composable or do not share the expected endpoints."""


class IndexOutOfRange(SpanCompleteError):
    """A generator index or value lies outside its ordinal."""


class EndpointViolation(SpanCompleteError):
    """A vee family part fails to preserve a required endpoint.

    Attributes
    ----------
    part : int
        Position of the offending map in the family.
    endpoint : str
        Either ``"min"`` or ``"max"``.

    """

    def __init__(self, msg: str, part: int, endpoint: str) -> None:
        super().__init__(msg)
        self.part = part
        self.endpoint = endpoint


class NoPushout(SpanCompleteError):
    """A span has no pushout in the simplex category.

    Attributes
    ----------
    condition : int
        Which existence condition fails: 1 for the inner condition,
        2 for the minimum condition, 3 for the maximum condition.
    index : int
        Position in the span source where the condition fails.

    """

    def __init__(self, msg: str, condition: int, index: int) -> None:
        super().__init__(msg)
        self.condition = condition
        self.index = index


class HasPushout(SpanCompleteError):
    """A failure witness was requested for a span that has a pushout."""


class NonCommuting(SpanCompleteError):
    """A square (of ordinals or of sets) does not commute."""


class NotPushout(SpanCompleteError):
    """A square expected to be a pushout is not one."""


class InefficientFactorization(SpanCompleteError):
    """A factorization does not add defects."""


class NotBalanced(SpanCompleteError):
    """A square expected to be balanced is not."""


class TrivialSquare(SpanCompleteError):
    """A nontrivial square was required."""


class OutOfTruncation(SpanCompleteError):
    """An ordinal exceeds the truncation dimension of a simplicial set."""


class IncompatiblePair(SpanCompleteError):
    """Two simplices do not agree on the face a span filler needs."""


class InvalidSimplicialSet(SpanCompleteError):
    """Face or degeneracy tables are not total or not well typed."""


class InvalidCategory(SpanCompleteError):
    """A finite category presentation breaks the category axioms."""


class InvalidComplex(SpanCompleteError):
    """Facets do not describe a (directed) simplicial complex."""


class NotAcyclic(SpanCompleteError):
    """A configuration is not (directed) acyclic."""


class IncompatibleAssignment(SpanCompleteError):
    """Two facet simplices disagree on their shared face.

    Attributes
    ----------
    facets : tuple
        The two facets, as sorted vertex tuples.
    face : tuple
        Their shared face.

    """

    def __init__(
        self, msg: str, facets: tuple[Any, ...], face: tuple[int, ...]
    ) -> None:
        super().__init__(msg)
        self.facets = facets
        self.face = face


class NoFiller(SpanCompleteError):
    """A provider found no span filler.

    Attributes
    ----------
    step : int
        Position in the running intersection order that failed.

    """

    def __init__(self, msg: str, step: int) -> None:
        super().__init__(msg)
        self.step = step


class NotATriangulation(SpanCompleteError):
    """Triangles do not triangulate the polygon."""


class ArityMismatch(SpanCompleteError):
    """A map does not match the arity of an instance simplex."""


class IncompatibleProjections(SpanCompleteError):
    """Two tables project to different tables on their shared columns.

    Attributes
    ----------
    left, right : Any
        The two projections onto the shared columns.

    """

    def __init__(self, msg: str, left: Any, right: Any) -> None:
        super().__init__(msg)
        self.left = left
        self.right = right


class IncompatibleRestrictions(SpanCompleteError):
    """Two pseudometrics disagree on their shared points."""


class IncompatibleMarginals(SpanCompleteError):
    """Two distributions have different marginals on shared variables."""


class InvalidPseudometric(SpanCompleteError):
    """A distance matrix breaks a pseudometric axiom."""


class InvalidDistribution(SpanCompleteError):
    """Probabilities are negative or do not sum to exactly one."""
