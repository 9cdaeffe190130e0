"""Shared description records: halfspace form, vertex form, witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import IMat, IVec, QVec

# witness kinds
NO_DECOMPOSITION = "no_decomposition"
NOT_IN_SUM = "not_in_sum"
NORMALITY_FAILURE = "normality_failure"


@dataclass(frozen=True)
class HRep:
    """Halfspace description: normal @ x <= rhs rows and equality rows."""

    inequalities: tuple[tuple[IVec, Fraction], ...]
    equalities: tuple[tuple[IVec, Fraction], ...] = ()


@dataclass(frozen=True)
class VRep:
    """Vertex description: convex hull of vertices plus a cone of rays."""

    vertices: tuple[QVec, ...]
    rays: IMat = ()


@dataclass(frozen=True)
class Witness:
    """A lattice point certifying failure of a location or normality claim.

    ``kind`` is one of no_decomposition (the point lies in a Minkowski sum
    but does not split into lattice summands), not_in_sum, or
    normality_failure; ``scale`` records the dilation at which it was found.
    """

    point: IVec
    kind: str
    scale: int = 1

    def to_dict(self):
        return {"point": list(self.point), "kind": self.kind,
                "scale": self.scale}
