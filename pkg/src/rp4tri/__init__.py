"""Small triangulations of real projective space and the tools to check them."""

from .complex import (
    ComplexError,
    HasFixedPoint,
    Involution,
    NotInvariant,
    NotLinkSeparating,
    SimplicialComplex,
    barycentric_subdivision,
    cross_polytope_boundary,
    quotient,
    simplex_boundary,
)
from .homology import HomologyGroup, homology

__all__ = [
    "ComplexError",
    "HasFixedPoint",
    "HomologyGroup",
    "Involution",
    "NotInvariant",
    "NotLinkSeparating",
    "SimplicialComplex",
    "barycentric_subdivision",
    "cross_polytope_boundary",
    "homology",
    "quotient",
    "simplex_boundary",
]
