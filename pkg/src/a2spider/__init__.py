"""Exact A2 web calculus: reduction, clasps, braiding and Chebyshev recursions."""

from __future__ import annotations

from .clasp import block, clasp_double, clasp_endo, clasp_single, transition, verify_clasp
from .grothendieck import BivarPoly, cheb, grothendieck_class, verify_split_sum
from .rewrite import Morphism, closure_trace, compose, gen, identity, reduce, star_morphism, tensor
from .scalar import RingScalar, format_scalar, parse_scalar, qint
from .web import WebDiagram, canonical_key

__all__ = [
    "BivarPoly",
    "Morphism",
    "RingScalar",
    "WebDiagram",
    "block",
    "canonical_key",
    "cheb",
    "clasp_double",
    "clasp_endo",
    "clasp_single",
    "closure_trace",
    "compose",
    "format_scalar",
    "gen",
    "grothendieck_class",
    "identity",
    "parse_scalar",
    "qint",
    "reduce",
    "star_morphism",
    "tensor",
    "transition",
    "verify_clasp",
    "verify_split_sum",
]
