"""Garside structures for torus knot monoids M(n, m) and even dihedral monoids."""

from .params import TorusParams, compute_params
from .words import Presentation, Relation, Variant, format_word, parse_word

__all__ = [
    "Presentation",
    "Relation",
    "TorusParams",
    "Variant",
    "compute_params",
    "format_word",
    "parse_word",
]
