"""Exact rank-2 Soergel calculus.

Two-colored quantum numbers, subexpression sums over dihedral groups, and the
localized Bott-Samuelson bimodules on which the rank-2 morphisms are checked.
"""

from .bipoly import BiPoly
from .dihedral import GroupElem
from .qnum import Color, assumption_check, two_color_binomial, two_color_quantum
from .realizations import catalog, load_realization
from .symalg import QElem, Realization, RPoly, validate_realization

__all__ = [
    "BiPoly",
    "Color",
    "GroupElem",
    "QElem",
    "RPoly",
    "Realization",
    "assumption_check",
    "catalog",
    "load_realization",
    "two_color_binomial",
    "two_color_quantum",
    "validate_realization",
]

__version__ = "0.1.0"
