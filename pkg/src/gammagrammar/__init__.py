"""Context-free grammars, partial gamma-positivity and the combinatorial
families (type B derangements, Stirling, Legendre-Stirling and Jacobi-Stirling
permutations) whose statistics they generate."""

from .polycore import Poly, X, format_poly, poly_parse
from .grammar import Grammar, derive, derive_alternating, derive_n, preset, verify_grammar_transform
from .combinat import BudgetExceeded, GenLetter, GenWord, StatDistribution, distribution, generate
from .gammalib import (GammaVector, NotHomogeneous, NotSymmetric, PartialGammaExpansion,
                       gamma_expand, gamma_expand_xy, partial_gamma)
from .recurtab import CoefficientTable, table
from .actions import OrbitReport, orbit_decompose

__version__ = "0.1.0"

__all__ = [
    "Poly", "X", "format_poly", "poly_parse",
    "Grammar", "derive", "derive_n", "derive_alternating", "preset", "verify_grammar_transform",
    "BudgetExceeded", "GenLetter", "GenWord", "StatDistribution", "distribution", "generate",
    "GammaVector", "NotHomogeneous", "NotSymmetric", "PartialGammaExpansion",
    "gamma_expand", "gamma_expand_xy", "partial_gamma",
    "CoefficientTable", "table", "OrbitReport", "orbit_decompose",
]
