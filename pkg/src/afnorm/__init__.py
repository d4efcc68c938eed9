"""Twisted Alexander-Fox norms and graph norms on the 1-cohomology of 2-complexes."""

from .abelian import AbelianStructure, Character, abelianize, characters, smith_normal_form
from .alexander import alexander_matrix, af_polynomial, elementary_ideal, specialize
from .cw import CW2Complex, brute_force_min, is_cocycle, minimize_norm, validate_complex
from .fox import FreeRingElem, fox_derivative
from .laurent import LaurentPoly, canonicalize, gcd, newton_polytope, span
from .norms import (
    CohomologyClass,
    af_norm,
    presentation_complex_norm,
    trivial_norm,
    verify_inequality,
)
from .presentation import FreeWord, Presentation, generator_occurrences, parse_presentation

__version__ = "0.1.0"

__all__ = [
    "AbelianStructure", "Character", "CohomologyClass", "CW2Complex", "FreeRingElem",
    "FreeWord", "LaurentPoly", "Presentation", "abelianize", "af_norm", "af_polynomial",
    "alexander_matrix", "brute_force_min", "canonicalize", "characters", "elementary_ideal",
    "fox_derivative", "gcd", "generator_occurrences", "is_cocycle", "minimize_norm",
    "newton_polytope", "parse_presentation", "presentation_complex_norm", "smith_normal_form",
    "span", "specialize", "trivial_norm", "validate_complex", "verify_inequality",
]
