"""Exact generation and coefficient-property certification for Eulerian-type polynomials."""
from .analysis import (
    PROPERTIES,
    PropertyReport,
    Witness,
    alternatingly_increasing,
    bi_gamma,
    darroch_bounds,
    gamma_vector,
    log_concave,
    ratio_monotone,
    replay,
    spiral,
    sturm_real_nonpositive,
    unimodal,
)
from .families import (
    FamilySpec,
    gamma_recurrence,
    generate,
    generate_abc,
    step_general,
    sym_decomp,
    sym_decomp_recurrence,
)
from .polycore import GammaVector, Poly, format_poly, is_palindromic, reverse

__version__ = "0.1.0"

__all__ = [
    "FamilySpec",
    "GammaVector",
    "PROPERTIES",
    "Poly",
    "PropertyReport",
    "Witness",
    "alternatingly_increasing",
    "bi_gamma",
    "darroch_bounds",
    "format_poly",
    "gamma_recurrence",
    "gamma_vector",
    "generate",
    "generate_abc",
    "is_palindromic",
    "log_concave",
    "ratio_monotone",
    "replay",
    "reverse",
    "spiral",
    "step_general",
    "sturm_real_nonpositive",
    "sym_decomp",
    "sym_decomp_recurrence",
    "unimodal",
]
