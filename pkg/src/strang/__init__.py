"""Band posets, hammock linear orders and stable-rank estimation for
string algebras presented by quivers with monomial relations."""

__version__ = "0.1.0"

from .orders import (  # noqa: F401
    CornerDescriptor,
    Density,
    Fin,
    OmegaProd,
    OmegaStarProd,
    OrderTerm,
    Shuffle,
    Sum,
    Zero,
    One,
    corner_combine,
    density_of_scattered_term,
    dot_sum_density,
    msb_density_combine,
    normalize_term,
    omega_mult_density,
    term_text,
)
