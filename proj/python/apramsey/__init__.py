"""Exact-arithmetic verifier and search engine for spherical colorings that
avoid short monochromatic arithmetic progressions."""

from ._core import (
    canonical_translate,
    certify_alpha,
    complement,
    covers,
    floor_div,
    k_sets,
    min_cover_n,
    mod_inverse,
    parallelogram_free,
    quadratic_residues,
    real_witness,
    red_interval_condition,
    red_l3_free,
    reproduce,
    search_pairs,
    shifted_residue_cover,
    translate,
    verify_certificate,
    verify_multi,
    verify_pair,
    verify_parallelogram,
    VerifierError,
)

__all__ = [
    "canonical_translate",
    "certify_alpha",
    "complement",
    "covers",
    "floor_div",
    "k_sets",
    "min_cover_n",
    "mod_inverse",
    "parallelogram_free",
    "quadratic_residues",
    "real_witness",
    "red_interval_condition",
    "red_l3_free",
    "reproduce",
    "search_pairs",
    "shifted_residue_cover",
    "translate",
    "verify_certificate",
    "verify_multi",
    "verify_pair",
    "verify_parallelogram",
    "VerifierError",
]

__version__ = "0.1.0"
