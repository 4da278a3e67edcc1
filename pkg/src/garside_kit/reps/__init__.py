"""Representations: free-group automorphisms, characters and LKB matrices."""

from .free import (
    FreeEndo,
    FreeWord,
    abelian_character,
    are_conjugate,
    artin_image_membership,
    artin_rep,
    artin_rep_apply,
    b_type_character,
    cyclic_reduce,
    rho_d_apply,
    semidirect_relation_check,
)
from .lkb import (
    LKBMatrix,
    format_T_table,
    injectivity_scan,
    integer_positive_roots,
    lkb_Phi_matrices,
    lkb_Phi_matrix,
    lkb_phi_matrix,
    parse_T_table,
    solve_T_table,
    validate_matrices,
)
from .poly2 import Poly2

rho_D_apply = rho_d_apply

__all__ = [
    "FreeEndo",
    "FreeWord",
    "LKBMatrix",
    "Poly2",
    "abelian_character",
    "are_conjugate",
    "artin_image_membership",
    "artin_rep",
    "artin_rep_apply",
    "b_type_character",
    "cyclic_reduce",
    "format_T_table",
    "injectivity_scan",
    "integer_positive_roots",
    "lkb_Phi_matrices",
    "lkb_Phi_matrix",
    "lkb_phi_matrix",
    "parse_T_table",
    "rho_D_apply",
    "rho_d_apply",
    "semidirect_relation_check",
    "solve_T_table",
    "validate_matrices",
]
