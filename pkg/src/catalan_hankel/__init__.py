"""Exact Hankel transforms of Catalan combinations, Riordan arrays and J-fractions."""

from .catalan import (
    FAMILIES,
    SequenceSpec,
    T_formula,
    T_matrix,
    catalan_number,
    catalan_seq,
    combo_seq,
    conjecture_sum,
    conjugated_hankel,
    eqE1_product,
    hankel_poly,
    hankel_polys,
    read_bfile,
    residual_seq,
    shifted_catalan_seq,
    spine_bands,
    verify_T,
    verify_T_columns,
)
from .exact import A, B, BivarPoly, InexactDivision, exact_divide, field_divide, render
from .hankel import (
    InsufficientTerms,
    conjugate_and_bands,
    det_cofactor,
    det_fraction_free,
    hankel_matrix,
    hankel_transform,
    penta_minors_gf,
    pentadiagonal,
    principal_minors,
)
from .identities import READINGS, REGISTRY, UnknownIdentity, check_readings, verify_identity
from .jfrac import JFraction, jfraction_extract, jfraction_series, ratio_check, tridiag_from_jfraction
from .matrix import Bandwidth, Matrix
from .report import CaseResult, ConjectureReport
from .riordan import (
    NotRiordan,
    RiordanPair,
    ballot_m,
    ballot_m_tilde,
    column_rescale,
    ftra_apply,
    matrix_from_production,
    pascal,
    production_matrix,
    riordan_entry,
    riordan_inverse,
    riordan_mul,
)
from .series import NoFit, OrderMismatch, PowerSeries, RationalGF, fit_rational_gf, rational_expand

__version__ = "0.1.0"
