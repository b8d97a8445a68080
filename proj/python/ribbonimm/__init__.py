"""Ribbon decompositions of skew shapes and their immanants."""

from ._ribbonimm import (
    BudgetExceeded,
    Decomposition,
    Error,
    IncompatibleShape,
    InvalidInput,
    Ribbon,
    SkewShape,
    SymPoly,
    bruhat_leq,
    check_determinant,
    decompose,
    fixture,
    immanants,
    kl_immanants,
    kl_polynomial,
    matrix,
    positivity_report,
    principal_minor,
    schur,
    skew_schur,
)

__all__ = [name for name in dir() if not name.startswith("_")]
