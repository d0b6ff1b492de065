"""Integral Chow rings of G-zip and truncated display stacks."""

from ._core import (
    MatrixCapExceeded,
    Poly,
    bt_report,
    chow_report,
    cokernel,
    coset_count,
    elementary_symmetric,
    elementary_symmetric_squares,
    fzip_report,
    graded_chow,
    m11_compatibility,
    picard,
    presentation,
    q_dimension,
    rational_rank_series,
    relations,
    smith_normal_form,
    top_degree_bound,
)

__all__ = [
    "MatrixCapExceeded",
    "Poly",
    "bt_report",
    "chow_report",
    "cokernel",
    "coset_count",
    "elementary_symmetric",
    "elementary_symmetric_squares",
    "fzip_report",
    "graded_chow",
    "m11_compatibility",
    "picard",
    "presentation",
    "q_dimension",
    "rational_rank_series",
    "relations",
    "smith_normal_form",
    "top_degree_bound",
]
