"""Bibifix-free square matrices and non-expandable cross-bibifix-free codes."""

from .codes import (
    MatrixCode,
    RectMatrix,
    build_cbbf,
    build_cbbf_rect,
    expands,
    is_cross_bibifix_free_rect_pair,
    verify_cross_set,
    verify_nonexpandable,
    verify_rect_cross_set,
)
from .errors import DEFAULT_BUDGET, InvalidInputError, NoGrayOrderError, ResourceLimitError
from .generation import MatrixSet, apply_phi, apply_psi, brute_bbf, count_bbf, generate_bbf
from .graycode import (
    GrayListing,
    build_cbbf_gray,
    diagonal_gray,
    f_index,
    offdiag_decode,
    offdiag_encode,
    reflected_gray,
    verify_gray,
)
from .matrices import (
    SquareMatrix,
    SubmatrixView,
    bibifix_dims,
    biprefix,
    bisuffix,
    is_bibifix_free,
    is_cross_bibifix_free_pair,
    main_diagonal,
)
from .words import (
    Word,
    WordCode,
    bifix_lengths,
    build_s,
    count_bf,
    enumerate_bf,
    is_bifix_free,
    is_cross_bifix_free_pair,
    is_nonexpandable_word_set,
    select_k,
)

__version__ = "0.1.0"
