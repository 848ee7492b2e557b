"""Exact f-vectors of flow polytopes of complete graphs."""

from .compositions import (
    binary_netflows,
    cry_netflow,
    downset_c,
    k_coeff,
    netflow,
    refinements,
    revcomp,
    seq,
    signature,
)
from .counts import (
    cry_edge_count,
    cry_vertex_count,
    flow_vertex_count,
    low_codim_face_count,
    partition_coeffs,
)
from .facecount import (
    FVector,
    cry_face_count_binomial,
    cry_fpoly,
    cry_primitive_fpoly,
    fpoly_from_primitive,
    fpoly_main,
    helper_identity_check,
    p_alpha_eval,
    primitive_fpoly,
    primitive_fpoly_subsets,
)
from .genfunc import SeriesRequest, cry_face_series, jelinek_series, product_identity_check
from .laurent import LaurentPoly, TruncatedSeries

__version__ = "0.1.0"
