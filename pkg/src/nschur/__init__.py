"""Exact n-Schur functions and grassmannian determinant expansions.

Everything is computed in exact rational arithmetic: sparse polynomials in
the matrix variables h[i,j,k] and time variables t[m], index sequences in
bijection with integer partitions, fraction-free determinants, a
finite-rank grassmannian model with Pluecker coordinates, the frame
determinant of a truncated matrix series, and the expansion of the one as a
coordinate-weighted sum of the others.
"""

from .errors import (
    DenominatorNotUnit,
    InsufficientDegree,
    MissingAssignment,
    NonExactDivision,
    NotStabilized,
    SingularConstantTerm,
    TruncationTooSmall,
    ZeroPolynomial,
)
from .rings import (
    Polynomial,
    RationalFunction,
    exact_div,
    h,
    hvar,
    t,
    tvar,
    variable_key,
    variable_latex,
    variable_text,
    variable_weight,
)
from .partitions import (
    MayaSequence,
    check_partition,
    parse_index,
    parse_maya,
    parse_partition,
    partition_text,
    partitions_of_weight,
    sequences_of_weight,
)
from .determinant import det_cofactor, det_fraction_free
from .schur import (
    TruncatedMatrix,
    entry_indices,
    h0_det,
    h0_matrix,
    matrix_entry,
    n_schur,
    n_schur_at,
    n_schur_eval,
    specialize_h0_identity,
    truncated_matrix,
)
from .grassmann import (
    ExpansionReport,
    FinitePoint,
    SeriesMatrix,
    action_matrix,
    frame_det,
    operator_block,
    pluecker_coord,
    pluecker_coordinates,
    pluecker_expansion,
    pluecker_support,
    plus_block,
    stabilization_blocks,
    verify_expansion,
)
from .kp import (
    coeffs_from_json,
    coeffs_to_json,
    complete_homogeneous,
    exponential_series,
    jacobi_trudi,
    n_schur_of_series,
    schur_polynomial,
    symbolic_times,
    tau_quotient_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "DenominatorNotUnit",
    "InsufficientDegree",
    "MissingAssignment",
    "NonExactDivision",
    "NotStabilized",
    "SingularConstantTerm",
    "TruncationTooSmall",
    "ZeroPolynomial",
    "Polynomial",
    "RationalFunction",
    "exact_div",
    "h",
    "hvar",
    "t",
    "tvar",
    "variable_key",
    "variable_latex",
    "variable_text",
    "variable_weight",
    "MayaSequence",
    "check_partition",
    "parse_index",
    "parse_maya",
    "parse_partition",
    "partition_text",
    "partitions_of_weight",
    "sequences_of_weight",
    "det_cofactor",
    "det_fraction_free",
    "TruncatedMatrix",
    "entry_indices",
    "h0_det",
    "h0_matrix",
    "matrix_entry",
    "n_schur",
    "n_schur_at",
    "n_schur_eval",
    "specialize_h0_identity",
    "truncated_matrix",
    "ExpansionReport",
    "FinitePoint",
    "SeriesMatrix",
    "action_matrix",
    "frame_det",
    "operator_block",
    "pluecker_coord",
    "pluecker_coordinates",
    "pluecker_expansion",
    "pluecker_support",
    "plus_block",
    "stabilization_blocks",
    "verify_expansion",
    "coeffs_from_json",
    "coeffs_to_json",
    "complete_homogeneous",
    "exponential_series",
    "jacobi_trudi",
    "n_schur_of_series",
    "schur_polynomial",
    "symbolic_times",
    "tau_quotient_expansion",
    "__version__",
]
