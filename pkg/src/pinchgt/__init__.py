"""Spectral pinching and finite tensor-power certificates for the
Golden-Thompson trace inequality tr exp(A+B) <= tr(exp A exp B)."""

from .core import (
    HermitianMatrix,
    add,
    as_array,
    construct_hermitian,
    frobenius_norm,
    identity,
    loewner_leq,
    matmul,
    random_hermitian,
    random_pd,
    random_psd,
    random_unitary,
    scale,
    trace,
)
from .errors import (
    BadPartition,
    ConvergenceFailure,
    DimensionMismatch,
    DomainError,
    MatrixFileError,
    NotFinite,
    NotHermitian,
    NotPSD,
    NotPositiveDefinite,
    NotSquare,
    PinchError,
    SizeOverflow,
)
from .functions import apply_spectral_function, apply_to_decomposition, herm_exp, herm_log
from .matrixio import load_matrix, matrix_digest, parse_matrix, serialize_matrix, write_matrix
from .pinching import (
    DephasingFamily,
    PinchOperator,
    block_diagonal_part,
    commutation_residual,
    dephasing_family,
    lower_bound_margin,
    mixture_residual,
    pinch,
    pinch_operator,
    pinch_via_mixture,
    trace_preservation_residual,
    verify_commutation,
    verify_lower_bound,
    verify_mixture_agreement,
    verify_trace_preservation,
)
from .policy import DEFAULT_POLICY, NumericPolicy
from .spectral import (
    SpectralDecomposition,
    decompose,
    distinct_count,
    eigh,
    eigvals,
    is_positive_definite,
    require_positive_definite,
)
from .tensor import (
    DIM_CAP,
    SpectrumCount,
    binomial_bound,
    count_distinct_spectrum,
    kron,
    tensor_power,
)
from .verify import (
    ChainTrace,
    GTReport,
    analytic_gap_bound,
    chain_checks,
    chain_trace,
    convergence_study,
    finite_power_sides,
    gt_certify_hermitian,
    gt_check,
    gt_from_chain,
)

__version__ = "0.1.0"

__all__ = [
    "HermitianMatrix",
    "NumericPolicy",
    "DEFAULT_POLICY",
    "SpectralDecomposition",
    "PinchOperator",
    "DephasingFamily",
    "SpectrumCount",
    "GTReport",
    "ChainTrace",
    "DIM_CAP",
    "construct_hermitian",
    "as_array",
    "identity",
    "add",
    "scale",
    "matmul",
    "trace",
    "frobenius_norm",
    "loewner_leq",
    "random_hermitian",
    "random_pd",
    "random_psd",
    "random_unitary",
    "eigh",
    "eigvals",
    "decompose",
    "distinct_count",
    "is_positive_definite",
    "require_positive_definite",
    "apply_to_decomposition",
    "apply_spectral_function",
    "herm_exp",
    "herm_log",
    "pinch_operator",
    "block_diagonal_part",
    "pinch",
    "dephasing_family",
    "pinch_via_mixture",
    "commutation_residual",
    "trace_preservation_residual",
    "lower_bound_margin",
    "mixture_residual",
    "verify_commutation",
    "verify_trace_preservation",
    "verify_lower_bound",
    "verify_mixture_agreement",
    "kron",
    "tensor_power",
    "binomial_bound",
    "count_distinct_spectrum",
    "gt_check",
    "chain_trace",
    "chain_checks",
    "convergence_study",
    "finite_power_sides",
    "gt_from_chain",
    "gt_certify_hermitian",
    "analytic_gap_bound",
    "load_matrix",
    "parse_matrix",
    "serialize_matrix",
    "write_matrix",
    "matrix_digest",
    "PinchError",
    "NotSquare",
    "NotHermitian",
    "NotFinite",
    "DimensionMismatch",
    "ConvergenceFailure",
    "DomainError",
    "NotPositiveDefinite",
    "NotPSD",
    "BadPartition",
    "SizeOverflow",
    "MatrixFileError",
]
