"""Matrix functions of Hermitian operands by spectral functional calculus.

exp and log are computed as sum_i f(lambda_i) P_i on the *clustered*
decomposition rather than by scaling-and-squaring: the decomposition is
already required by the pinching machinery, and this keeps exp/log exactly
consistent with the projectors used elsewhere.
"""

import numpy as np

from .core import HermitianMatrix
from .errors import DomainError, NotPositiveDefinite
from .policy import DEFAULT_POLICY, NumericPolicy
from .spectral import SpectralDecomposition, decompose, is_positive_definite

__all__ = [
    "apply_spectral_function",
    "apply_to_decomposition",
    "herm_exp",
    "herm_log",
]


def apply_to_decomposition(f, dec: SpectralDecomposition) -> HermitianMatrix:
    """sum_i f(lambda_i) P_i for an already-computed decomposition."""
    try:
        values = np.array([float(f(float(lam))) for lam in dec.eigenvalues])
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise DomainError(f"function undefined at an eigenvalue: {exc}") from exc
    if not np.isfinite(values).all():
        bad = dec.eigenvalues[~np.isfinite(values)]
        raise DomainError(f"function not finite at eigenvalue(s) {bad}")
    weights = dec.column_weights(values)
    return HermitianMatrix((dec.vectors * weights) @ dec.vectors.conj().T)


def apply_spectral_function(
    f, a: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY
) -> HermitianMatrix:
    """f(A) = sum_i f(lambda_i) P_i over the clustered decomposition of A."""
    return apply_to_decomposition(f, decompose(a, policy))


def herm_exp(a: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY) -> HermitianMatrix:
    """Matrix exponential of a Hermitian matrix; always positive definite."""
    return apply_spectral_function(np.exp, a, policy)


def herm_log(a: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY) -> HermitianMatrix:
    """Matrix logarithm of a positive definite Hermitian matrix.

    Positive definiteness is judged on the clustered eigenvalues against
    the policy's PSD slack; PSD-but-singular input is rejected, since its
    logarithm would be unbounded.
    """
    dec = decompose(a, policy)
    if not is_positive_definite(dec, policy):
        raise NotPositiveDefinite(
            f"logarithm needs a positive definite operand; smallest clustered "
            f"eigenvalue is {float(dec.eigenvalues[0]):.6e}"
        )
    return apply_to_decomposition(np.log, dec)
