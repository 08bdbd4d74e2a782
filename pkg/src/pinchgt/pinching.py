"""Spectral pinching maps.

A pinching zeroes the off-diagonal blocks of a partitioned matrix. The
*spectral* pinching map of a reference matrix A sends X to
sum_i P_i X P_i over the spectral projectors of A, which is exactly
block-diagonal extraction in the eigenbasis of A. The map has three
defining properties, each with a verifier below:

* its output commutes with the reference matrix,
* it preserves the weighted trace tr[X A],
* it dominates X/n in the Loewner order (n = distinct eigenvalue count),
  because it equals the uniform mixture of n dephasing-unitary conjugations.
"""

from dataclasses import dataclass

import numpy as np

from .core import HermitianMatrix, as_array, scale
from .errors import BadPartition, DimensionMismatch, NotPSD
from .policy import DEFAULT_POLICY, NumericPolicy
from .spectral import SpectralDecomposition, decompose, eigvals

__all__ = [
    "PinchOperator",
    "DephasingFamily",
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
    "COMMUTATION_TOL",
    "TRACE_TOL",
    "MIXTURE_TOL",
]

# residual tolerances for the property verifiers, scaled by
# (1 + ||A||_F)(1 + ||X||_F) since the residuals are bilinear in the operands
COMMUTATION_TOL = 1e-10
TRACE_TOL = 1e-10
# the two evaluation routes differ only by rounding in an n-term phase sum
MIXTURE_TOL = 1e-11


@dataclass(frozen=True)
class PinchOperator:
    """The pinching map of a reference matrix, held as its decomposition."""

    base: SpectralDecomposition

    @property
    def n(self) -> int:
        """Number of distinct eigenvalues of the reference matrix."""
        return self.base.n

    @property
    def dim(self) -> int:
        return self.base.source_dim


def pinch_operator(a: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY) -> PinchOperator:
    """Build the pinching map of `a` from its clustered decomposition."""
    return PinchOperator(decompose(a, policy))


def block_diagonal_part(m, partition) -> np.ndarray:
    """Zero every off-diagonal block of a square matrix.

    `partition` lists the diagonal block sizes in order; they must be
    positive and sum to the dimension. The discarded part is recoverable
    as ``m - block_diagonal_part(m, partition)``.
    """
    arr = as_array(m)
    sizes = [int(s) for s in partition]
    if any(s <= 0 for s in sizes):
        raise BadPartition(f"block sizes must be positive, got {sizes}")
    if sum(sizes) != arr.shape[0]:
        raise BadPartition(
            f"block sizes {sizes} sum to {sum(sizes)}, expected {arr.shape[0]}"
        )
    out = np.zeros_like(arr)
    start = 0
    for s in sizes:
        out[start : start + s, start : start + s] = arr[start : start + s, start : start + s]
        start += s
    return out


def _require_dim(op: PinchOperator, x: HermitianMatrix):
    if x.dim != op.dim:
        raise DimensionMismatch(f"operand dim {x.dim} != operator dim {op.dim}")


def pinch(op: PinchOperator, x: HermitianMatrix) -> HermitianMatrix:
    """Apply the pinching map: sum_i P_i X P_i.

    Computed as block-diagonal extraction in the eigenbasis of the
    reference matrix, with one block per distinct eigenvalue; this is the
    same map as the projector sum but costs a single basis change.
    """
    _require_dim(op, x)
    v = op.base.vectors
    in_basis = v.conj().T @ x.mat @ v
    pinched = block_diagonal_part(in_basis, op.base.multiplicities)
    return HermitianMatrix(v @ pinched @ v.conj().T)


@dataclass(frozen=True)
class DephasingFamily:
    """Unitaries U_y = sum_u exp(i 2 pi y u / n) P_u for y = 1..n.

    Uniformly mixing the conjugations X -> U_y X U_y† reproduces the
    pinching map; the final member U_n is the identity.
    """

    unitaries: list

    @property
    def n(self) -> int:
        return len(self.unitaries)


def dephasing_family(op: PinchOperator) -> DephasingFamily:
    """The n dephasing unitaries of the pinching map, in y = 1..n order.

    Projector u (1-based, ascending eigenvalue order) carries phase
    exp(i 2 pi y u / n) in the y-th unitary.
    """
    n = op.n
    v = op.base.vectors
    us = np.arange(1, n + 1)
    unitaries = []
    for y in range(1, n + 1):
        phases = np.exp(2j * np.pi * y * us / n)
        col_phases = np.repeat(phases, op.base.multiplicities)
        unitaries.append((v * col_phases) @ v.conj().T)
    return DephasingFamily(unitaries)


def pinch_via_mixture(op: PinchOperator, x: HermitianMatrix) -> HermitianMatrix:
    """Apply the pinching map as (1/n) sum_y U_y X U_y†.

    Independent route from :func:`pinch`; the two must agree to 1e-10
    relative Frobenius error, which the test suite enforces.
    """
    _require_dim(op, x)
    family = dephasing_family(op)
    acc = np.zeros_like(x.mat)
    for u in family.unitaries:
        acc += u @ x.mat @ u.conj().T
    return HermitianMatrix(acc / op.n)


def _bilinear_scale(a: np.ndarray, x: np.ndarray) -> float:
    return (1.0 + float(np.linalg.norm(a))) * (1.0 + float(np.linalg.norm(x)))


def commutation_residual(op: PinchOperator, x: HermitianMatrix) -> tuple[float, float]:
    """Norm of [pinch(X), A] and the tolerance it must stay under."""
    _require_dim(op, x)
    a = op.base.reconstruct().mat
    px = pinch(op, x).mat
    residual = float(np.linalg.norm(px @ a - a @ px))
    return residual, COMMUTATION_TOL * _bilinear_scale(a, x.mat)


def verify_commutation(op: PinchOperator, x: HermitianMatrix) -> bool:
    """Check that the pinched operand commutes with the reference matrix."""
    residual, tol = commutation_residual(op, x)
    return residual <= tol


def trace_preservation_residual(
    op: PinchOperator, x: HermitianMatrix
) -> tuple[float, float]:
    """|tr[pinch(X) A] - tr[X A]| and the tolerance it must stay under."""
    _require_dim(op, x)
    a = op.base.reconstruct().mat
    px = pinch(op, x).mat
    residual = float(abs(np.trace(px @ a) - np.trace(x.mat @ a)))
    return residual, TRACE_TOL * _bilinear_scale(a, x.mat)


def verify_trace_preservation(op: PinchOperator, x: HermitianMatrix) -> bool:
    """Check tr[pinch(X) A] = tr[X A] for the reference matrix A."""
    residual, tol = trace_preservation_residual(op, x)
    return residual <= tol


def lower_bound_margin(
    op: PinchOperator, x: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY
) -> tuple[float, float]:
    """Negative part of the spectrum of pinch(X) - X/n, with its allowance.

    Returns (-min_eigenvalue, tolerance); the bound holds when the first
    number is at most the second. Only defined for PSD operands, since the
    mixture representation forces the bound only then; non-PSD X raises
    NotPSD.
    """
    _require_dim(op, x)
    w = eigvals(x)
    spectral_scale = max(1.0, abs(float(w[0])), abs(float(w[-1])))
    if float(w[0]) < -policy.psd_tol * spectral_scale:
        raise NotPSD(
            f"operand must be PSD for the lower bound; min eigenvalue {float(w[0]):.6e}"
        )
    diff = pinch(op, x) - scale(1.0 / op.n, x)
    dw = eigvals(diff)
    radius = max(1.0, abs(float(dw[0])), abs(float(dw[-1])))
    return -float(dw[0]), policy.psd_tol * radius


def verify_lower_bound(
    op: PinchOperator, x: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY
) -> bool:
    """Check pinch(X) >= X/n in the Loewner order, for PSD X."""
    residual, tol = lower_bound_margin(op, x, policy)
    return residual <= tol


def mixture_residual(op: PinchOperator, x: HermitianMatrix) -> tuple[float, float]:
    """Frobenius gap between the eigenbasis and dephasing-mixture routes."""
    _require_dim(op, x)
    gap = pinch(op, x).mat - pinch_via_mixture(op, x).mat
    residual = float(np.linalg.norm(gap))
    tol = MIXTURE_TOL * op.n * (1.0 + float(np.linalg.norm(x.mat)))
    return residual, tol


def verify_mixture_agreement(op: PinchOperator, x: HermitianMatrix) -> bool:
    """Check the two pinch evaluation routes coincide."""
    residual, tol = mixture_residual(op, x)
    return residual <= tol
