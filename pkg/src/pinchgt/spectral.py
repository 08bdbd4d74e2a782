"""Hermitian eigendecomposition and clustering into distinct eigenvalues.

The decomposition A = sum_i lambda_i P_i over *distinct* eigenvalues is the
backbone of the pinching map and of all matrix functions here. Numerically
"distinct" is defined by gap-based clustering: adjacent eigenvalues merge,
transitively, while their gap stays within ``cluster_tol * max(1, spectral
radius)``. Tensor powers create many near-coincident products, so the
clustering rule is load-bearing, not cosmetic.
"""

from dataclasses import dataclass

import numpy as np

from .core import HermitianMatrix, as_array
from .errors import ConvergenceFailure, NotPositiveDefinite
from .policy import DEFAULT_POLICY, NumericPolicy

__all__ = [
    "SpectralDecomposition",
    "eigh",
    "eigvals",
    "decompose",
    "distinct_count",
    "is_positive_definite",
]


def eigh(a, policy: NumericPolicy = DEFAULT_POLICY):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Backed by LAPACK. The result is verified against the policy's residual
    bounds, ``||A V - V diag(w)||_F <= residual_tol (1 + ||A||_F)`` and
    ``||V† V - I||_F <= residual_tol``; a violation raises
    ConvergenceFailure rather than returning a silently bad basis.
    """
    mat = as_array(a)
    try:
        w, v = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigendecomposition failed: {exc}") from exc
    a_norm = np.linalg.norm(mat)
    residual = np.linalg.norm(mat @ v - v * w)
    if residual > policy.residual_tol * (1.0 + a_norm):
        raise ConvergenceFailure(
            f"eigendecomposition residual {residual:.3e} exceeds "
            f"{policy.residual_tol:.1e} * (1 + ||A||_F)"
        )
    ortho = np.linalg.norm(v.conj().T @ v - np.eye(len(w)))
    if ortho > policy.residual_tol:
        raise ConvergenceFailure(
            f"eigenbasis orthonormality defect {ortho:.3e} exceeds {policy.residual_tol:.1e}"
        )
    return w, v


def eigvals(a) -> np.ndarray:
    """Eigenvalues only (ascending), for callers that never need the basis."""
    try:
        return np.linalg.eigvalsh(as_array(a))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigenvalue computation failed: {exc}") from exc


@dataclass(frozen=True)
class SpectralDecomposition:
    """A = sum_i lambda_i P_i over the n distinct (clustered) eigenvalues.

    ``eigenvalues`` holds the strictly increasing cluster representatives
    (means of the clustered raw eigenvalues) and ``multiplicities`` the
    cluster sizes. ``vectors`` is the orthonormal eigenbasis with cluster i
    occupying a contiguous block of columns. Projectors are realized on
    demand from the basis, so a high-dimensional decomposition with many
    clusters costs eigenvector storage, never n projector matrices.
    """

    source_dim: int
    eigenvalues: np.ndarray
    multiplicities: np.ndarray
    vectors: np.ndarray

    @property
    def n(self) -> int:
        """Number of distinct eigenvalues."""
        return len(self.eigenvalues)

    def spectral_radius(self) -> float:
        return max(abs(float(self.eigenvalues[0])), abs(float(self.eigenvalues[-1])))

    def _block(self, i: int) -> np.ndarray:
        starts = np.concatenate(([0], np.cumsum(self.multiplicities)))
        return self.vectors[:, starts[i] : starts[i + 1]]

    def projector(self, i: int) -> HermitianMatrix:
        """Orthogonal projector onto the eigenspace of the i-th distinct eigenvalue."""
        block = self._block(i)
        return HermitianMatrix(block @ block.conj().T)

    def projectors(self) -> list[HermitianMatrix]:
        return [self.projector(i) for i in range(self.n)]

    def eigen_pairs(self) -> list[tuple[float, HermitianMatrix, int]]:
        """(lambda_i, P_i, multiplicity_i) triples, materializing every projector."""
        return [
            (float(self.eigenvalues[i]), self.projector(i), int(self.multiplicities[i]))
            for i in range(self.n)
        ]

    def column_weights(self, values) -> np.ndarray:
        """Expand one value per distinct eigenvalue to one per basis column."""
        return np.repeat(np.asarray(values, dtype=np.float64), self.multiplicities)

    def reconstruct(self) -> HermitianMatrix:
        """sum_i lambda_i P_i, the source matrix up to the residual bound."""
        weights = self.column_weights(self.eigenvalues)
        return HermitianMatrix((self.vectors * weights) @ self.vectors.conj().T)


def _cluster_sizes(w: np.ndarray, gap: float) -> np.ndarray:
    """Sizes of maximal chains of ascending values with adjacent gaps <= gap."""
    if len(w) == 1:
        return np.array([1])
    breaks = np.flatnonzero(np.diff(w) > gap)
    edges = np.concatenate(([0], breaks + 1, [len(w)]))
    return np.diff(edges)


def decompose(
    a: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY
) -> SpectralDecomposition:
    """Cluster the spectrum of `a` into distinct eigenvalues with projectors.

    Adjacent eigenvalues merge transitively while the gap stays within
    ``cluster_tol * max(1, spectral radius)``; each cluster's representative
    eigenvalue is the mean of its members (which minimizes reconstruction
    error for the multiplicity-weighted sum).
    """
    w, v = eigh(a, policy)
    radius = max(abs(float(w[0])), abs(float(w[-1])))
    gap = policy.cluster_tol * max(1.0, radius)
    sizes = _cluster_sizes(w, gap)
    edges = np.concatenate(([0], np.cumsum(sizes)))
    reps = np.array([w[edges[i] : edges[i + 1]].mean() for i in range(len(sizes))])
    return SpectralDecomposition(
        source_dim=a.dim,
        eigenvalues=reps,
        multiplicities=sizes,
        vectors=v,
    )


def distinct_count(dec: SpectralDecomposition) -> int:
    """Number of distinct eigenvalues in the decomposition."""
    return dec.n


def is_positive_definite(
    dec: SpectralDecomposition, policy: NumericPolicy = DEFAULT_POLICY
) -> bool:
    """PD judged on clustered eigenvalues: all above psd_tol * spectral scale."""
    floor = policy.psd_tol * max(1.0, dec.spectral_radius())
    return bool(np.all(dec.eigenvalues > floor))


def require_positive_definite(
    dec: SpectralDecomposition, policy: NumericPolicy = DEFAULT_POLICY, what: str = "matrix"
) -> None:
    if not is_positive_definite(dec, policy):
        floor = policy.psd_tol * max(1.0, dec.spectral_radius())
        raise NotPositiveDefinite(
            f"{what} is not positive definite: smallest clustered eigenvalue "
            f"{float(dec.eigenvalues[0]):.6e} does not clear the resolvable "
            f"floor {floor:.6e}"
        )
