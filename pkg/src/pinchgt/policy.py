"""Numeric tolerance policy: every tolerance decision reads from one place."""

from dataclasses import dataclass


@dataclass(frozen=True)
class NumericPolicy:
    """Tolerances used throughout the library.

    herm_tol
        Relative tolerance for accepting near-Hermitian input; anything
        worse is rejected rather than symmetrized.
    cluster_tol
        Relative gap below which adjacent eigenvalues are treated as the
        same distinct eigenvalue.
    psd_tol
        Relative slack when accepting a matrix as positive semidefinite,
        measured against the spectral scale of the matrix being judged.
    residual_tol
        Bound on eigendecomposition residuals and on projector identities.
    """

    herm_tol: float = 1e-10
    cluster_tol: float = 1e-8
    psd_tol: float = 1e-9
    residual_tol: float = 1e-9

    def __post_init__(self):
        for name in ("herm_tol", "cluster_tol", "psd_tol", "residual_tol"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0):
                raise ValueError(f"{name} must be strictly positive, got {value!r}")

    def as_dict(self) -> dict:
        return {
            "herm_tol": self.herm_tol,
            "cluster_tol": self.cluster_tol,
            "psd_tol": self.psd_tol,
            "residual_tol": self.residual_tol,
        }


DEFAULT_POLICY = NumericPolicy()
