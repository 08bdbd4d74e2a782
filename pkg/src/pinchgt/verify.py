"""Golden-Thompson verification.

Two layers:

* :func:`gt_check` evaluates both sides of tr exp(A+B) <= tr(exp A exp B)
  directly for a Hermitian pair.
* :func:`chain_trace` verifies, at a finite tensor power m, every step of
  the pinching argument that proves the inequality: the tensorization
  identity, the pinched collapse to log tr(AB), and the spectrum-count
  upper bound whose (1/m) log C(m+n-1, n-1) correction vanishes as m grows.

Everything relies on trace monotonicity of H -> tr exp(H) under the
Loewner order (exp itself is not operator monotone), plus operator
monotonicity of log; see the README for the exact statement chain.

Values the chain reports are natural logs: s0 = log tr exp(log A + log B)
is the left end, target = log tr(AB) the right end, and
bound = target + (1/m) log |spec(A^(x)m)| the finite-m upper bound on s0.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import HermitianMatrix, frobenius_norm
from .errors import DimensionMismatch, SizeOverflow
from .functions import apply_to_decomposition, herm_exp, herm_log
from .pinching import PinchOperator, pinch
from .policy import DEFAULT_POLICY, NumericPolicy
from .spectral import decompose, eigvals, require_positive_definite
from .tensor import DIM_CAP, binomial_bound, count_distinct_spectrum, tensor_power

__all__ = [
    "GTReport",
    "ChainTrace",
    "gt_check",
    "chain_trace",
    "convergence_study",
    "finite_power_sides",
    "gt_from_chain",
    "gt_certify_hermitian",
    "chain_checks",
    "analytic_gap_bound",
    "GT_GAP_TOL",
    "COMMUTING_TOL",
    "TENSORIZATION_TOL",
    "COLLAPSE_TOL",
    "CHAIN_BOUND_TOL",
]

GT_GAP_TOL = 1e-9  # slack for accepting the inequality, times (|lhs| + |rhs|)
COMMUTING_TOL = 1e-10  # commutator norm below this * bilinear scale => commuting
TENSORIZATION_TOL = 1e-8  # |s0_tensorized - s0| relative bound
COLLAPSE_TOL = 1e-7  # |t_pinched - target| relative bound
CHAIN_BOUND_TOL = 1e-8  # slack for s0 <= bound
TRACE_IMAG_TOL = 1e-12  # imaginary residue allowed in tr(AB)


def _logsumexp(w: np.ndarray) -> float:
    m = float(np.max(w))
    return m + math.log(float(np.sum(np.exp(w - m))))


def _log_trace_exp(h: HermitianMatrix) -> float:
    """log tr exp(H) from the eigenvalues of H, stable against overflow."""
    return _logsumexp(eigvals(h))


@dataclass(frozen=True)
class GTReport:
    """Both sides of the trace inequality for one Hermitian pair."""

    lhs: float  # tr exp(A + B)
    rhs: float  # tr(exp A exp B)
    gap: float  # rhs - lhs; nonnegative up to tolerance iff the inequality holds
    holds: bool
    commuting: bool


def gt_check(
    a: HermitianMatrix, b: HermitianMatrix, policy: NumericPolicy = DEFAULT_POLICY
) -> GTReport:
    """Evaluate tr exp(A+B) vs tr(exp A exp B) for a Hermitian pair.

    Neither operand needs to be positive definite. `holds` allows the gap
    a relative slack of GT_GAP_TOL; `commuting` flags pairs whose
    commutator vanishes to working precision, for which the two sides
    agree exactly.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    lhs = float(np.sum(np.exp(eigvals(a + b))))
    ea = herm_exp(a, policy)
    eb = herm_exp(b, policy)
    rhs = float(np.trace(ea.mat @ eb.mat).real)
    gap = rhs - lhs
    holds = gap >= -GT_GAP_TOL * (abs(lhs) + abs(rhs))
    comm_scale = (1.0 + frobenius_norm(a)) * (1.0 + frobenius_norm(b))
    commutator = float(np.linalg.norm(a.mat @ b.mat - b.mat @ a.mat))
    commuting = commutator <= COMMUTING_TOL * comm_scale
    return GTReport(lhs=lhs, rhs=rhs, gap=gap, holds=holds, commuting=commuting)


@dataclass(frozen=True)
class ChainTrace:
    """Per-step numeric record of the pinching chain at tensor power m.

    All values are natural logs. `s0_tensorized` and `t_pinched` need the
    d^m-dimensional operators; they are None when the full-matrix tier was
    skipped (d^m above the cap). `bound` = target + (1/m) log N_m uses the
    combinatorial spectrum count N_m and is available at any m, and
    `gap_bound` = (1/m) log C(m+n-1, n-1) is its analytic ceiling.
    """

    m: int
    s0: float
    s0_tensorized: float | None
    t_pinched: float | None
    target: float
    bound: float
    gap_bound: float
    spectrum_count: int
    full_matrix_tier: bool


def _pd_pair_decompositions(a, b, policy):
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    dec_a = decompose(a, policy)
    dec_b = decompose(b, policy)
    require_positive_definite(dec_a, policy, what="first operand")
    require_positive_definite(dec_b, policy, what="second operand")
    return dec_a, dec_b


def _log_trace_product(a: HermitianMatrix, b: HermitianMatrix) -> float:
    """log tr(AB) for PD operands; the trace is real and positive."""
    t = complex(np.trace(a.mat @ b.mat))
    scale = (1.0 + frobenius_norm(a)) * (1.0 + frobenius_norm(b))
    if abs(t.imag) > TRACE_IMAG_TOL * scale:
        raise ArithmeticError(
            f"tr(AB) has imaginary residue {t.imag:.3e} beyond tolerance"
        )
    return math.log(t.real)


def chain_trace(
    a: HermitianMatrix,
    b: HermitianMatrix,
    m: int,
    policy: NumericPolicy = DEFAULT_POLICY,
    cap: int = DIM_CAP,
    force_full: bool = False,
) -> ChainTrace:
    """Evaluate every step of the pinching chain at tensor power m.

    `s0` and `target` are always computed. The tensorized and pinched
    middle terms materialize d^m-dimensional operators and are only
    evaluated while d^m <= cap; `force_full=True` turns the skip into a
    SizeOverflow error instead. The spectrum-count bound is combinatorial
    and has no cap.
    """
    if m < 1:
        raise ValueError(f"power must be a positive integer, got {m}")
    dec_a, dec_b = _pd_pair_decompositions(a, b, policy)

    log_a = apply_to_decomposition(np.log, dec_a)
    log_b = apply_to_decomposition(np.log, dec_b)
    s0 = _log_trace_exp(log_a + log_b)
    target = _log_trace_product(a, b)

    spectrum = count_distinct_spectrum(dec_a, m, policy)
    bound = target + spectrum.log_count / m
    gap_bound = spectrum.log_bound / m

    full_tier = a.dim**m <= cap
    if not full_tier and force_full:
        raise SizeOverflow(
            f"full tier forced but dimension {a.dim}**{m} exceeds cap {cap}"
        )
    s0_tensorized = None
    t_pinched = None
    if full_tier:
        a_m = tensor_power(a, m, cap=cap)
        b_m = tensor_power(b, m, cap=cap)
        dec_bm = decompose(b_m, policy)
        log_am = herm_log(a_m, policy)
        log_bm = apply_to_decomposition(np.log, dec_bm)
        s0_tensorized = _log_trace_exp(log_am + log_bm) / m
        pinched = pinch(PinchOperator(dec_bm), a_m)
        log_pinched = herm_log(pinched, policy)
        t_pinched = _log_trace_exp(log_pinched + log_bm) / m

    return ChainTrace(
        m=m,
        s0=s0,
        s0_tensorized=s0_tensorized,
        t_pinched=t_pinched,
        target=target,
        bound=bound,
        gap_bound=gap_bound,
        spectrum_count=spectrum.distinct_count,
        full_matrix_tier=full_tier,
    )


def chain_checks(ct: ChainTrace) -> list[tuple[str, bool, float, float]]:
    """Invariant records (name, passed, residual, tolerance) for one chain row.

    Covers the tensorization identity, the pinched collapse to the target,
    and the spectrum-count upper bound on s0. Monotonicity of the bound is
    a cross-row property and is checked by the callers that hold a row
    sequence.
    """
    checks = []
    bound_tol = CHAIN_BOUND_TOL * (1.0 + abs(ct.s0) + abs(ct.bound))
    checks.append(
        ("chain_upper_bound", ct.s0 <= ct.bound + bound_tol, ct.s0 - ct.bound, bound_tol)
    )
    if ct.full_matrix_tier:
        tens_tol = TENSORIZATION_TOL * (1.0 + abs(ct.s0))
        tens_res = abs(ct.s0_tensorized - ct.s0)
        checks.append(("tensorization_identity", tens_res <= tens_tol, tens_res, tens_tol))
        col_tol = COLLAPSE_TOL * (1.0 + abs(ct.target))
        col_res = abs(ct.t_pinched - ct.target)
        checks.append(("pinched_collapse", col_res <= col_tol, col_res, col_tol))
    return checks


def convergence_study(
    a: HermitianMatrix,
    b: HermitianMatrix,
    m_list,
    policy: NumericPolicy = DEFAULT_POLICY,
    cap: int = DIM_CAP,
) -> list[ChainTrace]:
    """One ChainTrace per power, for an ascending list of powers."""
    ms = [int(m) for m in m_list]
    if not ms:
        raise ValueError("m_list must be non-empty")
    if any(m2 <= m1 for m1, m2 in zip(ms, ms[1:])):
        raise ValueError(f"m_list must be strictly ascending, got {ms}")
    return [chain_trace(a, b, m, policy, cap=cap) for m in ms]


def finite_power_sides(
    a: HermitianMatrix,
    b: HermitianMatrix,
    m: int,
    policy: NumericPolicy = DEFAULT_POLICY,
) -> tuple[float, float]:
    """Both sides of the finite-m certificate inequality.

    Returns (tr exp(log A + log B), N_m^(1/m) tr(AB)) where N_m is the
    distinct-spectrum count of the m-th tensor power of A. Never
    materializes tensor powers.
    """
    if m < 1:
        raise ValueError(f"power must be a positive integer, got {m}")
    dec_a, dec_b = _pd_pair_decompositions(a, b, policy)
    log_a = apply_to_decomposition(np.log, dec_a)
    log_b = apply_to_decomposition(np.log, dec_b)
    lhs = float(np.sum(np.exp(eigvals(log_a + log_b))))
    spectrum = count_distinct_spectrum(dec_a, m, policy)
    trace_ab = math.exp(_log_trace_product(a, b))
    rhs = spectrum.distinct_count ** (1.0 / m) * trace_ab
    return lhs, rhs


def gt_from_chain(
    a: HermitianMatrix,
    b: HermitianMatrix,
    m: int,
    policy: NumericPolicy = DEFAULT_POLICY,
) -> bool:
    """Finite-m certificate: tr exp(log A + log B) <= N_m^(1/m) tr(AB).

    The certificate's m -> infinity limit is the trace inequality itself.
    """
    lhs, rhs = finite_power_sides(a, b, m, policy)
    return lhs <= rhs + GT_GAP_TOL * (abs(lhs) + abs(rhs))


def gt_certify_hermitian(
    a: HermitianMatrix,
    b: HermitianMatrix,
    m: int,
    policy: NumericPolicy = DEFAULT_POLICY,
) -> bool:
    """Certificate for arbitrary Hermitian A, B via the exp substitution.

    Feeding exp A, exp B (always PD) through the chain certificate turns
    its limit into tr exp(A+B) <= tr(exp A exp B) for the original pair.
    """
    return gt_from_chain(herm_exp(a, policy), herm_exp(b, policy), m, policy)


def analytic_gap_bound(m: int, n_distinct: int) -> float:
    """(1/m) log C(m+n-1, n-1): the convergence rate of the chain bound."""
    _, log_value = binomial_bound(m, n_distinct)
    return log_value / m
