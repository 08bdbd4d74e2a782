"""Command-line interface.

Three subcommands:

* ``check A.json B.json``: evaluate the trace inequality and every
  pinching property for one matrix pair, emitting a JSON certificate.
* ``chain A.json B.json --m 1,2,3``: per-power CSV trace of the proof
  chain for a positive definite pair, with invariant checks.
* ``random-suite --dims 2..6 --trials 20 --seed 7``: seeded randomized
  sweep, byte-identical output for identical flags.

Exit codes: 0 when everything passed, 1 when a verified inequality or
identity was violated, 2 for unusable input (bad file, non-Hermitian
matrix, bad flag values).
"""

import argparse
import json
import sys

from .core import random_hermitian, random_pd, random_psd
from .errors import PinchError
from .functions import herm_exp
from .matrixio import load_matrix, matrix_digest
from .pinching import (
    commutation_residual,
    lower_bound_margin,
    mixture_residual,
    pinch_operator,
    trace_preservation_residual,
    verify_commutation,
    verify_lower_bound,
    verify_mixture_agreement,
    verify_trace_preservation,
)
from .policy import NumericPolicy
from .tensor import DIM_CAP
from .verify import (
    GT_GAP_TOL,
    chain_checks,
    convergence_study,
    finite_power_sides,
    gt_check,
)

__all__ = ["main"]

# slack allowed when requiring the chain bound column to be non-increasing
BOUND_MONOTONE_TOL = 1e-12


def _add_policy_flags(parser: argparse.ArgumentParser) -> None:
    g = parser.add_argument_group("numeric policy")
    g.add_argument("--tol-herm", type=float, default=None, metavar="T",
                   help="relative Hermiticity tolerance on input matrices")
    g.add_argument("--tol-cluster", type=float, default=None, metavar="T",
                   help="relative gap below which eigenvalues share a cluster")
    g.add_argument("--tol-psd", type=float, default=None, metavar="T",
                   help="relative slack for positivity decisions")
    g.add_argument("--tol-residual", type=float, default=None, metavar="T",
                   help="relative residual allowed in eigendecompositions")


def _policy_from(args: argparse.Namespace) -> NumericPolicy:
    overrides = {
        "herm_tol": args.tol_herm,
        "cluster_tol": args.tol_cluster,
        "psd_tol": args.tol_psd,
        "residual_tol": args.tol_residual,
    }
    return NumericPolicy(**{k: v for k, v in overrides.items() if v is not None})


def _parse_m_list(text: str) -> list[int]:
    try:
        ms = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"--m expects comma-separated integers, got {text!r}")
    if not ms or any(m < 1 for m in ms):
        raise ValueError(f"--m entries must be positive, got {text!r}")
    return ms


def _parse_dims(text: str) -> list[int]:
    """Accepts '3', '2..6', or '2,3,5'."""
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ValueError(f"--dims range must be INT..INT, got {text!r}")
        if lo < 1 or hi < lo:
            raise ValueError(f"--dims range {text!r} is empty or non-positive")
        return list(range(lo, hi + 1))
    try:
        dims = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"--dims expects integers, got {text!r}")
    if not dims or any(d < 1 for d in dims):
        raise ValueError(f"--dims entries must be positive, got {text!r}")
    return dims


def _fmt(x) -> str:
    return "" if x is None else format(x, ".12g")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_entry(name: str, residual: float, tolerance: float) -> dict:
    return {
        "name": name,
        "passed": bool(residual <= tolerance),
        "residual": residual,
        "tolerance": tolerance,
    }


def cmd_check(args: argparse.Namespace) -> int:
    policy = _policy_from(args)
    a = load_matrix(args.matrix_a, policy)
    b = load_matrix(args.matrix_b, policy)

    report = gt_check(a, b, policy)
    gap_tol = GT_GAP_TOL * (abs(report.lhs) + abs(report.rhs))
    checks = [_check_entry("golden_thompson_gap", report.lhs - report.rhs, gap_tol)]
    if report.commuting:
        checks.append(_check_entry("commuting_equality", abs(report.gap), gap_tol))

    # the pinching properties need a positive definite reference, so they
    # are exercised on exp(B) with operand exp(A); both always qualify
    ea = herm_exp(a, policy)
    eb = herm_exp(b, policy)
    op = pinch_operator(eb, policy)
    checks.append(_check_entry("pinch_commutes_with_base", *commutation_residual(op, ea)))
    checks.append(
        _check_entry("pinch_preserves_weighted_trace", *trace_preservation_residual(op, ea))
    )
    checks.append(
        _check_entry("pinch_dominates_scaled_operand", *lower_bound_margin(op, ea, policy))
    )
    checks.append(_check_entry("pinch_equals_dephasing_mixture", *mixture_residual(op, ea)))

    lhs_m, rhs_m = finite_power_sides(ea, eb, args.m, policy)
    checks.append(
        _check_entry(
            "finite_power_certificate",
            lhs_m - rhs_m,
            GT_GAP_TOL * (abs(lhs_m) + abs(rhs_m)),
        )
    )

    all_passed = all(c["passed"] for c in checks)
    certificate = {
        "inputs": {
            "matrix_a": {
                "path": args.matrix_a,
                "dim": a.dim,
                "sha256": matrix_digest(args.matrix_a),
            },
            "matrix_b": {
                "path": args.matrix_b,
                "dim": b.dim,
                "sha256": matrix_digest(args.matrix_b),
            },
            "power": args.m,
            "policy": policy.as_dict(),
        },
        "golden_thompson": {
            "lhs": report.lhs,
            "rhs": report.rhs,
            "gap": report.gap,
            "commuting": report.commuting,
        },
        "checks": checks,
        "verdict": "pass" if all_passed else "violation",
    }
    _emit(json.dumps(certificate, indent=2) + "\n", args.out)
    return 0 if all_passed else 1


def cmd_chain(args: argparse.Namespace) -> int:
    policy = _policy_from(args)
    ms = _parse_m_list(args.m)
    a = load_matrix(args.matrix_a, policy)
    b = load_matrix(args.matrix_b, policy)

    rows = convergence_study(a, b, ms, policy, cap=args.cap)

    lines = ["m,s0,s0_tensorized,t_pinched,target,bound,gap_bound"]
    for ct in rows:
        lines.append(
            ",".join(
                [
                    str(ct.m),
                    _fmt(ct.s0),
                    _fmt(ct.s0_tensorized),
                    _fmt(ct.t_pinched),
                    _fmt(ct.target),
                    _fmt(ct.bound),
                    _fmt(ct.gap_bound),
                ]
            )
        )
    _emit("\n".join(lines) + "\n", args.out)

    violations = 0
    for ct in rows:
        for name, passed, residual, tol in chain_checks(ct):
            if not passed:
                violations += 1
                print(
                    f"violation: {name} at m={ct.m}: residual {residual:.6e} "
                    f"exceeds tolerance {tol:.6e}",
                    file=sys.stderr,
                )
    for prev, cur in zip(rows, rows[1:]):
        if cur.bound > prev.bound + BOUND_MONOTONE_TOL * (1.0 + abs(prev.bound)):
            violations += 1
            print(
                f"violation: bound_monotone between m={prev.m} and m={cur.m}: "
                f"{prev.bound:.12g} -> {cur.bound:.12g}",
                file=sys.stderr,
            )
    return 1 if violations else 0


def cmd_random_suite(args: argparse.Namespace) -> int:
    policy = _policy_from(args)
    if args.trials < 1:
        raise ValueError(f"--trials must be positive, got {args.trials}")
    dims = _parse_dims(args.dims)

    idx = 0
    total = 0
    out_lines = []
    for dim in dims:
        dim_violations = 0
        for _ in range(args.trials):
            trial_seed = args.seed + idx
            idx += 1
            # four independent draws per trial, keyed off the trial seed
            a = random_hermitian(dim, 4 * trial_seed)
            b = random_hermitian(dim, 4 * trial_seed + 1)
            ok = gt_check(a, b, policy).holds
            base = random_pd(dim, 4 * trial_seed + 2)
            x = random_psd(dim, 4 * trial_seed + 3)
            op = pinch_operator(base, policy)
            ok = ok and verify_commutation(op, x)
            ok = ok and verify_trace_preservation(op, x)
            ok = ok and verify_lower_bound(op, x, policy)
            ok = ok and verify_mixture_agreement(op, x)
            if not ok:
                dim_violations += 1
        total += dim_violations
        out_lines.append(f"dim {dim}: {args.trials} trials, {dim_violations} violations")
    out_lines.append(f"total: {len(dims) * args.trials} trials, {total} violations")
    sys.stdout.write("\n".join(out_lines) + "\n")
    return 1 if total else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinchgt",
        description="Golden-Thompson verification through spectral pinching.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", help="certify one Hermitian pair, emitting a JSON certificate"
    )
    p_check.add_argument("matrix_a", help="JSON matrix file, first operand")
    p_check.add_argument("matrix_b", help="JSON matrix file, second operand")
    p_check.add_argument("--m", type=int, default=2,
                         help="tensor power for the finite-power certificate")
    p_check.add_argument("--out", default=None, help="write the certificate here")
    _add_policy_flags(p_check)
    p_check.set_defaults(func=cmd_check)

    p_chain = sub.add_parser(
        "chain", help="trace the proof chain over tensor powers, emitting CSV"
    )
    p_chain.add_argument("matrix_a", help="JSON matrix file, positive definite")
    p_chain.add_argument("matrix_b", help="JSON matrix file, positive definite")
    p_chain.add_argument("--m", required=True,
                         help="comma-separated ascending tensor powers, e.g. 1,2,3")
    p_chain.add_argument("--cap", type=int, default=DIM_CAP,
                         help="largest tensor-power dimension to materialize")
    p_chain.add_argument("--out", default=None, help="write the CSV here")
    _add_policy_flags(p_chain)
    p_chain.set_defaults(func=cmd_chain)

    p_rand = sub.add_parser(
        "random-suite", help="seeded randomized sweep over dimensions"
    )
    p_rand.add_argument("--dims", default="2..6",
                        help="dimensions to cover: '3', '2..6', or '2,3,5'")
    p_rand.add_argument("--trials", type=int, default=20,
                        help="trials per dimension")
    p_rand.add_argument("--seed", type=int, default=0,
                        help="base seed; trial k of the sweep uses seed+k")
    _add_policy_flags(p_rand)
    p_rand.set_defaults(func=cmd_random_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PinchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
