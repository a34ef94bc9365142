"""Command-line front end.

Subcommands:
  eval    entropies, sum and bound flags for one state
  bounds  the analytic bound set at one entropic order
  band    CSV of the rescaled band endpoints over an alpha range
  rtable  CSV of the band upper endpoint R_alpha for alpha = 1 and 2..10
  verify  brute-force verification suite, one summary line per check

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain or
invariant error, 4 I/O error.  All real numbers are printed with 12
significant digits; CSV output uses LF line endings and is
byte-deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

import numpy as np

from .bounds import (
    UnsupportedAlphaError,
    bound_set,
    integer_order,
    rescaled_band,
)
from .entropy import tsallis_entropy
from .states import BlochVector, PureStateAngles
from .verify import (
    DEFAULT_SEED,
    GridSpec,
    _triple_of,
    certify_equality_conditions,
    check_alpha_concavity,
    check_kernel_monotonicity,
    sample_pure_states,
    scan_extrema,
    scan_full_domain_consistency,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

# |sum - bound| below this flags the bound as attained in `eval` output.
ATTAINED_TOL = 1e-6


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """12-significant-digit decimal, shortest within that cap."""
    return f"{float(x):.12g}"


def _parse_alpha(text: str) -> float:
    try:
        alpha = float(text)
    except ValueError:
        raise UsageError(f"alpha must be a number, got {text!r}") from None
    if not alpha > 0.0:
        raise UsageError(f"alpha must be positive, got {text!r}")
    return alpha


def _parse_state(spec: str):
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(f"state must look like angles:<tau>,<phi> or bloch:<bx>,<by>,<bz>, got {spec!r}")
    try:
        values = [float(part) for part in rest.split(",")]
    except ValueError:
        raise UsageError(f"non-numeric component in state {spec!r}") from None
    if kind == "angles":
        if len(values) != 2:
            raise UsageError(f"angles takes exactly 2 components, got {len(values)}")
        return PureStateAngles(values[0], values[1])
    if kind == "bloch":
        if len(values) != 3:
            raise UsageError(f"bloch takes exactly 3 components, got {len(values)}")
        return BlochVector(values[0], values[1], values[2])
    raise UsageError(f"unknown state kind {kind!r} (expected angles or bloch)")


def _write_csv(path: Optional[str], header: str, rows: list[str]) -> None:
    text = header + "\n" + "".join(row + "\n" for row in rows)
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise IOError(f"cannot write {path!r}: {exc}") from exc


def cmd_eval(args: argparse.Namespace) -> int:
    state = _parse_state(args.state)
    alpha = args.alpha
    if not alpha > 0.0:
        raise UsageError(f"alpha must be positive, got {alpha!r}")
    bounds = bound_set(alpha)
    triple = _triple_of(state)
    entropies = [tsallis_entropy(pair, alpha) for pair in triple.pairs()]
    total = sum(entropies)

    if isinstance(state, PureStateAngles):
        print(f"state: angles tau={fmt(state.tau)} phi={fmt(state.phi)}")
        pure = True
    else:
        print(f"state: bloch ({fmt(state.b_x)}, {fmt(state.b_y)}, {fmt(state.b_z)})")
        pure = state.is_pure(tol=1e-9)
    print(f"alpha: {fmt(alpha)}" + (" (Shannon)" if alpha == 1.0 else ""))
    for name, pair in zip(("x", "y", "z"), triple.pairs()):
        print(f"p({name}): {fmt(pair.p_plus)}, {fmt(pair.p_minus)}")
    for name, value in zip(("x", "y", "z"), entropies):
        print(f"H({name}): {fmt(value)}")
    print(f"sum: {fmt(total)}")
    print(f"lower bound: {fmt(bounds.lower)}" + (" (tight)" if bounds.lower_is_tight else " (not tight)"))
    print(f"upper bound (mixed): {fmt(bounds.upper_mixed)}")
    if bounds.upper_pure is not None:
        note = " (tight)" if bounds.upper_pure_is_tight else ""
        if integer_order(alpha) in (2, 3):
            note += " (attained by every pure state)"
        print(f"upper bound (pure): {fmt(bounds.upper_pure)}{note}")
    else:
        print("upper bound (pure): empirical only")

    flags = []
    if abs(total - bounds.lower) <= ATTAINED_TOL:
        flags.append("lower bound attained")
    if abs(total - bounds.upper_mixed) <= ATTAINED_TOL:
        flags.append("mixed-state maximum attained")
    if (
        bounds.upper_pure is not None
        and pure
        and abs(total - bounds.upper_pure) <= ATTAINED_TOL
    ):
        flags.append("pure-state maximum attained (within tolerance)")
    if flags:
        print("flags: " + "; ".join(flags))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    alpha = _require_alpha(args)
    bounds = bound_set(alpha)
    print(f"alpha: {fmt(alpha)}")
    print(f"lower: {fmt(bounds.lower)}" + (" (tight)" if bounds.lower_is_tight else " (not tight)"))
    print(f"upper_mixed: {fmt(bounds.upper_mixed)}")
    if bounds.upper_pure is None:
        print("upper_pure: empirical only")
        print("h_tilde: n/a")
        print("r_alpha: n/a")
    else:
        note = " (tight)" if bounds.upper_pure_is_tight else ""
        if integer_order(alpha) in (2, 3):
            note += " (attained by every pure state)"
        print(f"upper_pure: {fmt(bounds.upper_pure)}{note}")
        print(f"h_tilde: {fmt(bounds.h_tilde)}")
        print(f"r_alpha: {fmt(bounds.r_alpha)}")
    if args.out is not None:
        header = "alpha,lower,lower_is_tight,upper_mixed,upper_pure,upper_pure_is_tight,h_tilde,r_alpha"
        row = ",".join(
            [
                fmt(alpha),
                fmt(bounds.lower),
                str(bounds.lower_is_tight).lower(),
                fmt(bounds.upper_mixed),
                fmt(bounds.upper_pure) if bounds.upper_pure is not None else "",
                str(bounds.upper_pure_is_tight).lower(),
                fmt(bounds.h_tilde) if bounds.h_tilde is not None else "",
                fmt(bounds.r_alpha) if bounds.r_alpha is not None else "",
            ]
        )
        _write_csv(args.out, header, [row])
    return EXIT_OK


def cmd_band(args: argparse.Namespace) -> int:
    if not (0.0 < args.alpha_min < args.alpha_max):
        raise UsageError(f"need 0 < alpha-min < alpha-max, got {args.alpha_min!r}, {args.alpha_max!r}")
    if args.steps < 2:
        raise UsageError(f"steps must be at least 2, got {args.steps!r}")
    alphas = np.linspace(args.alpha_min, args.alpha_max, args.steps)
    rows = []
    for alpha in alphas:
        try:
            low, high = rescaled_band(float(alpha))
        except UnsupportedAlphaError as exc:
            raise UsageError(str(exc)) from exc
        rows.append(f"{fmt(alpha)},{fmt(low)},{fmt(high)}")
    _write_csv(args.out, "alpha,band_low,band_high", rows)
    return EXIT_OK


def cmd_rtable(args: argparse.Namespace) -> int:
    rows = []
    for alpha in [1.0] + [float(n) for n in range(2, 11)]:
        _, high = rescaled_band(alpha)
        rows.append(f"{fmt(alpha)},{fmt(high)}")
    _write_csv(args.out, "alpha,r_alpha", rows)
    return EXIT_OK


def _require_alpha(args: argparse.Namespace) -> float:
    if getattr(args, "alpha_pos", None) is not None:
        return _parse_alpha(args.alpha_pos)
    if args.alpha is not None:
        if not args.alpha > 0.0:
            raise UsageError(f"alpha must be positive, got {args.alpha!r}")
        return args.alpha
    raise UsageError("an alpha value is required (positional or --alpha)")


def _verify_alphas(args: argparse.Namespace) -> list[float]:
    text = args.alphas if args.alphas is not None else args.alpha
    if text is None:
        raise UsageError("an alpha list is required (positional or --alpha)")
    return [_parse_alpha(part) for part in str(text).split(",") if part != ""]


def _verify_checks(alpha: float, grid_n: int, seed: int):
    """Yield (check, status, observed, expected, tolerance) rows for one order."""
    report = scan_extrema(alpha, GridSpec(grid_n, grid_n))
    low = report.analytic_lower
    tol = 1e-12
    ok = report.min_value >= low - tol
    yield ("lower_bound", "pass" if ok else "fail", report.min_value, low, tol)

    tight = bound_set(alpha).lower_is_tight
    if tight:
        ok = abs(report.min_value - low) <= tol
        yield ("lower_tight", "pass" if ok else "fail", report.min_value, low, tol)
    else:
        yield ("lower_tight", "skip", report.min_value, low, tol)

    if report.analytic_upper is not None:
        ok = report.max_value <= report.analytic_upper + tol
        yield ("upper_pure", "pass" if ok else "fail", report.max_value, report.analytic_upper, tol)
    else:
        yield ("upper_pure", "skip", report.max_value, "", tol)

    n_int = integer_order(alpha)
    if alpha <= 1.0 or (n_int is not None and n_int >= 2):
        ok = certify_equality_conditions(alpha, tolerance=1e-12, seed=seed)
        yield ("equality_conditions", "pass" if ok else "fail", "", "", 1e-12)
    else:
        yield ("equality_conditions", "skip", "", "", 1e-12)

    if alpha <= 1.0:
        ok = check_kernel_monotonicity("f", alpha, 10_000)
        yield ("kernel_monotonic", "pass" if ok else "fail", "", "", "")
    elif n_int is not None:
        ok = check_kernel_monotonicity("g", alpha, 10_000)
        yield ("kernel_monotonic", "pass" if ok else "fail", "", "", "")
    else:
        yield ("kernel_monotonic", "skip", "", "", "")

    b = sample_pure_states(1, seed=seed)[0]
    state = BlochVector(float(b[0]), float(b[1]), float(b[2]))
    ok = check_alpha_concavity(state, 1.0, max(2.0, alpha), 101)
    yield ("alpha_concavity", "pass" if ok else "fail", "", "", 1e-12)

    n_full = min(grid_n, 501)
    full_grid = GridSpec(n_full, 4 * (n_full - 1) + 1, include_full_domain=True)
    ok = scan_full_domain_consistency(alpha, full_grid)
    yield ("full_domain", "pass" if ok else "fail", "", "", "")


def cmd_verify(args: argparse.Namespace) -> int:
    alphas = _verify_alphas(args)
    if args.grid < 2:
        raise UsageError(f"grid resolution must be at least 2, got {args.grid!r}")
    print("check,alpha,status,observed,expected,tolerance")
    failed = False
    for alpha in alphas:
        for check, status, observed, expected, tol in _verify_checks(alpha, args.grid, args.seed):
            failed = failed or status == "fail"
            obs = fmt(observed) if isinstance(observed, float) else str(observed)
            exp = fmt(expected) if isinstance(expected, float) else str(expected)
            tol_s = fmt(tol) if isinstance(tol, float) else str(tol)
            print(f"{check},{fmt(alpha)},{status},{obs},{exp},{tol_s}")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauli-tsallis",
        description=(
            "Tsallis-entropy uncertainty and certainty bounds for the three "
            "Pauli qubit observables, with brute-force verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one state: probabilities, entropies, sum, bounds")
    p.add_argument("state", help="angles:<tau>,<phi> (radians) or bloch:<bx>,<by>,<bz>")
    p.add_argument("--alpha", type=float, required=True, help="entropic order (> 0)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bounds", help="print the analytic bound set at one order")
    p.add_argument("alpha_pos", nargs="?", metavar="alpha", help="entropic order (> 0)")
    p.add_argument("--alpha", type=float, help="entropic order (> 0)")
    p.add_argument("--out", help="also write the bound set as CSV to this path")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("band", help="CSV of the rescaled band over an alpha range")
    p.add_argument("--alpha-min", type=float, required=True)
    p.add_argument("--alpha-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", help="output CSV path (stdout when omitted)")
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("rtable", help="CSV of R_alpha for alpha = 1 and integer 2..10")
    p.add_argument("--out", help="output CSV path (stdout when omitted)")
    p.set_defaults(func=cmd_rtable)

    p = sub.add_parser("verify", help="run the brute-force verification suite")
    p.add_argument("alphas", nargs="?", help="comma-separated list of orders, e.g. 0.5,1,2,4")
    p.add_argument("--alpha", help="alternative way to pass the comma-separated order list")
    p.add_argument("--grid", type=int, default=2001, help="D-grid points per axis (default 2001)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass that through
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
