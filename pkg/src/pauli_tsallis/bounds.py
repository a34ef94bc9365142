"""State-independent bounds on the sum of the three Pauli Tsallis entropies.

Lower bounds (uncertainty relations).  The entropic sum
H_alpha(x) + H_alpha(y) + H_alpha(z) is at least 2 ln_alpha(2) for every
alpha in (0, 1] and every integer alpha >= 2.  Both branches are tight:
equality holds exactly at the six Pauli eigenstates (and, for alpha = 2, 3,
at every pure state, where the sum is constant).  For non-integer
alpha > 1 only an interpolated bound is available, obtained from concavity
of the power-sum functional in alpha between neighbouring integers:

    2 (1 - 2^(1-n)) / (alpha - 1) + 2^(1-n) (alpha - n) / (alpha - 1),

with n = floor(alpha).  It coincides with the tight value at integers but
is not tight in between (in the limit alpha -> 1+ it gives 1 while the
tight bound is 2 ln 2).

Upper bounds (certainty relations).  For any state the sum is at most
3 ln_alpha(2), attained exactly at the completely mixed state.  In the
pure-state case the stronger bound 3 h_tilde(alpha) holds for
alpha in (0, 1] and integer alpha >= 2, where h_tilde(alpha) is the binary
Tsallis entropy of the pair ((1 + 1/sqrt3)/2, (1 - 1/sqrt3)/2); the
maximizer is the state whose three outcome distributions all equal that
pair.  For non-integer alpha > 1 no analytic pure-state upper bound is
returned; only an empirical grid estimate exists (see the verify module),
and it is kept clearly separate from the analytic results here.

Dividing by the per-observable scale ln_alpha(2) and averaging gives the
rescaled band [2/3, R_alpha] with R_alpha = h_tilde(alpha) / ln_alpha(2).

Kernels.  kernel_f and kernel_g are the scalar kernels whose monotonicity
in u drives the optimization over the reduced rectangle: the azimuthal
derivative of the entropic sum is proportional to
u v [f_alpha(u) - f_alpha(v)], and its power-sum counterpart to
u v [g_alpha(u) - g_alpha(v)].  Both quotient forms cancel like u^2 near
u = 0, so below SERIES_THRESHOLD they switch to even-power expansions that
are exact there; the expansions have strictly positive coefficients, which
is what makes the kernels monotone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .entropy import AlphaLike, ProbPair, TsallisParam, alpha_log, as_param, tsallis_entropy

__all__ = [
    "INTEGER_TOL",
    "SERIES_THRESHOLD",
    "MAXIMIZER_PAIR",
    "UnsupportedAlphaError",
    "BoundSet",
    "integer_order",
    "lower_bound",
    "interpolated_lower_bound",
    "upper_bound_mixed",
    "h_tilde",
    "upper_bound_pure",
    "rescaled_band",
    "kernel_f",
    "kernel_g",
    "bound_set",
]

# |alpha - round(alpha)| below this counts as an exact integer order.  The
# interpolated bound coincides with the tight one at integers, so the
# tie-break is value-neutral; it only decides the tightness flag.
INTEGER_TOL = 1e-12

# Below this u the kernel quotients lose ~u^2 of precision to cancellation
# and the series/polynomial forms are used instead.
SERIES_THRESHOLD = 1e-3

_INV_SQRT3 = 1.0 / math.sqrt(3.0)

# Outcome pair of the pure-state maximizer: all three measurements yield
# this distribution (up to swapping) at the maximizing states.
MAXIMIZER_PAIR = ProbPair((1.0 + _INV_SQRT3) / 2.0, (1.0 - _INV_SQRT3) / 2.0)


class UnsupportedAlphaError(ValueError):
    """Raised when a bound is requested outside its proven validity range."""


def integer_order(alpha: AlphaLike) -> Optional[int]:
    """Return alpha as an int when it is integral within INTEGER_TOL, else None."""
    a = as_param(alpha).alpha
    n = round(a)
    if abs(a - n) < INTEGER_TOL:
        return int(n)
    return None


def interpolated_lower_bound(alpha: AlphaLike) -> float:
    """Concavity-interpolated lower bound on the entropic sum for alpha > 1.

    With n = floor(alpha), returns
    2 (1 - 2^(1-n))/(alpha - 1) + 2^(1-n) (alpha - n)/(alpha - 1).
    At integer alpha this equals the tight value 2 ln_alpha(2); between
    integers it is a valid but generally non-tight lower bound.
    """
    a = as_param(alpha).alpha
    if a <= 1.0:
        raise ValueError(f"interpolated bound requires alpha > 1, got {a!r}")
    n = math.floor(a)
    w = 2.0 ** (1 - n)
    return 2.0 * (1.0 - w) / (a - 1.0) + w * (a - n) / (a - 1.0)


def lower_bound(alpha: AlphaLike) -> tuple[float, bool]:
    """Lower bound on the entropic sum, with a tightness flag.

    alpha in (0, 1]            -> (2 ln_alpha(2), tight)
    integer alpha >= 2         -> (2 ln_alpha(2), tight)
    non-integer alpha > 1      -> (interpolated bound, not tight)

    Tight means attained: at the six Pauli eigenstates, and for
    alpha = 2, 3 at every pure state.
    """
    a = as_param(alpha)
    if a.alpha <= 1.0:
        return 2.0 * alpha_log(2.0, a), True
    n = integer_order(a)
    if n is not None and n >= 2:
        return 2.0 * alpha_log(2.0, a), True
    return interpolated_lower_bound(a), False


def upper_bound_mixed(alpha: AlphaLike) -> float:
    """Upper bound 3 ln_alpha(2) on the entropic sum over all states.

    Attained exactly at the completely mixed state, where each measurement
    is equiprobable.
    """
    a = as_param(alpha)
    return 3.0 * alpha_log(2.0, a)


def h_tilde(alpha: AlphaLike) -> float:
    """Per-observable entropy of the pure-state maximizer.

    The Tsallis entropy of the pair ((1 + 1/sqrt3)/2, (1 - 1/sqrt3)/2);
    3 h_tilde(alpha) is the pure-state maximum of the entropic sum for
    alpha in (0, 1] and integer alpha >= 2.
    """
    return tsallis_entropy(MAXIMIZER_PAIR, alpha)


def _pure_upper_supported(a: float) -> bool:
    if a <= 1.0:
        return True
    n = integer_order(a)
    return n is not None and n >= 2


def upper_bound_pure(alpha: AlphaLike) -> Optional[tuple[float, bool]]:
    """Pure-state upper bound 3 h_tilde(alpha), or None where unproven.

    Returns (3 h_tilde(alpha), tight=True) for alpha in (0, 1] and integer
    alpha >= 2; for alpha = 2, 3 the bound is additionally attained by
    every pure state.  For non-integer alpha > 1 returns None: no analytic
    bound is available there, only the empirical grid estimate of the
    verify module, which is deliberately not reported as a bound.
    """
    a = as_param(alpha)
    if not _pure_upper_supported(a.alpha):
        return None
    return 3.0 * h_tilde(a), True


def rescaled_band(alpha: AlphaLike) -> tuple[float, float]:
    """Endpoints (2/3, R_alpha) of the rescaled average-entropy band.

    For pure states the average of the three entropies, divided by the
    scale ln_alpha(2), ranges exactly over [2/3, R_alpha] with
    R_alpha = h_tilde(alpha) / ln_alpha(2).  Valid for alpha in (0, 1] and
    integer alpha >= 2 (where both endpoints are attained); any other
    alpha raises UnsupportedAlphaError.
    """
    a = as_param(alpha)
    if not _pure_upper_supported(a.alpha):
        raise UnsupportedAlphaError(
            f"rescaled band is proven only for alpha in (0, 1] and integer alpha >= 2, "
            f"got {a.alpha!r}"
        )
    return 2.0 / 3.0, h_tilde(a) / alpha_log(2.0, a)


def _kernel_f_series(u: float, a: float) -> float:
    # Even-power expansion with coefficients c_0 = 2,
    # c_{k+1} = c_k (2k+2-a)(2k+3-a) / ((2k+2)(2k+3)); all positive for
    # a in (0, 1].  For u < SERIES_THRESHOLD three terms already reach
    # relative 1e-17.
    c = 2.0
    u2 = u * u
    upow = 1.0
    total = 0.0
    for k in range(64):
        term = c * upow
        total += term
        if term <= 1e-17 * total:
            break
        c *= (2 * k + 2 - a) * (2 * k + 3 - a) / ((2 * k + 2) * (2 * k + 3))
        upow *= u2
    return total


def _kernel_f_quotient(u: float, a: float) -> float:
    if a == 1.0:
        return math.log((1.0 + u) / (1.0 - u)) / u
    return ((1.0 - u) ** (a - 1.0) - (1.0 + u) ** (a - 1.0)) / ((1.0 - a) * u)


def kernel_f(u: float, alpha: AlphaLike) -> float:
    """Monotone kernel f_alpha(u) for entropic orders alpha in (0, 1].

    f_alpha(u) = ((1-u)^(alpha-1) - (1+u)^(alpha-1)) / ((1-alpha) u), with
    the Shannon form (1/u) ln((1+u)/(1-u)) at alpha = 1.  Defined on
    [0, 1); strictly increasing, with f_alpha(0) = 2 for every alpha.
    Below SERIES_THRESHOLD the even-power series is used, which is where
    the quotient would cancel catastrophically.
    """
    a = as_param(alpha)
    if a.alpha > 1.0:
        raise ValueError(f"kernel_f requires alpha in (0, 1], got {a.alpha!r}")
    u = float(u)
    if u < 0.0 or u >= 1.0:
        raise ValueError(f"kernel_f requires u in [0, 1), got {u!r}")
    if u < SERIES_THRESHOLD:
        return _kernel_f_series(u, a.alpha)
    return _kernel_f_quotient(u, a.alpha)


def _kernel_g_polynomial(u: float, n: int) -> float:
    # Finite identity: g_n(u) = sum_{k=0}^{floor(n/2)-1} 2 C(n-1, 2k+1) u^(2k).
    # Constant for n <= 3 (0, 2, 4), which this evaluates exactly.
    total = 0.0
    u2 = u * u
    upow = 1.0
    for k in range(n // 2):
        total += 2.0 * math.comb(n - 1, 2 * k + 1) * upow
        upow *= u2
    return total


def _kernel_g_quotient(u: float, n: int) -> float:
    return ((1.0 + u) ** (n - 1) - (1.0 - u) ** (n - 1)) / u


def kernel_g(u: float, alpha_int: AlphaLike) -> float:
    """Monotone kernel g_alpha(u) for integer entropic orders alpha >= 1.

    g_alpha(u) = ((1+u)^(alpha-1) - (1-u)^(alpha-1)) / u on [0, 1], an even
    polynomial of degree alpha - 2 with positive coefficients.  g_1 = 0,
    g_2 = 2, g_3 = 4 identically (returned exactly); for alpha >= 4 the
    kernel strictly increases.  The polynomial form is used below
    SERIES_THRESHOLD (and for the constant orders), the quotient above.
    """
    a = as_param(alpha_int).alpha
    n = integer_order(a)
    if n is None or n < 1:
        raise ValueError(f"kernel_g requires an integer alpha >= 1, got {a!r}")
    u = float(u)
    if u < 0.0 or u > 1.0:
        raise ValueError(f"kernel_g requires u in [0, 1], got {u!r}")
    if n <= 3 or u < SERIES_THRESHOLD:
        return _kernel_g_polynomial(u, n)
    return _kernel_g_quotient(u, n)


@dataclass(frozen=True)
class BoundSet:
    """All analytic bounds applying at one entropic order.

    upper_pure, h_tilde and r_alpha are populated only where the
    pure-state analysis is proven (alpha in (0, 1] or integer alpha >= 2);
    elsewhere they are None and only the empirical machinery of the verify
    module applies.
    """

    alpha: TsallisParam
    lower: float
    lower_is_tight: bool
    upper_mixed: float
    upper_pure: Optional[float]
    upper_pure_is_tight: bool
    h_tilde: Optional[float]
    r_alpha: Optional[float]


def bound_set(alpha: AlphaLike) -> BoundSet:
    """Assemble the full BoundSet for one entropic order."""
    a = as_param(alpha)
    low, tight = lower_bound(a)
    up_mixed = upper_bound_mixed(a)
    pure = upper_bound_pure(a)
    if pure is None:
        return BoundSet(
            alpha=a,
            lower=low,
            lower_is_tight=tight,
            upper_mixed=up_mixed,
            upper_pure=None,
            upper_pure_is_tight=False,
            h_tilde=None,
            r_alpha=None,
        )
    up_pure, pure_tight = pure
    ht = h_tilde(a)
    return BoundSet(
        alpha=a,
        lower=low,
        lower_is_tight=tight,
        upper_mixed=up_mixed,
        upper_pure=up_pure,
        upper_pure_is_tight=pure_tight,
        h_tilde=ht,
        r_alpha=ht / alpha_log(2.0, a),
    )
