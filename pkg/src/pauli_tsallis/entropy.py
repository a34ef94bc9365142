"""Tsallis entropy machinery for two-outcome distributions.

The entropic order alpha > 0 selects one member of the one-parameter family

    H_alpha(p) = (sum_j p_j^alpha - 1) / (1 - alpha) = sum_j h_alpha(p_j),

which recovers the Shannon entropy -sum_j p_j ln p_j in the limit
alpha -> 1.  That limit is implemented as an exact branch (selected when
alpha == 1), never as a numerical limit of the alpha != 1 formula, so the
0/0 cancellation near alpha = 1 cannot occur.

Conventions used throughout: 0^alpha = 0 for every alpha > 0 and
0 * ln 0 = 0, so that h_alpha(0) = h_alpha(1) = 0 exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

__all__ = [
    "SUM_TOL",
    "CLAMP_TOL",
    "TsallisParam",
    "ProbPair",
    "AlphaLike",
    "as_param",
    "alpha_log",
    "h_alpha",
    "tsallis_entropy",
    "phi",
]

# |p_plus + p_minus - 1| allowed on construction of a ProbPair.
SUM_TOL = 1e-12
# Within this distance of alpha = 1 the power-difference forms lose
# ~eps/|alpha - 1| to cancellation, so the expm1 forms are used instead;
# outside it the direct pow forms are the more accurate ones.
EXPM1_WINDOW = 0.01
# Rounding excursions outside [0, 1] that are silently clamped; anything
# larger is an error.  sin/cos arithmetic routinely lands ~1e-16 outside.
CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class TsallisParam:
    """Entropic order alpha > 0.

    ``is_shannon`` is derived on construction and is true exactly when
    alpha == 1.0, so the invariant alpha = 1 <=> Shannon branch cannot be
    violated by callers.
    """

    alpha: float
    is_shannon: bool = field(init=False)

    def __post_init__(self) -> None:
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha <= 0.0:
            raise ValueError(f"entropic order must be a positive real, got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "is_shannon", alpha == 1.0)


AlphaLike = Union[float, TsallisParam]


def as_param(alpha: AlphaLike) -> TsallisParam:
    """Coerce a bare float (or int) into a validated TsallisParam."""
    if isinstance(alpha, TsallisParam):
        return alpha
    return TsallisParam(alpha)


def _clamped_probability(value: float, name: str) -> float:
    v = float(value)
    if not math.isfinite(v):
        raise ValueError(f"{name} must be finite, got {value!r}")
    if v < 0.0:
        if v < -CLAMP_TOL:
            raise ValueError(f"{name} = {value!r} is outside [0, 1] beyond tolerance {CLAMP_TOL}")
        return 0.0
    if v > 1.0:
        if v > 1.0 + CLAMP_TOL:
            raise ValueError(f"{name} = {value!r} is outside [0, 1] beyond tolerance {CLAMP_TOL}")
        return 1.0
    return v


@dataclass(frozen=True)
class ProbPair:
    """A binary outcome distribution (p_plus, p_minus).

    Components must sum to 1 within SUM_TOL.  Components within CLAMP_TOL
    outside [0, 1] are clamped on construction; larger violations raise.
    """

    p_plus: float
    p_minus: float

    def __post_init__(self) -> None:
        p = _clamped_probability(self.p_plus, "p_plus")
        m = _clamped_probability(self.p_minus, "p_minus")
        if abs(float(self.p_plus) + float(self.p_minus) - 1.0) > SUM_TOL:
            raise ValueError(
                f"probabilities must sum to 1 within {SUM_TOL}, "
                f"got {self.p_plus!r} + {self.p_minus!r}"
            )
        object.__setattr__(self, "p_plus", p)
        object.__setattr__(self, "p_minus", m)

    @classmethod
    def from_plus(cls, p_plus: float) -> "ProbPair":
        p = float(p_plus)
        return cls(p, 1.0 - p)

    def as_tuple(self) -> tuple[float, float]:
        return (self.p_plus, self.p_minus)


DistLike = Union[ProbPair, Sequence[float]]


def _as_pair(dist: DistLike) -> ProbPair:
    if isinstance(dist, ProbPair):
        return dist
    p, m = dist
    return ProbPair(float(p), float(m))


def alpha_log(u: float, alpha: AlphaLike) -> float:
    """alpha-logarithm ln_alpha(u) = (u^(1-alpha) - 1) / (1 - alpha).

    Returns the natural log of u on the Shannon branch alpha = 1.
    ln_alpha(n) is the maximal alpha-entropy of an n-outcome distribution,
    so ln_alpha(2) is the scale of a single binary measurement.

    Raises ValueError for u <= 0.
    """
    a = as_param(alpha)
    u = float(u)
    if not u > 0.0:
        raise ValueError(f"alpha_log requires u > 0, got {u!r}")
    if a.is_shannon:
        return math.log(u)
    if abs(a.alpha - 1.0) < EXPM1_WINDOW:
        return math.expm1((1.0 - a.alpha) * math.log(u)) / (1.0 - a.alpha)
    return (u ** (1.0 - a.alpha) - 1.0) / (1.0 - a.alpha)


def h_alpha(u: float, alpha: AlphaLike) -> float:
    """Per-outcome entropy term h_alpha(u) = (u^alpha - u) / (1 - alpha).

    Shannon branch: -u ln u with the convention 0 ln 0 = 0.  Vanishes
    exactly at u = 0 and u = 1 (the only zeros: h_alpha is strictly
    concave on [0, 1], h_alpha'' = -alpha u^(alpha-2) < 0 for u > 0).

    Raises ValueError outside [0, 1].
    """
    a = as_param(alpha)
    u = float(u)
    if u < 0.0 or u > 1.0:
        raise ValueError(f"h_alpha requires u in [0, 1], got {u!r}")
    if u == 0.0 or u == 1.0:
        return 0.0
    if a.is_shannon:
        return -u * math.log(u)
    if abs(a.alpha - 1.0) < EXPM1_WINDOW:
        return -u * math.expm1((a.alpha - 1.0) * math.log(u)) / (a.alpha - 1.0)
    return (u ** a.alpha - u) / (1.0 - a.alpha)


def tsallis_entropy(dist: DistLike, alpha: AlphaLike) -> float:
    """Tsallis entropy H_alpha of a binary distribution.

    Equals h_alpha(p_plus) + h_alpha(p_minus); lies in
    [0, alpha_log(2, alpha)], with the maximum at the equiprobable pair and
    zero exactly at the two deterministic pairs.
    """
    d = _as_pair(dist)
    return h_alpha(d.p_plus, alpha) + h_alpha(d.p_minus, alpha)


def phi(dist: DistLike, alpha: AlphaLike) -> float:
    """Power sum Phi_alpha = p_plus^alpha + p_minus^alpha.

    Equals 1 at alpha = 1, is nonincreasing in alpha for a fixed
    distribution, and is convex as a function of alpha (its second
    alpha-derivative is sum_j p_j^alpha (ln p_j)^2 >= 0 over the nonzero
    components).
    """
    a = as_param(alpha)
    d = _as_pair(dist)
    if a.is_shannon:
        return d.p_plus + d.p_minus
    # 0^alpha = 0 is what ** already gives for alpha > 0.
    return d.p_plus ** a.alpha + d.p_minus ** a.alpha
