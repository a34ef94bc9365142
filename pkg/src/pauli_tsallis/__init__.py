"""Tsallis-entropy uncertainty and certainty bounds for the Pauli triple.

Measuring sigma_x, sigma_y and sigma_z on a qubit yields three binary
outcome distributions.  This package computes their Tsallis entropies of
any order alpha > 0, the state-independent lower and upper bounds on the
three-entropy sum (with tightness and equality conditions), the rescaled
average-entropy band, and a brute-force grid oracle that independently
verifies every bound, equality condition and monotonicity/concavity
property.  A CLI exposes evaluation, bound reporting, CSV band/table
output and the verification suite.
"""

from .bounds import (
    BoundSet,
    UnsupportedAlphaError,
    bound_set,
    h_tilde,
    integer_order,
    interpolated_lower_bound,
    kernel_f,
    kernel_g,
    lower_bound,
    rescaled_band,
    upper_bound_mixed,
    upper_bound_pure,
)
from .entropy import (
    ProbPair,
    TsallisParam,
    alpha_log,
    as_param,
    h_alpha,
    phi,
    tsallis_entropy,
)
from .states import (
    BlochVector,
    MeasurementTriple,
    PureStateAngles,
    ReducedCoords,
    bloch_from_angles,
    canonicalize_to_D,
    eigenstate_witnesses,
    probs_from_angles,
    probs_from_bloch,
    reduced_coords,
)
from .verify import (
    DEFAULT_SEED,
    GridSpec,
    ScanReport,
    certify_equality_conditions,
    check_alpha_concavity,
    check_kernel_monotonicity,
    empirical_upper_pure,
    entropic_sum,
    g_sum,
    refined_maximum,
    sample_mixed_states,
    sample_pure_states,
    scan_extrema,
    scan_full_domain_consistency,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "TsallisParam",
    "ProbPair",
    "as_param",
    "alpha_log",
    "h_alpha",
    "tsallis_entropy",
    "phi",
    "PureStateAngles",
    "BlochVector",
    "MeasurementTriple",
    "ReducedCoords",
    "probs_from_angles",
    "probs_from_bloch",
    "bloch_from_angles",
    "reduced_coords",
    "canonicalize_to_D",
    "eigenstate_witnesses",
    "BoundSet",
    "UnsupportedAlphaError",
    "bound_set",
    "lower_bound",
    "interpolated_lower_bound",
    "upper_bound_mixed",
    "upper_bound_pure",
    "h_tilde",
    "rescaled_band",
    "kernel_f",
    "kernel_g",
    "integer_order",
    "GridSpec",
    "ScanReport",
    "DEFAULT_SEED",
    "entropic_sum",
    "g_sum",
    "scan_extrema",
    "scan_full_domain_consistency",
    "certify_equality_conditions",
    "check_kernel_monotonicity",
    "check_alpha_concavity",
    "empirical_upper_pure",
    "refined_maximum",
    "sample_pure_states",
    "sample_mixed_states",
]
