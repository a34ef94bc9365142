"""Tsallis entropies of a biased coin, and how the order alpha reshapes them.

Run:  python demos/entropy_basics.py
"""

import numpy as np

from pauli_tsallis import ProbPair, alpha_log, phi, tsallis_entropy

# A binary distribution is just a pair (p, 1-p).  The entropic order alpha
# tunes how strongly rare outcomes are weighted; alpha = 1 is Shannon.
coin = ProbPair(0.8, 0.2)

print("entropy of (0.8, 0.2) across orders")
for alpha in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0):
    value = tsallis_entropy(coin, alpha)
    ceiling = alpha_log(2.0, alpha)
    print(f"  alpha={alpha:<5} H={value:.6f}   max possible ln_alpha(2)={ceiling:.6f}")

# The equiprobable pair attains the ceiling exactly, a deterministic pair
# gives exactly zero, at every order.
print("\nextremes at alpha = 0.7")
print("  fair coin     :", tsallis_entropy((0.5, 0.5), 0.7), "=", alpha_log(2.0, 0.7))
print("  deterministic :", tsallis_entropy((1.0, 0.0), 0.7))

# Near alpha = 1 the family approaches the Shannon entropy continuously;
# the library evaluates this region stably (no 0/0 blow-up).
print("\nShannon limit at (0.8, 0.2)")
for eps in (1e-2, 1e-5, 1e-8, 1e-12):
    drift = tsallis_entropy(coin, 1.0 + eps) - tsallis_entropy(coin, 1.0)
    print(f"  alpha = 1 + {eps:<6.0e}  H - H_shannon = {drift:+.3e}")

# The power sum Phi_alpha = p^alpha + (1-p)^alpha underlies the entropy:
# it decreases in alpha and is convex in alpha, which is exactly what the
# interpolated bounds for non-integer orders lean on.
alphas = np.linspace(0.5, 4.0, 8)
print("\npower sum Phi_alpha of (0.8, 0.2):", [round(phi(coin, float(a)), 4) for a in alphas])
