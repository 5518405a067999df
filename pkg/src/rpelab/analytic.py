"""Closed-form results for the post-measurement states.

Everything here is analytic: the post-measurement two-qudit state, its
partial-transpose spectrum, outcome negativities, the inequality-chain
predicates, the Bell-optimality fidelity threshold, and the advantage
interval of the pair/Fourier measurement.  The brute-force oracle module
recomputes the same quantities numerically; the two routes are compared in
the test suite, never merged.
"""

import math
from dataclasses import dataclass

import numpy as np

from .states import (
    COMPLETENESS_TOL,
    SchmidtVector,
    schmidt_spectrum,
)


@dataclass(frozen=True)
class PtSpectrum:
    """Spectrum of the partially transposed outcome state.

    ``diag`` holds the eigenvalue on each |kk> (d entries); ``pairs`` holds
    (plus, minus) eigenvalue pairs for each k < l, so the total multiplicity
    is d + 2*C(d,2) = d^2.
    """

    diag: tuple
    pairs: tuple

    def all_values(self):
        """Every eigenvalue with multiplicity, ascending."""
        vals = list(self.diag)
        for plus, minus in self.pairs:
            vals.extend((plus, minus))
        return np.sort(np.array(vals))


def post_state_closed(p, lam):
    """Post-measurement state on systems 2,4 for a Schmidt-form outcome.

    d^2 a^2 * I + b^2 * sum_ij sqrt(l_i l_j)|ii><jj|
    + d a b * (Lambda x I + I x Lambda), unit trace by construction.
    """
    d, a, b = p.d, p.a, p.b
    w = lam.padded(d)
    s = np.sqrt(w)
    rho = d * d * a * a * np.eye(d * d, dtype=np.complex128)
    diag_idx = np.arange(d) * (d + 1)
    rho[np.ix_(diag_idx, diag_idx)] += b * b * np.outer(s, s)
    eye = np.eye(d)
    rho += d * a * b * (np.kron(np.diag(w), eye) + np.kron(eye, np.diag(w)))
    return rho


def pt_spectrum_closed(p, lam):
    """Eigenvalues of the partial transpose of the outcome state.

    |kk> eigenvalue: d^2 a^2 + (b^2 + 2 d a b) l_k.
    Pair (k<l) eigenvalues: d^2 a^2 + d a b (l_k + l_l) +- b^2 sqrt(l_k l_l).
    """
    d, a, b = p.d, p.a, p.b
    w = lam.padded(d)
    base = d * d * a * a
    diag = tuple(base + (b * b + 2 * d * a * b) * w[k] for k in range(d))
    pairs = []
    for k in range(d):
        for l in range(k + 1, d):
            mid = base + d * a * b * (w[k] + w[l])
            split = b * b * math.sqrt(w[k] * w[l])
            pairs.append((mid + split, mid - split))
    return PtSpectrum(diag, tuple(pairs))


def negativity_closed(p, lam):
    """Negativity of the outcome state for a Schmidt-form measurement vector:
    (2/(d-1)) * sum_{k<l<R} max{0, b^2 sqrt(l_k l_l) - d^2 a^2
                                    - d a b (l_k + l_l)}."""
    d, a, b = p.d, p.a, p.b
    w = lam.padded(d)
    r = lam.R
    total = 0.0
    for k in range(r):
        for l in range(k + 1, r):
            term = (
                b * b * math.sqrt(w[k] * w[l])
                - d * d * a * a
                - d * a * b * (w[k] + w[l])
            )
            if term > 0.0:
                total += term
    return 2.0 * total / (d - 1)


def negativity_upper_bound(p, lam):
    """AM-GM relaxation of the outcome negativity:
    (2/(d-1)) * sum_{k<l<R} max{0, (b^2 - 2dab) sqrt(l_k l_l) - d^2 a^2}."""
    d, a, b = p.d, p.a, p.b
    w = lam.padded(d)
    r = lam.R
    total = 0.0
    for k in range(r):
        for l in range(k + 1, r):
            term = (b * b - 2 * d * a * b) * math.sqrt(w[k] * w[l]) - d * d * a * a
            if term > 0.0:
                total += term
    return 2.0 * total / (d - 1)


def negativity_uniform_rank(p, r):
    """Outcome negativity for the uniform rank-r Schmidt vector:
    ((r-1)/(d-1)) * max{0, b^2 - 2dab - r d^2 a^2}.

    Exact (not just a bound) because AM-GM is tight for equal weights.
    """
    d, a, b = p.d, p.a, p.b
    if not 1 <= r <= d:
        raise ValueError(f"rank {r} out of range for d={d}")
    return (r - 1) / (d - 1) * max(0.0, b * b - 2 * d * a * b - r * d * d * a * a)


def negativity_bell(p):
    """Outcome negativity of any generalized Bell vector:
    max{0, b^2 - 2dab - d^3 a^2} (clipped at 0; negativity is nonnegative)."""
    d, a, b = p.d, p.a, p.b
    return max(0.0, b * b - 2 * d * a * b - d**3 * a * a)


def condition_R(p, r):
    """b^2 - 2dab >= 2(R-1) d^2 a^2."""
    d, a, b = p.d, p.a, p.b
    return b * b - 2 * d * a * b >= 2 * (r - 1) * d * d * a * a


def condition_dim(p, r):
    """b^2 - 2dab >= (R + d - 1) d^2 a^2."""
    d, a, b = p.d, p.a, p.b
    return b * b - 2 * d * a * b >= (r + d - 1) * d * d * a * a


def condition_final(p):
    """b^2 - 2dab >= 2(d-1) d^2 a^2; equivalent to F >= threshold_fidelity(d)."""
    d, a, b = p.d, p.a, p.b
    return b * b - 2 * d * a * b >= 2 * (d - 1) * d * d * a * a


def threshold_fidelity(d):
    """Fidelity above which the generalized Bell measurement is optimal
    among rank-one measurements:
    (1 + 3d - d^2 + (d^2-1) sqrt(2d-1)) / (d (d^2 + 2))."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    return (1 + 3 * d - d * d + (d * d - 1) * math.sqrt(2 * d - 1)) / (
        d * (d * d + 2)
    )


def advantage_interval(d):
    """Fidelity interval on which the pair/Fourier measurement beats the
    generalized Bell measurement on average:
    lo = (1 - d + d^2 + (d^2-1) sqrt(3)) / (d (d^2 + 2d - 2)),
    hi = (1 + (d^2-1) sqrt(d+2)) / (d (d^2 + d - 1))."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    lo = (1 - d + d * d + (d * d - 1) * math.sqrt(3.0)) / (d * (d * d + 2 * d - 2))
    hi = (1 + (d * d - 1) * math.sqrt(d + 2.0)) / (d * (d * d + d - 1))
    return lo, hi


def average_negativity(p, ens):
    """Average outcome negativity of a complete rank-one ensemble.

    Every rank-one outcome occurs with probability exactly 1/d^2, so this
    is just the mean of the closed-form negativities over the d^2 members.
    """
    if ens.d != p.d:
        raise ValueError(f"ensemble dimension {ens.d} != state dimension {p.d}")
    if not ens.is_complete(COMPLETENESS_TOL):
        raise ValueError("measurement ensemble is not complete")
    total = sum(
        negativity_closed(p, schmidt_spectrum(v, p.d)) for v in ens.vectors
    )
    return total / p.d**2


def pair_schmidt(d):
    """The two-term Schmidt vector (1/2, 1/2, 0, ...) shared by every
    pair-state outcome."""
    return SchmidtVector((0.5, 0.5) + (0.0,) * (d - 2))


def negativity_pair(p):
    """Outcome negativity of any pair state psi_kl^(+-)."""
    return negativity_closed(p, pair_schmidt(p.d))
