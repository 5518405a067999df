"""Brute-force verification path.

Builds the full four-qudit joint state, projects the measurement outcome
numerically, and computes negativity from the partial-transpose trace norm
by eigendecomposition.  No closed form from ``analytic`` is reused here;
this module exists so the two routes can be compared.
"""

import numpy as np

from .linalg import (
    contract_13,
    hermitian_eigenvalues,
    kron,
    partial_transpose_second,
    trace_norm_hermitian,
)
from .states import isotropic

MAX_ORACLE_DIM = 5
NEG_CLIP_TOL = 1e-10


def build_joint(p):
    """The d^4-dimensional joint state of two identical isotropic links,
    ordered systems 1,2,3,4."""
    if p.d > MAX_ORACLE_DIM:
        raise ValueError(f"oracle scale exceeded: d={p.d} > {MAX_ORACLE_DIM}")
    iso = isotropic(p)
    return kron(iso, iso)


def measure_outcome(rho, psi, d):
    """Born probability and normalized post-measurement state on systems 2,4
    after projecting systems 1,3 onto ``psi``."""
    return contract_13(rho, psi, d)


def negativity_numeric(rho, d):
    """Negativity of a two-qudit state from its PT trace norm:
    (||rho^Gamma|| - 1)/(d - 1), with roundoff in [-1e-10, 0) clipped to 0."""
    rho = np.asarray(rho)
    if rho.shape != (d * d, d * d):
        raise ValueError(f"expected a {d * d}x{d * d} matrix, got {rho.shape}")
    val = (trace_norm_hermitian(partial_transpose_second(rho, d, d)) - 1.0) / (
        d - 1
    )
    if val < -NEG_CLIP_TOL:
        raise ValueError(f"negativity {val:.3e} below roundoff clip; likely a bug")
    return max(0.0, val)


def pt_spectrum_numeric(rho, d):
    """Ascending eigenvalues of the partial transpose of a two-qudit state."""
    return hermitian_eigenvalues(partial_transpose_second(rho, d, d))
