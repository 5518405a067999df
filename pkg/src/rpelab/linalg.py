"""Dense complex linear algebra substrate.

Kronecker products, partial transposition of the second subsystem, a
Hermitian eigensolver, the trace norm, and the two-site measurement
contraction every other module trusts.

Composite indices are big-endian throughout the package: system 1 is the
most significant digit, so a four-qudit basis label reads
``i1*d**3 + i2*d**2 + i3*d + i4`` and a bipartite one ``iA*dB + iB``.

The eigensolver is a cyclic complex Jacobi iteration.  A compiled Cython
kernel is preferred; set ``RPELAB_PURE_PYTHON=1`` to force the NumPy
fallback.  ``BACKEND`` records which one was selected at import.
"""

import os

import numpy as np

if os.environ.get("RPELAB_PURE_PYTHON"):
    from ._jacobi_py import jacobi_eigh

    BACKEND = "python"
else:
    try:
        from ._jacobi import jacobi_eigh

        BACKEND = "cython"
    except ImportError:
        from ._jacobi_py import jacobi_eigh

        BACKEND = "python"

HERMITIAN_TOL = 1e-10
ZERO_PROB_TOL = 1e-15


def kron(a, b):
    """Kronecker product with the big-endian composite index convention."""
    return np.kron(np.asarray(a), np.asarray(b))


def partial_transpose_second(m, da, db):
    """Transpose the second factor of a (da*db)-dimensional bipartite matrix.

    Entry ((iA,iB),(jA,jB)) of the result is entry ((iA,jB),(jA,iB)) of the
    input; applying it twice is the identity.
    """
    m = np.asarray(m)
    if m.shape != (da * db, da * db):
        raise ValueError(
            f"expected a {da * db}x{da * db} matrix, got shape {m.shape}"
        )
    return (
        m.reshape(da, db, da, db)
        .transpose(0, 3, 2, 1)
        .reshape(da * db, da * db)
    )


def hermitian_eigenvalues(m, tol=1e-12, max_sweeps=100):
    """All eigenvalues of a Hermitian matrix, ascending.

    The input must be Hermitian within ``HERMITIAN_TOL``; it is symmetrized
    before the solve to absorb roundoff from Kronecker chains.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    h = 0.5 * (m + m.conj().T)
    return np.sort(jacobi_eigh(h, tol=tol, max_sweeps=max_sweeps))


def trace_norm_hermitian(m):
    """Trace norm (sum of absolute eigenvalues) of a Hermitian matrix."""
    return float(np.abs(hermitian_eigenvalues(m)).sum())


def contract_13(rho4, psi, d):
    """Project systems 1,3 of a four-qudit state onto a pure state.

    ``rho4`` is d^4-dimensional on ordered systems 1,2,3,4; ``psi`` is
    d^2-dimensional on systems 1,3.  Returns ``(prob, rho24)`` where
    ``prob`` is the Born probability and ``rho24`` the unit-trace
    post-measurement state on systems 2,4.
    """
    rho4 = np.asarray(rho4, dtype=np.complex128)
    psi = np.asarray(psi, dtype=np.complex128).reshape(-1)
    if rho4.shape != (d**4, d**4):
        raise ValueError(f"expected a {d**4}x{d**4} matrix, got {rho4.shape}")
    if psi.shape != (d * d,):
        raise ValueError(f"expected a {d * d}-dimensional vector")

    rho8 = rho4.reshape((d,) * 8)
    pm = psi.reshape(d, d)
    # axes: (i1,i2,i3,i4, j1,j2,j3,j4) -> a..h; psi lives on (i1,i3)=(a,c)
    unnorm = np.einsum(
        "ac,abcdefgh,eg->bdfh", pm.conj(), rho8, pm, optimize=True
    ).reshape(d * d, d * d)
    prob = float(np.trace(unnorm).real)
    if prob < ZERO_PROB_TOL:
        raise ValueError("zero-probability outcome")
    return prob, unnorm / prob
