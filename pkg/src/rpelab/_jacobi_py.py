"""Pure-Python (NumPy) cyclic Jacobi eigensolver for Hermitian matrices.

Fallback for the compiled kernel in ``_jacobi.pyx``; same algorithm, same
tolerances, so the two backends are interchangeable.
"""

import numpy as np


def jacobi_eigh(a_in, tol=1e-12, max_sweeps=100):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    The input is assumed Hermitian (callers symmetrize first).  Returns the
    unsorted eigenvalues as a float64 array.  Raises RuntimeError with the
    residual off-diagonal norm if ``max_sweeps`` sweeps do not converge.
    """
    a = np.array(a_in, dtype=np.complex128)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 1:
        return a.real.diagonal().copy()

    thresh = tol * max(1.0, np.linalg.norm(a))
    skip = thresh / (n * n)

    off = _offdiag_norm(a)
    for _ in range(max_sweeps):
        if off <= thresh:
            return a.real.diagonal().copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = abs(a[p, q])
                if r <= skip:
                    continue
                phase = a[p, q] / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                # A <- J^dagger A J with J the (p,q) plane rotation
                # J[p,p]=c, J[p,q]=s*phase, J[q,p]=-s*conj(phase), J[q,q]=c.
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * np.conj(phase) * col_q
                a[:, q] = s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
        off = _offdiag_norm(a)

    raise RuntimeError(
        f"Jacobi eigensolver did not converge after {max_sweeps} sweeps "
        f"(off-diagonal norm {off:.3e}, tolerance {thresh:.3e})"
    )


def _offdiag_norm(a):
    return np.linalg.norm(a - np.diag(a.diagonal()))
