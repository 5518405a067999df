# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver for dense Hermitian matrices.

Hot kernel of the numeric verification path.  A pure-Python twin lives in
``_jacobi_py.py``; keep the two algorithmically identical.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def jacobi_eigh(a_in, double tol=1e-12, int max_sweeps=100):
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    The input is assumed Hermitian (callers symmetrize first).  Returns the
    unsorted eigenvalues as a float64 array.  Raises RuntimeError with the
    residual off-diagonal norm if ``max_sweeps`` sweeps do not converge.
    """
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] a = np.array(
        a_in, dtype=np.complex128, order="C"
    )
    cdef Py_ssize_t n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("matrix must be square")
    if n == 1:
        return a.real.diagonal().copy()

    cdef double fro = np.linalg.norm(a)
    cdef double thresh = tol * (fro if fro > 1.0 else 1.0)
    cdef double skip = thresh / (n * n)

    cdef double complex[:, :] m = a
    cdef Py_ssize_t p, q, i, sweep
    cdef double r, tau, t, c, s, off
    cdef double complex apq, phase, cphase, vp, vq

    off = _offdiag_norm(m, n)
    for sweep in range(max_sweeps):
        if off <= thresh:
            return a.real.diagonal().copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                r = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if r <= skip:
                    continue
                phase = apq / r
                cphase = phase.conjugate()
                tau = (m[q, q].real - m[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c

                # A <- J^dagger A J with J the (p,q) plane rotation
                # J[p,p]=c, J[p,q]=s*phase, J[q,p]=-s*conj(phase), J[q,q]=c.
                for i in range(n):
                    vp = m[i, p]
                    vq = m[i, q]
                    m[i, p] = c * vp - s * cphase * vq
                    m[i, q] = s * phase * vp + c * vq
                for i in range(n):
                    vp = m[p, i]
                    vq = m[q, i]
                    m[p, i] = c * vp - s * phase * vq
                    m[q, i] = s * cphase * vp + c * vq
                m[p, q] = 0.0
                m[q, p] = 0.0
        off = _offdiag_norm(m, n)

    raise RuntimeError(
        f"Jacobi eigensolver did not converge after {max_sweeps} sweeps "
        f"(off-diagonal norm {off:.3e}, tolerance {thresh:.3e})"
    )


cdef double _offdiag_norm(double complex[:, :] m, Py_ssize_t n):
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    cdef double complex v
    for i in range(n):
        for j in range(n):
            if i != j:
                v = m[i, j]
                acc += v.real * v.real + v.imag * v.imag
    return sqrt(acc)
