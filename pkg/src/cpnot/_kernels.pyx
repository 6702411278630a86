# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for batched sequence evaluation.

Same API and same closed-form math as ``cpnot._kernels_py``; scalar loops
over error points with the 2x2 complex product unrolled, per-pulse phase
trig hoisted out of the point loop, and one fused sincos per gate.
"""

from libc.math cimport cos, sin, sqrt

import numpy as np

cdef extern from *:
    """
    #include <math.h>
    static inline void cpnot_sincos(double x, double *s, double *c) {
    #if defined(__GLIBC__)
        sincos(x, s, c);
    #else
        *s = sin(x); *c = cos(x);
    #endif
    }
    """
    void cpnot_sincos(double x, double* s, double* c) nogil

cdef double complex J = 1j


cdef inline void _accumulate(double[::1] thetas, double[::1] cp, double[::1] sp,
                             Py_ssize_t n, double ee, double ff,
                             double complex* o00, double complex* o01,
                             double complex* o10, double complex* o11) nogil:
    cdef double root = sqrt(1.0 + ff * ff)
    cdef double scale = (1.0 + ee) * root
    cdef double a, c, s, raw_s
    cdef double complex g00, g01, g10, g11, n00, n01, n10, n11
    cdef Py_ssize_t j
    o00[0] = 1.0
    o01[0] = 0.0
    o10[0] = 0.0
    o11[0] = 1.0
    for j in range(n):
        a = 0.5 * thetas[j] * scale
        cpnot_sincos(a, &raw_s, &c)
        s = raw_s / root
        g00 = c - J * (s * ff)
        g01 = -s * sp[j] - J * (s * cp[j])
        g10 = s * sp[j] - J * (s * cp[j])
        g11 = c + J * (s * ff)
        n00 = g00 * o00[0] + g01 * o10[0]
        n01 = g00 * o01[0] + g01 * o11[0]
        n10 = g10 * o00[0] + g11 * o10[0]
        n11 = g10 * o01[0] + g11 * o11[0]
        o00[0] = n00
        o01[0] = n01
        o10[0] = n10
        o11[0] = n11


def propagators(double[::1] thetas, double[::1] phis, double[::1] eps, double[::1] f):
    """Errored sequence propagators, shape (m, 2, 2) complex128."""
    cdef Py_ssize_t m = eps.shape[0]
    cdef Py_ssize_t n = thetas.shape[0]
    out_arr = np.empty((m, 2, 2), dtype=np.complex128)
    cdef double complex[:, :, ::1] out = out_arr
    cp_arr = np.cos(np.asarray(phis))
    sp_arr = np.sin(np.asarray(phis))
    cdef double[::1] cp = cp_arr
    cdef double[::1] sp = sp_arr
    cdef double complex o00, o01, o10, o11
    cdef Py_ssize_t i
    for i in range(m):
        _accumulate(thetas, cp, sp, n, eps[i], f[i], &o00, &o01, &o10, &o11)
        out[i, 0, 0] = o00
        out[i, 0, 1] = o01
        out[i, 1, 0] = o10
        out[i, 1, 1] = o11
    return out_arr


def fidelities(double[::1] thetas, double[::1] phis, double[::1] eps, double[::1] f,
               double complex[:, ::1] target):
    """Propagator fidelity against ``target`` at each error point, shape (m,)."""
    cdef Py_ssize_t m = eps.shape[0]
    cdef Py_ssize_t n = thetas.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cp_arr = np.cos(np.asarray(phis))
    sp_arr = np.sin(np.asarray(phis))
    cdef double[::1] cp = cp_arr
    cdef double[::1] sp = sp_arr
    cdef double complex t00 = target[0, 0].conjugate()
    cdef double complex t01 = target[0, 1].conjugate()
    cdef double complex t10 = target[1, 0].conjugate()
    cdef double complex t11 = target[1, 1].conjugate()
    cdef double complex o00, o01, o10, o11, tr
    cdef double fid
    cdef Py_ssize_t i
    for i in range(m):
        _accumulate(thetas, cp, sp, n, eps[i], f[i], &o00, &o01, &o10, &o11)
        tr = t00 * o00 + t01 * o01 + t10 * o10 + t11 * o11
        fid = 0.5 * sqrt(tr.real * tr.real + tr.imag * tr.imag)
        out[i] = fid if fid < 1.0 else 1.0
    return out_arr
