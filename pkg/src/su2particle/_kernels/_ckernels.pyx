# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels; signatures mirror ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

ctypedef double complex cplx


def eval_monomials(const long[:, ::1] exps, const cplx[::1] coeffs, const cplx[:, :, ::1] gs):
    cdef Py_ssize_t n = gs.shape[0], nt = exps.shape[0], i, t, v, k
    cdef long top = 0
    for t in range(nt):
        for v in range(4):
            if exps[t, v] > top:
                top = exps[t, v]
    out = np.zeros(n, dtype=np.complex128)
    # per point, powers 0..top of the four entries: pw[v, k] = u_v^k
    pw_arr = np.empty((4, top + 1), dtype=np.complex128)
    cdef cplx[::1] o = out
    cdef cplx[:, ::1] pw = pw_arr
    cdef cplx acc, x
    with nogil:
        for i in range(n):
            for v in range(4):
                x = gs[i, v // 2, v % 2]
                pw[v, 0] = 1.0
                for k in range(1, top + 1):
                    pw[v, k] = pw[v, k - 1] * x
            acc = 0
            for t in range(nt):
                acc = acc + coeffs[t] * (pw[0, exps[t, 0]] * pw[1, exps[t, 1]]
                                         * pw[2, exps[t, 2]] * pw[3, exps[t, 3]])
            o[i] = acc
    return out


cdef inline void _mul(cplx* x, cplx* y, cplx* z) nogil:
    cdef cplx a = x[0] * y[0] + x[1] * y[2]
    cdef cplx b = x[0] * y[1] + x[1] * y[3]
    cdef cplx c = x[2] * y[0] + x[3] * y[2]
    cdef cplx d = x[2] * y[1] + x[3] * y[3]
    z[0] = a
    z[1] = b
    z[2] = c
    z[3] = d


def exact_flow(g0, step, long steps):
    cdef cplx g[4]
    cdef cplx e[4]
    cdef Py_ssize_t k, i
    g0f = np.ascontiguousarray(g0, dtype=np.complex128).ravel()
    ef = np.ascontiguousarray(step, dtype=np.complex128).ravel()
    for i in range(4):
        g[i] = g0f[i]
        e[i] = ef[i]
    out = np.empty((steps + 1, 2, 2), dtype=np.complex128)
    cdef cplx[:, :, ::1] o = out
    with nogil:
        o[0, 0, 0] = g[0]; o[0, 0, 1] = g[1]; o[0, 1, 0] = g[2]; o[0, 1, 1] = g[3]
        for k in range(1, steps + 1):
            _mul(g, e, g)
            o[k, 0, 0] = g[0]; o[k, 0, 1] = g[1]; o[k, 1, 0] = g[2]; o[k, 1, 1] = g[3]
    return out


def rk4_projected_flow(g0, rmat, double dt, long steps):
    cdef cplx g[4]
    cdef cplx r[4]
    cdef cplx k1[4]
    cdef cplx k2[4]
    cdef cplx k3[4]
    cdef cplx k4[4]
    cdef cplx tmp[4]
    cdef cplx a, b
    cdef double nrm, h2 = dt / 2.0, h6 = dt / 6.0
    cdef Py_ssize_t k, i
    g0f = np.ascontiguousarray(g0, dtype=np.complex128).ravel()
    rf = np.ascontiguousarray(rmat, dtype=np.complex128).ravel()
    for i in range(4):
        g[i] = g0f[i]
        r[i] = rf[i]
    out = np.empty((steps + 1, 2, 2), dtype=np.complex128)
    cdef cplx[:, :, ::1] o = out
    with nogil:
        o[0, 0, 0] = g[0]; o[0, 0, 1] = g[1]; o[0, 1, 0] = g[2]; o[0, 1, 1] = g[3]
        for k in range(1, steps + 1):
            _mul(g, r, k1)
            for i in range(4):
                tmp[i] = g[i] + h2 * k1[i]
            _mul(tmp, r, k2)
            for i in range(4):
                tmp[i] = g[i] + h2 * k2[i]
            _mul(tmp, r, k3)
            for i in range(4):
                tmp[i] = g[i] + dt * k3[i]
            _mul(tmp, r, k4)
            for i in range(4):
                tmp[i] = g[i] + h6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
            a = tmp[0]
            b = tmp[1]
            nrm = sqrt(a.real * a.real + a.imag * a.imag + b.real * b.real + b.imag * b.imag)
            a = a / nrm
            b = b / nrm
            g[0] = a
            g[1] = b
            g[2] = -b.conjugate()
            g[3] = a.conjugate()
            o[k, 0, 0] = g[0]; o[k, 0, 1] = g[1]; o[k, 1, 0] = g[2]; o[k, 1, 1] = g[3]
    return out


def space_charges(const cplx[:, :, ::1] gs, rvec):
    cdef double r1 = rvec[0], r2 = rvec[1], r3 = rvec[2]
    cdef cplx rm[4]
    cdef cplx gi[4]
    cdef cplx gd[4]
    cdef cplx t[4]
    cdef Py_ssize_t n = gs.shape[0], i
    rm[0] = 1j * r1
    rm[1] = r2 + 1j * r3
    rm[2] = -r2 + 1j * r3
    rm[3] = -1j * r1
    out = np.empty((n, 3), dtype=np.float64)
    cdef double[:, ::1] o = out
    with nogil:
        for i in range(n):
            gi[0] = gs[i, 0, 0]; gi[1] = gs[i, 0, 1]; gi[2] = gs[i, 1, 0]; gi[3] = gs[i, 1, 1]
            gd[0] = gi[0].conjugate(); gd[1] = gi[2].conjugate()
            gd[2] = gi[1].conjugate(); gd[3] = gi[3].conjugate()
            _mul(gi, rm, t)
            _mul(t, gd, t)
            o[i, 0] = t[0].imag
            o[i, 1] = t[1].real
            o[i, 2] = t[1].imag
    return out
