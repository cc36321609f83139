# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels; see ``_kernels_py`` for the reference semantics."""

from libc.math cimport fabs, fmax, isfinite, INFINITY
from libc.stdlib cimport malloc, free


cdef double* _pack(pairs, Py_ssize_t* n) except NULL:
    cdef Py_ssize_t m = len(pairs)
    cdef double* buf = <double*> malloc((2 * m + 1) * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(m):
        buf[2 * i] = pairs[i][0]
        buf[2 * i + 1] = pairs[i][1]
    n[0] = m
    return buf


cdef inline void _weight(const double* sh, Py_ssize_t ns, double k,
                         double* w_re, double* w_du) noexcept:
    cdef double re = 1.0, du = 0.0, f_re, n_re
    cdef Py_ssize_t i
    for i in range(ns):
        f_re = k + sh[2 * i]
        n_re = re * f_re
        du = re * sh[2 * i + 1] + du * f_re
        re = n_re
    w_re[0] = re
    w_du[0] = du


cdef inline double _growth(const double* sh, Py_ssize_t ns, double k) noexcept:
    cdef double g = 1.0
    cdef Py_ssize_t i
    for i in range(ns):
        g *= 1.0 + 1.0 / fmax(fabs(k + sh[2 * i]), 1.0)
    return g


cdef int _ratio(const double* num, Py_ssize_t nn, const double* den, Py_ssize_t nd,
                double x_re, double x_du, double k,
                double* r_re, double* r_du) except -1:
    cdef double p_re = x_re, p_du = x_du, q_re, q_du = 0.0, f_re, n_re
    cdef Py_ssize_t i
    for i in range(nn):
        f_re = num[2 * i] + k
        n_re = p_re * f_re
        p_du = p_re * num[2 * i + 1] + p_du * f_re
        p_re = n_re
    q_re = k + 1.0
    for i in range(nd):
        f_re = den[2 * i] + k
        n_re = q_re * f_re
        q_du = q_re * den[2 * i + 1] + q_du * f_re
        q_re = n_re
    if q_re == 0.0:
        raise ZeroDivisionError(f"denominator factor vanishes at k={int(k)}")
    r_re[0] = p_re / q_re
    r_du[0] = (p_du * q_re - p_re * q_du) / (q_re * q_re)
    return 0


def series_sum(num, den, shifts, double x_re, double x_du, double tol,
               long max_terms, long fixed_terms, double limit_ratio):
    cdef Py_ssize_t nn, nd, ns
    cdef double* a = _pack(num, &nn)
    cdef double* b
    cdef double* sh
    try:
        b = _pack(den, &nd)
    except BaseException:
        free(a)
        raise
    try:
        sh = _pack(shifts, &ns)
    except BaseException:
        free(a)
        free(b)
        raise
    cdef double t_re = 1.0, t_du = 0.0, w_re, w_du, u_re, u_du, v_re, v_du
    cdef double s_re = 0.0, s_du = 0.0, r_re, r_du, n_re, rho, tail_re, tail_du
    cdef long small = 0, k = 0
    cdef long limit = max_terms if fixed_terms < 0 else fixed_terms
    try:
        _weight(sh, ns, 0.0, &w_re, &w_du)
        u_re = w_re
        u_du = w_du
        while k < limit:
            s_re += u_re
            s_du += u_du
            if not (isfinite(s_re) and isfinite(s_du)):
                raise OverflowError(f"series sum overflowed at term {k}")
            if fixed_terms >= 0 and k + 1 == fixed_terms:
                return s_re, s_du, k + 1, 0.0, 0.0, True
            _ratio(a, nn, b, nd, x_re, x_du, <double> k, &r_re, &r_du)
            n_re = t_re * r_re
            t_du = t_re * r_du + t_du * r_re
            t_re = n_re
            _weight(sh, ns, <double> (k + 1), &w_re, &w_du)
            v_re = t_re * w_re
            v_du = t_re * w_du + t_du * w_re
            if fabs(u_re) <= tol * fabs(s_re) and fabs(u_du) <= tol * fabs(s_du):
                small += 1
            else:
                small = 0
            k += 1
            if small >= 3 and fixed_terms < 0:
                rho = (fmax(fabs(r_re), limit_ratio) * _growth(sh, ns, <double> k)
                       * (k + 1.0) / <double> k)
                if rho < 1.0:
                    tail_re = fabs(v_re) / (1.0 - rho)
                    tail_du = fabs(v_du) / (1.0 - rho)
                    if tail_re <= tol * fabs(s_re) and tail_du <= tol * fabs(s_du):
                        return s_re, s_du, k, tail_re, tail_du, True
            u_re = v_re
            u_du = v_du
        if fixed_terms >= 0:
            return s_re, s_du, k, 0.0, 0.0, True
        return s_re, s_du, k, INFINITY, INFINITY, False
    finally:
        free(a)
        free(b)
        free(sh)


def partial_sums(num, den, double x_re, double x_du, checkpoints, state=None):
    cdef Py_ssize_t nn, nd
    cdef double* a = _pack(num, &nn)
    cdef double* b
    try:
        b = _pack(den, &nd)
    except BaseException:
        free(a)
        raise
    cdef double t_re = 1.0, t_du = 0.0, s_re = 0.0, c_re = 0.0, s_du = 0.0
    cdef double c_du = 0.0, z, r_re, r_du, n_re
    cdef long k = 0, target
    if state is not None:
        k, t_re, t_du, s_re, c_re, s_du, c_du = state
    out = []
    try:
        for py_target in checkpoints:
            target = py_target
            while k < target:
                z = s_re + t_re
                if fabs(s_re) >= fabs(t_re):
                    c_re += (s_re - z) + t_re
                else:
                    c_re += (t_re - z) + s_re
                s_re = z
                z = s_du + t_du
                if fabs(s_du) >= fabs(t_du):
                    c_du += (s_du - z) + t_du
                else:
                    c_du += (t_du - z) + s_du
                s_du = z
                _ratio(a, nn, b, nd, x_re, x_du, <double> k, &r_re, &r_du)
                n_re = t_re * r_re
                t_du = t_re * r_du + t_du * r_re
                t_re = n_re
                k += 1
            if not (isfinite(s_re) and isfinite(s_du)):
                raise OverflowError(f"partial sum overflowed at term {k}")
            out.append((s_re + c_re, s_du + c_du))
        return out, (k, t_re, t_du, s_re, c_re, s_du, c_du)
    finally:
        free(a)
        free(b)
