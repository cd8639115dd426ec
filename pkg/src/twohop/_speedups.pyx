# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernels; the signatures mirror twohop._fallback exactly."""

from libc.math cimport log1p, INFINITY

import numpy as np

FAMILY_WEAK_WEAK = 0
FAMILY_STRONG_STRONG = 1
FAMILY_WEAK_STRONG = 2
FAMILY_STRONG_WEAK = 3

REGION_BOTH = 0
REGION_DPC_ONLY = 1
REGION_MAC_ONLY = 2


cdef inline double _fmin(double x, double y) nogil:
    return x if x < y else y


cdef inline double _fmax(double x, double y) nogil:
    return x if x > y else y


cdef inline double _max_sum_union(double A, double B, double dp, double dc,
                                  double mp, double mc) nogil:
    # Exact max of rp+rc over rect(A,B) inter conv(rect(dp,dc), rect(mp,mc)).
    cdef double lx, ly, rx, ry, s, c0, X, Y, yl, xb
    if dp >= mp and dc >= mc:
        return _fmin(A, dp) + _fmin(B, dc)
    if mp >= dp and mc >= dc:
        return _fmin(A, mp) + _fmin(B, mc)
    if dp < mp:
        lx = dp; ly = dc; rx = mp; ry = mc
    else:
        lx = mp; ly = mc; rx = dp; ry = dc
    s = (ry - ly) / (rx - lx)
    c0 = ly - s * lx
    X = _fmin(A, rx)
    Y = _fmin(B, ly)
    yl = c0 + s * X
    if Y <= yl:
        return X + Y
    if s > -1.0:
        return X + yl
    xb = _fmax((Y - c0) / s, 0.0)
    return xb + _fmin(c0 + s * xb, Y)


cdef void _hop1_fill(int family, double a, double p1, double coeff,
                     double[::1] alpha, double[::1] h1p, double[::1] h1c) nogil:
    cdef Py_ssize_t i
    cdef double al, rem, s1, aa = a * a
    for i in range(alpha.shape[0]):
        al = alpha[i]
        rem = (1.0 - al) * p1
        s1 = 1.0 + (1.0 + aa) * al * p1
        if family == 0 or family == 2:
            h1p[i] = coeff * log1p(al * p1 / (1.0 + aa * al * p1))
            h1c[i] = _fmin(coeff * log1p(aa * rem / s1),
                           0.5 * coeff * log1p((1.0 + aa) * rem / s1))
        else:
            h1p[i] = coeff * log1p(aa * al * p1 / (1.0 + al * p1))
            h1c[i] = _fmin(coeff * log1p(rem / s1),
                           0.5 * coeff * log1p((1.0 + aa) * rem / s1))


cdef void _hop2_fill(int family, double b, double p2, double coeff,
                     double[::1] beta, double[::1] alpha2,
                     double[::1] dp, double[::1] dc, double[::1] mc,
                     double[:, ::1] mp) nogil:
    cdef Py_ssize_t j, k
    cdef double be, rem, s2, a2, q, qrem, s3, bb = b * b
    for j in range(beta.shape[0]):
        be = beta[j]
        rem = (1.0 - be) * p2
        s2 = 1.0 + (1.0 + bb) * be * p2
        if family == 0 or family == 2:
            dp[j] = coeff * log1p(be * p2 / (1.0 + bb * be * p2))
        else:
            dp[j] = coeff * log1p(bb * be * p2 / (1.0 + be * p2))
        dc[j] = 0.5 * coeff * log1p((1.0 - bb) * (1.0 - bb) * rem * rem / (s2 * s2)
                                    + 2.0 * (1.0 + bb) * rem / s2)
        mc[j] = 0.5 * coeff * log1p((1.0 + b) * (1.0 + b) * rem / s2)
        if family == 0 or family == 1:
            for k in range(alpha2.shape[0]):
                a2 = alpha2[k]
                q = a2 * be * p2
                qrem = (1.0 - a2) * be * p2
                s3 = 1.0 + (1.0 + bb) * q
                if family == 0:
                    mp[j, k] = _fmin(coeff * log1p(bb * qrem / s3),
                                     0.5 * coeff * log1p((1.0 + bb) * qrem / s3)) \
                               + coeff * log1p(q / (1.0 + bb * q))
                else:
                    mp[j, k] = _fmin(coeff * log1p(qrem / s3),
                                     0.5 * coeff * log1p((1.0 + bb) * qrem / s3)) \
                               + coeff * log1p(bb * q / (1.0 + q))
        elif family == 2:
            mp[j, 0] = _fmin(coeff * log1p(be * p2),
                             0.5 * coeff * log1p((1.0 + bb) * be * p2))
        else:
            mp[j, 0] = _fmin(coeff * log1p(bb * be * p2),
                             0.5 * coeff * log1p((1.0 + bb) * be * p2))


def df_grid(int family, int region_mode, double a, double b, double p1,
            double p2, double coeff, alpha, beta, alpha2):
    """End-to-end full-duplex DF rate on the (alpha, beta, alpha2) grid."""
    cdef double[::1] al = np.ascontiguousarray(alpha, dtype=np.float64)
    cdef double[::1] be = np.ascontiguousarray(beta, dtype=np.float64)
    cdef double[::1] a2 = np.ascontiguousarray(alpha2, dtype=np.float64)
    cdef Py_ssize_t na = al.shape[0], nb = be.shape[0], nc = a2.shape[0]
    cdef Py_ssize_t nc_mac = nc if family == 0 or family == 1 else 1

    h1p_arr = np.empty(na); h1c_arr = np.empty(na)
    dp_arr = np.empty(nb); dc_arr = np.empty(nb); mc_arr = np.empty(nb)
    mp_arr = np.empty((nb, nc_mac))
    out_arr = np.empty((na, nb, nc))
    cdef double[::1] h1p = h1p_arr, h1c = h1c_arr
    cdef double[::1] dp = dp_arr, dc = dc_arr, mc = mc_arr
    cdef double[:, ::1] mp = mp_arr
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, j, k
    cdef double A, B, v, mpv

    with nogil:
        _hop1_fill(family, a, p1, coeff, al, h1p, h1c)
        _hop2_fill(family, b, p2, coeff, be, a2, dp, dc, mc, mp)
        for i in range(na):
            A = h1p[i]; B = h1c[i]
            for j in range(nb):
                for k in range(nc):
                    mpv = mp[j, k if nc_mac > 1 else 0]
                    if region_mode == 1:
                        v = _fmin(A, dp[j]) + _fmin(B, dc[j])
                    elif region_mode == 2:
                        v = _fmin(A, mpv) + _fmin(B, mc[j])
                    else:
                        v = _max_sum_union(A, B, dp[j], dc[j], mpv, mc[j])
                    out[i, j, k] = v
    return out_arr


cdef inline double _hd_combine(double rp1, double rc1, double px, double pc) nogil:
    # Half-duplex end-to-end rate for fixed hop operating points; a hop-1
    # message class with no hop-2 rate makes the point infeasible (rate 0).
    cdef double m = 0.0, r
    if rp1 > 0.0:
        if px <= 0.0:
            return 0.0
        m = rp1 / px
    if rc1 > 0.0:
        if pc <= 0.0:
            return 0.0
        r = rc1 / pc
        if r > m:
            m = r
    return (rp1 + rc1) / (1.0 + m)


def hd_grid(int family, double a, double b, double p1, double p2, double coeff,
            alpha, beta, alpha2, int n_share):
    """Half-duplex rate on the grid, maximized over the hop-2 boundary."""
    cdef double[::1] al = np.ascontiguousarray(alpha, dtype=np.float64)
    cdef double[::1] be = np.ascontiguousarray(beta, dtype=np.float64)
    cdef double[::1] a2 = np.ascontiguousarray(alpha2, dtype=np.float64)
    cdef Py_ssize_t na = al.shape[0], nb = be.shape[0], nc = a2.shape[0]
    cdef Py_ssize_t nc_mac = nc if family == 0 or family == 1 else 1

    h1p_arr = np.empty(na); h1c_arr = np.empty(na)
    dp_arr = np.empty(nb); dc_arr = np.empty(nb); mc_arr = np.empty(nb)
    mp_arr = np.empty((nb, nc_mac))
    out_arr = np.empty((na, nb, nc))
    cdef double[::1] h1p = h1p_arr, h1c = h1c_arr
    cdef double[::1] dp = dp_arr, dc = dc_arr, mc = mc_arr
    cdef double[:, ::1] mp = mp_arr
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, j, k, m
    cdef double rp1, rc1, mpv, t, px, pc, v, best, step

    step = 1.0 / (n_share - 1) if n_share > 1 else 0.0
    with nogil:
        _hop1_fill(family, a, p1, coeff, al, h1p, h1c)
        _hop2_fill(family, b, p2, coeff, be, a2, dp, dc, mc, mp)
        for i in range(na):
            rp1 = h1p[i]; rc1 = h1c[i]
            for j in range(nb):
                for k in range(nc):
                    mpv = mp[j, k if nc_mac > 1 else 0]
                    best = 0.0
                    for m in range(n_share):
                        t = m * step
                        px = dp[j] + t * (mpv - dp[j])
                        pc = dc[j] + t * (mc[j] - dc[j])
                        v = _hd_combine(rp1, rc1, px, pc)
                        if v > best:
                            best = v
                    out[i, j, k] = best
    return out_arr


def af_weak_grid(double gd2, double gc2, double gb2, double nv, double p1,
                 double coeff, alpha):
    """Sum rate of the AF weak-interference split on a 1-d alpha grid."""
    cdef double[::1] al = np.ascontiguousarray(alpha, dtype=np.float64)
    cdef Py_ssize_t na = al.shape[0], i
    out_arr = np.empty(na)
    cdef double[::1] out = out_arr
    cdef double a, rem, rp, s1, s2, rc

    if nv == INFINITY:
        out_arr[:] = 0.0
        return out_arr
    with nogil:
        for i in range(na):
            a = al[i]
            rem = (1.0 - a) * p1
            rp = coeff * log1p(gd2 * a * p1 / (gc2 * a * p1 + nv))
            s1 = (gd2 + gc2) * a * p1 + nv
            s2 = (gd2 + gc2) * rem
            rc = _fmin(coeff * log1p(gb2 * rem / s1), 0.5 * coeff * log1p(s2 / s1))
            out[i] = rp + rc
    return out_arr
