"""Pure-numpy implementations of the hot grid kernels.

Used when the compiled extension (twohop._speedups) is unavailable; the two
lanes implement identical signatures and must agree to float rounding.  See
twohop.kernels for the family / region-mode integer codes.

Broadcast layout: alpha varies along axis 0, beta along axis 1, alpha2 along
axis 2.  Families without a sub-split receive a length-1 alpha2 axis.
"""

from __future__ import annotations

import numpy as np

FAMILY_WEAK_WEAK = 0
FAMILY_STRONG_STRONG = 1
FAMILY_WEAK_STRONG = 2
FAMILY_STRONG_WEAK = 3

REGION_BOTH = 0
REGION_DPC_ONLY = 1
REGION_MAC_ONLY = 2


def _g(x, coeff):
    return coeff * np.log1p(x)


def _hop1_arrays(family, a, p1, alpha, coeff):
    """Private/common first-hop rates per alpha, shape (na, 1, 1)."""
    al = alpha.reshape(-1, 1, 1)
    rem = (1.0 - al) * p1
    s1 = 1.0 + (1.0 + a * a) * al * p1
    if family in (FAMILY_WEAK_WEAK, FAMILY_WEAK_STRONG):
        h1p = _g(al * p1 / (1.0 + a * a * al * p1), coeff)
        h1c = np.minimum(
            _g(a * a * rem / s1, coeff), 0.5 * _g((1.0 + a * a) * rem / s1, coeff)
        )
    else:
        h1p = _g(a * a * al * p1 / (1.0 + al * p1), coeff)
        h1c = np.minimum(
            _g(rem / s1, coeff), 0.5 * _g((1.0 + a * a) * rem / s1, coeff)
        )
    return h1p, h1c


def _hop2_arrays(family, b, p2, beta, alpha2, coeff):
    """DPC corner (dp, dc), MAC corner (mp, mc) on the broadcast grid."""
    be = beta.reshape(1, -1, 1)
    bb = b * b
    rem = (1.0 - be) * p2
    s2 = 1.0 + (1.0 + bb) * be * p2
    if family in (FAMILY_WEAK_WEAK, FAMILY_WEAK_STRONG):
        dp = _g(be * p2 / (1.0 + bb * be * p2), coeff)
    else:
        dp = _g(bb * be * p2 / (1.0 + be * p2), coeff)
    dc = 0.5 * _g(
        (1.0 - bb) ** 2 * rem * rem / (s2 * s2) + 2.0 * (1.0 + bb) * rem / s2, coeff
    )
    mc = 0.5 * _g((1.0 + b) ** 2 * rem / s2, coeff)

    if family in (FAMILY_WEAK_WEAK, FAMILY_STRONG_STRONG):
        a2 = alpha2.reshape(1, 1, -1)
        q = a2 * be * p2
        qrem = (1.0 - a2) * be * p2
        s3 = 1.0 + (1.0 + bb) * q
        if family == FAMILY_WEAK_WEAK:
            mp = np.minimum(
                _g(bb * qrem / s3, coeff), 0.5 * _g((1.0 + bb) * qrem / s3, coeff)
            ) + _g(q / (1.0 + bb * q), coeff)
        else:
            mp = np.minimum(
                _g(qrem / s3, coeff), 0.5 * _g((1.0 + bb) * qrem / s3, coeff)
            ) + _g(bb * q / (1.0 + q), coeff)
    elif family == FAMILY_WEAK_STRONG:
        mp = np.minimum(_g(be * p2, coeff), 0.5 * _g((1.0 + bb) * be * p2, coeff))
    else:
        mp = np.minimum(
            _g(bb * be * p2, coeff), 0.5 * _g((1.0 + bb) * be * p2, coeff)
        )
    return dp, dc, mp, mc


def _max_sum_union(h1p, h1c, dp, dc, mp, mc):
    """Max of rp + rc over rect(h1p, h1c) inter conv(rect(dp,dc), rect(mp,mc)).

    Vectorized form of the exact two-corner geometry: if one corner dominates
    the region is a rectangle; otherwise the optimum is the clipped hull
    corner, the time-sharing segment endpoint at the rectangle edge, or the
    segment/edge breakpoint, depending on the segment slope.
    """
    dom_d = (dp >= mp) & (dc >= mc)
    dom_m = ~dom_d & (mp >= dp) & (mc >= dc)
    two = ~(dom_d | dom_m)

    sp = np.where(dom_d, dp, mp)
    sc = np.where(dom_d, dc, mc)
    v_single = np.minimum(h1p, sp) + np.minimum(h1c, sc)

    d_left = dp < mp
    lx = np.where(d_left, dp, mp)
    ly = np.where(d_left, dc, mc)
    rx = np.where(d_left, mp, dp)
    ry = np.where(d_left, mc, dc)
    den = np.where(two, rx - lx, 1.0)
    s = (ry - ly) / den
    c0 = ly - s * lx
    x_edge = np.minimum(h1p, rx)
    y_edge = np.minimum(h1c, ly)
    y_line = c0 + s * x_edge
    xb = np.maximum((y_edge - c0) / np.where(s != 0.0, s, 1.0), 0.0)
    v_break = xb + np.minimum(c0 + s * xb, y_edge)
    v_two = np.where(
        y_edge <= y_line,
        x_edge + y_edge,
        np.where(s > -1.0, x_edge + y_line, v_break),
    )
    return np.where(two, v_two, v_single)


def df_grid(family, region_mode, a, b, p1, p2, coeff, alpha, beta, alpha2):
    """End-to-end full-duplex DF rate on the (alpha, beta, alpha2) grid."""
    alpha = np.ascontiguousarray(alpha, dtype=float)
    beta = np.ascontiguousarray(beta, dtype=float)
    alpha2 = np.ascontiguousarray(alpha2, dtype=float)
    h1p, h1c = _hop1_arrays(family, a, p1, alpha, coeff)
    dp, dc, mp, mc = _hop2_arrays(family, b, p2, beta, alpha2, coeff)
    shape = (alpha.size, beta.size, alpha2.size)
    if region_mode == REGION_DPC_ONLY:
        out = np.minimum(h1p, dp) + np.minimum(h1c, dc)
    elif region_mode == REGION_MAC_ONLY:
        out = np.minimum(h1p, mp) + np.minimum(h1c, mc)
    else:
        out = _max_sum_union(h1p, h1c, dp, dc, mp, mc)
    return np.broadcast_to(out, shape).copy()


def hd_grid(family, a, b, p1, p2, coeff, alpha, beta, alpha2, n_share):
    """Half-duplex rate on the grid, maximized over the hop-2 boundary.

    The hop-2 operating point sweeps n_share time-sharing points between the
    DPC and MAC corners (the dominated stretch of the sweep never wins, so
    dominated-corner cases need no special handling).
    """
    alpha = np.ascontiguousarray(alpha, dtype=float)
    beta = np.ascontiguousarray(beta, dtype=float)
    alpha2 = np.ascontiguousarray(alpha2, dtype=float)
    na, nb, nc = alpha.size, beta.size, alpha2.size
    h1p, h1c = _hop1_arrays(family, a, p1, alpha, coeff)
    dp, dc, mp, mc = _hop2_arrays(family, b, p2, beta, alpha2, coeff)

    t = np.linspace(0.0, 1.0, n_share)
    px = dp[..., None] + t * (mp[..., None] - dp[..., None])
    pc = dc[..., None] + t * (mc[..., None] - dc[..., None])
    px = np.broadcast_to(px, (1, nb, nc, n_share))
    pc = np.broadcast_to(pc, (1, nb, nc, n_share))
    inv_px = np.where(px > 0.0, 1.0 / np.where(px > 0.0, px, 1.0), np.inf)
    inv_pc = np.where(pc > 0.0, 1.0 / np.where(pc > 0.0, pc, 1.0), np.inf)

    out = np.empty((na, nb, nc))
    for i in range(na):
        rp1 = float(h1p[i, 0, 0])
        rc1 = float(h1c[i, 0, 0])
        ratio_p = rp1 * inv_px if rp1 > 0.0 else np.zeros_like(inv_px)
        ratio_c = rc1 * inv_pc if rc1 > 0.0 else np.zeros_like(inv_pc)
        m = np.maximum(ratio_p, ratio_c)
        val = (rp1 + rc1) / (1.0 + m)
        out[i] = val[0].max(axis=-1)
    return out


def af_weak_grid(gd2, gc2, gb2, nv, p1, coeff, alpha):
    """Sum rate of the AF weak-interference split on a 1-d alpha grid."""
    alpha = np.ascontiguousarray(alpha, dtype=float)
    rem = (1.0 - alpha) * p1
    rp = _g(gd2 * alpha * p1 / (gc2 * alpha * p1 + nv), coeff)
    s1 = (gd2 + gc2) * alpha * p1 + nv
    s2 = (gd2 + gc2) * rem
    rc = np.minimum(_g(gb2 * rem / s1, coeff), 0.5 * _g(s2 / s1, coeff))
    return rp + rc
