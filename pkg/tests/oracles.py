"""Independent oracles for the rate formulas and the grid optimizations.

Two kinds of cross-checks live here, both deliberately written from scratch
rather than calling into twohop:

* mpmath evaluators of the displayed rate formulas (``mp_*``), used to derive
  the frozen expected values in the unit tests;
* exhaustive brute-force maximizations over dense split grids (``df_brute``,
  ``hd_brute``, ``af_weak_brute``) with their own candidate-based region
  geometry, used to validate the refinement optimizer end to end.

Run ``python3 tests/oracles.py`` to reprint the frozen-value table.
"""

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def mp_gamma(x):
    return 0.5 * mp.log(1 + mp.mpf(x)) / mp.log(2)


def mp_hk_hop1(a, p1, alpha):
    a, p1, alpha = map(mp.mpf, (a, p1, alpha))
    rem = (1 - alpha) * p1
    s1 = 1 + (1 + a**2) * alpha * p1
    rp = mp_gamma(alpha * p1 / (1 + a**2 * alpha * p1))
    rc = min(mp_gamma(a**2 * rem / s1), mp_gamma((1 + a**2) * rem / s1) / 2)
    return rp, rc


def mp_hk_hop1_switched(a, p1, alpha):
    a, p1, alpha = map(mp.mpf, (a, p1, alpha))
    rem = (1 - alpha) * p1
    s1 = 1 + (1 + a**2) * alpha * p1
    rp = mp_gamma(a**2 * alpha * p1 / (1 + alpha * p1))
    rc = min(mp_gamma(rem / s1), mp_gamma((1 + a**2) * rem / s1) / 2)
    return rp, rc


def mp_dpc_hop2(b, p2, beta, switched=False):
    b, p2, beta = map(mp.mpf, (b, p2, beta))
    rem = (1 - beta) * p2
    s2 = 1 + (1 + b**2) * beta * p2
    if switched:
        rp = mp_gamma(b**2 * beta * p2 / (1 + beta * p2))
    else:
        rp = mp_gamma(beta * p2 / (1 + b**2 * beta * p2))
    rc = mp_gamma((1 - b**2) ** 2 * rem**2 / s2**2 + 2 * (1 + b**2) * rem / s2) / 2
    return rp, rc


def mp_mac_hop2(b, p2, beta, alpha2, switched=False):
    b, p2, beta, alpha2 = map(mp.mpf, (b, p2, beta, alpha2))
    q = alpha2 * beta * p2
    qrem = (1 - alpha2) * beta * p2
    s3 = 1 + (1 + b**2) * q
    if switched:
        rp = min(mp_gamma(qrem / s3), mp_gamma((1 + b**2) * qrem / s3) / 2)
        rp += mp_gamma(b**2 * q / (1 + q))
    else:
        rp = min(mp_gamma(b**2 * qrem / s3), mp_gamma((1 + b**2) * qrem / s3) / 2)
        rp += mp_gamma(q / (1 + b**2 * q))
    rc = mp_gamma((1 + b) ** 2 * (1 - beta) * p2 / (1 + (1 + b**2) * beta * p2)) / 2
    return rp, rc


def mp_mac_hop2_strong(b, p2, beta, switched):
    b, p2, beta = map(mp.mpf, (b, p2, beta))
    gain = b**2 if switched else mp.mpf(1)
    rp = min(mp_gamma(gain * beta * p2), mp_gamma((1 + b**2) * beta * p2) / 2)
    rc = mp_gamma((1 + b) ** 2 * (1 - beta) * p2 / (1 + (1 + b**2) * beta * p2)) / 2
    return rp, rc


def mp_naive_strong(a, p1, b, p2):
    a, p1, b, p2 = map(mp.mpf, (a, p1, b, p2))
    r1 = min(mp_gamma(p1), mp_gamma((1 + a**2) * p1) / 2)
    r2 = mp_gamma((b**2 - 1) ** 2 * p2**2 + 2 * p2 * (1 + b**2)) / 2
    return min(r1, r2)


def mp_af_equiv(a, b, p1, p2, phase):
    a, b, p1, p2 = map(mp.mpf, (a, b, p1, p2))
    c2 = p2 / ((1 + a**2) * p1 + 1)
    nv = mp.inf if c2 == 0 else 1 + b**2 + 1 / c2
    if phase == "in":
        gd, gc = 1 + a * b, a + b
        gb = gc
    else:
        gd, gc = a * b - 1, b - a
        gb = gd
    return gd, gc, gb, nv


def mp_af_strong(a, b, p1, p2, phase):
    gd, gc, _, nv = mp_af_equiv(a, b, p1, p2, phase)
    return min(
        mp_gamma(gd**2 * p1 / nv), mp_gamma((gd**2 + gc**2) * p1 / nv) / 2
    )


def mp_af_weak(a, b, p1, p2, phase, alpha):
    gd, gc, gb, nv = mp_af_equiv(a, b, p1, p2, phase)
    alpha = mp.mpf(alpha)
    rem = (1 - alpha) * p1
    rp = mp_gamma(gd**2 * alpha * p1 / (gc**2 * alpha * p1 + nv))
    s1 = (gd**2 + gc**2) * alpha * p1 + nv
    s2 = (gd**2 + gc**2) * rem
    rc = min(mp_gamma(gb**2 * rem / s1), mp_gamma(s2 / s1) / 2)
    return rp, rc


def mp_parallel_awgn(a, p1, p2):
    a, p1, p2 = map(mp.mpf, (a, p1, p2))
    return mp_gamma((1 - a**2) ** 2 * p1 * p2 / ((1 + a**2) * (p1 + p2) + 1))


def mp_noisy_capacity(a, p1):
    a, p1 = map(mp.mpf, (a, p1))
    if a * (a**2 * p1 + 1) > mp.mpf(1) / 2:
        return None
    return mp_gamma(p1 / (1 + a**2 * p1))


def mp_crossover_window(a):
    a = mp.mpf(a)
    one = 1 + 4 * a**2 - a**4
    lower = (one + mp.sqrt(one**2 + 4 * a**2 * (1 - a**2) ** 2)) / (
        2 * a**2 * (1 - a**2) ** 2
    )
    upper = (1 / a**2) * (1 / (2 * a) - 1)
    return lower, upper


# ---------------------------------------------------------------------------
# Brute-force end-to-end maximizations (numpy, float64).

_LOG2 = np.log(2.0)


def _g(x):
    return 0.5 * np.log1p(x) / _LOG2


def _hop1_np(a, p1, alpha, switched):
    al = alpha
    rem = (1.0 - al) * p1
    s1 = 1.0 + (1.0 + a * a) * al * p1
    if switched:
        rp = _g(a * a * al * p1 / (1.0 + al * p1))
        rc = np.minimum(_g(rem / s1), 0.5 * _g((1.0 + a * a) * rem / s1))
    else:
        rp = _g(al * p1 / (1.0 + a * a * al * p1))
        rc = np.minimum(_g(a * a * rem / s1), 0.5 * _g((1.0 + a * a) * rem / s1))
    return rp, rc


def _dpc_np(b, p2, beta, switched):
    rem = (1.0 - beta) * p2
    s2 = 1.0 + (1.0 + b * b) * beta * p2
    if switched:
        rp = _g(b * b * beta * p2 / (1.0 + beta * p2))
    else:
        rp = _g(beta * p2 / (1.0 + b * b * beta * p2))
    rc = 0.5 * _g((1.0 - b * b) ** 2 * rem * rem / (s2 * s2) + 2.0 * (1.0 + b * b) * rem / s2)
    return rp, rc


def _mac_np(b, p2, beta, alpha2, kind):
    """kind: 'weak' (sub-split), 'weak_switched', 'strong', 'strong_switched'."""
    mc = 0.5 * _g((1.0 + b) ** 2 * (1.0 - beta) * p2 / (1.0 + (1.0 + b * b) * beta * p2))
    bb = b * b
    if kind in ("weak", "weak_switched"):
        q = alpha2 * beta * p2
        qrem = (1.0 - alpha2) * beta * p2
        s3 = 1.0 + (1.0 + bb) * q
        if kind == "weak":
            mp_ = np.minimum(_g(bb * qrem / s3), 0.5 * _g((1.0 + bb) * qrem / s3))
            mp_ = mp_ + _g(q / (1.0 + bb * q))
        else:
            mp_ = np.minimum(_g(qrem / s3), 0.5 * _g((1.0 + bb) * qrem / s3))
            mp_ = mp_ + _g(bb * q / (1.0 + q))
    elif kind == "strong":
        mp_ = np.minimum(_g(beta * p2), 0.5 * _g((1.0 + bb) * beta * p2))
    else:
        mp_ = np.minimum(_g(bb * beta * p2), 0.5 * _g((1.0 + bb) * beta * p2))
    return mp_, mc


def mac_kind_for(a, b):
    if a <= 1.0:
        return "weak" if b <= 1.0 else "strong"
    return "weak_switched" if b > 1.0 else "strong_switched"


def _union_max_sum_np(A, B, dp, dc, mp_, mc):
    """Max rp+rc over rect(A,B) intersected with the two-rectangle closure.

    Candidate-based: clipped corners, the rectangle corner when feasible,
    and the time-sharing segment's crossings with the rectangle edges.
    """
    dom_d = (dp >= mp_) & (dc >= mc)
    dom_m = (mp_ >= dp) & (mc >= dc) & ~dom_d
    two = ~(dom_d | dom_m)

    sp = np.where(dom_d, dp, mp_)
    sc = np.where(dom_d, dc, mc)
    v_single = np.minimum(A, sp) + np.minimum(B, sc)

    d_left = dp < mp_
    lx = np.where(d_left, dp, mp_)
    ly = np.where(d_left, dc, mc)
    rx = np.where(d_left, mp_, dp)
    ry = np.where(d_left, mc, dc)
    den = np.where(two, rx - lx, 1.0)
    s = (ry - ly) / den
    c0 = ly - s * lx
    X = np.minimum(A, rx)
    Y = np.minimum(B, ly)

    neg_inf = -np.inf
    # clipped hull corners are always feasible
    best = np.maximum(np.minimum(A, lx) + np.minimum(B, ly),
                      np.minimum(A, rx) + np.minimum(B, ry))
    # rectangle corner (X, Y) when under the time-share line
    best = np.maximum(best, np.where(Y <= c0 + s * X, X + Y, neg_inf))
    # segment crossing the edge x = X
    y_at = c0 + s * X
    ok = (y_at >= ry - 1e-15) & (y_at <= ly + 1e-15) & (y_at <= Y + 1e-15)
    best = np.maximum(best, np.where(ok, X + np.minimum(y_at, Y), neg_inf))
    # segment crossing the edge y = Y
    with np.errstate(divide="ignore", invalid="ignore"):
        x_at = (Y - c0) / s
    ok = (x_at >= lx - 1e-15) & (x_at <= rx + 1e-15) & (x_at <= X + 1e-15) & np.isfinite(x_at)
    best = np.maximum(best, np.where(ok, np.minimum(x_at, X) + Y, neg_inf))
    return np.where(two, best, v_single)


def df_brute(a, b, p1, p2, n=1001, region="both"):
    """Exhaustive n-point-per-variable scan of the full-duplex DF rate."""
    kind = mac_kind_for(a, b)
    switched = a > 1.0
    grid = np.linspace(0.0, 1.0, n)
    h1p, h1c = _hop1_np(a, p1, grid, switched)
    dp, dc = _dpc_np(b, p2, grid, switched)

    best = 0.0
    if kind in ("weak", "weak_switched"):
        alpha2 = grid[None, :]
        for j in range(n):
            mp_, mc = _mac_np(b, p2, grid[j], alpha2, kind)  # (1, n)
            A = h1p[:, None]
            B = h1c[:, None]
            if region == "both":
                vals = _union_max_sum_np(A, B, dp[j], dc[j], mp_, mc)
            elif region == "dpc":
                vals = np.minimum(A, dp[j]) + np.minimum(B, dc[j])
            else:
                vals = np.minimum(A, mp_) + np.minimum(B, mc)
            best = max(best, float(vals.max()))
    else:
        mp_, mc = _mac_np(b, p2, grid, 0.0, kind)  # (n,)
        A = h1p[:, None]
        B = h1c[:, None]
        if region == "both":
            vals = _union_max_sum_np(A, B, dp[None, :], dc[None, :], mp_[None, :], mc[None, :])
        elif region == "dpc":
            vals = np.minimum(A, dp[None, :]) + np.minimum(B, dc[None, :])
        else:
            vals = np.minimum(A, mp_[None, :]) + np.minimum(B, mc[None, :])
        best = float(vals.max())
    return best


def hd_brute(a, b, p1, p2, n=121, n_share=121):
    """Exhaustive scan of the half-duplex rate over splits and boundary."""
    kind = mac_kind_for(a, b)
    switched = a > 1.0
    grid = np.linspace(0.0, 1.0, n)
    t = np.linspace(0.0, 1.0, n_share)
    h1p, h1c = _hop1_np(a, p1, grid, switched)
    dp, dc = _dpc_np(b, p2, grid, switched)

    best = 0.0
    alpha2 = grid if kind in ("weak", "weak_switched") else np.zeros(1)
    for j in range(n):
        mp_, mc = _mac_np(b, p2, grid[j], alpha2, kind)
        mp_ = np.atleast_1d(mp_)
        mc = np.broadcast_to(np.atleast_1d(mc), mp_.shape)
        px = dp[j] + t[None, :] * (mp_[:, None] - dp[j])  # (n_alpha2, n_share)
        pc = dc[j] + t[None, :] * (mc[:, None] - dc[j])
        inv_px = np.where(px > 0.0, 1.0 / np.where(px > 0.0, px, 1.0), np.inf)
        inv_pc = np.where(pc > 0.0, 1.0 / np.where(pc > 0.0, pc, 1.0), np.inf)
        for i in range(n):
            rp1, rc1 = float(h1p[i]), float(h1c[i])
            ratio_p = rp1 * inv_px if rp1 > 0.0 else 0.0
            ratio_c = rc1 * inv_pc if rc1 > 0.0 else 0.0
            m = np.maximum(ratio_p, ratio_c)
            vals = (rp1 + rc1) / (1.0 + m)
            best = max(best, float(vals.max()))
    return best


def af_weak_brute(gd, gc, gb, nv, p1, n=100001):
    """Dense 1-d scan of the AF weak-split sum rate."""
    alpha = np.linspace(0.0, 1.0, n)
    rem = (1.0 - alpha) * p1
    rp = _g(gd * gd * alpha * p1 / (gc * gc * alpha * p1 + nv))
    s1 = (gd * gd + gc * gc) * alpha * p1 + nv
    s2 = (gd * gd + gc * gc) * rem
    rc = np.minimum(_g(gb * gb * rem / s1), 0.5 * _g(s2 / s1))
    return float((rp + rc).max())


def _print_frozen():
    rows = [
        ("hk_hop1(0.5, 10, 1.0)", mp_hk_hop1(0.5, 10, 1)),
        ("hk_hop1(0.5, 10, 0.0)", mp_hk_hop1(0.5, 10, 0)),
        ("hk_hop1(0.5, 10, 0.5)", mp_hk_hop1(0.5, 10, 0.5)),
        ("hk_hop1_switched(2, 10, 0)", mp_hk_hop1_switched(2, 10, 0)),
        ("hk_hop1_switched(2, 10, 1)", mp_hk_hop1_switched(2, 10, 1)),
        ("dpc_hop2(0, 1, 0)", mp_dpc_hop2(0, 1, 0)),
        ("dpc_hop2(1, 4, 1)", mp_dpc_hop2(1, 4, 1)),
        ("dpc_hop2(0.5, 10, 0)", mp_dpc_hop2(0.5, 10, 0)),
        ("dpc_hop2_switched(2, 1, 0)", mp_dpc_hop2(2, 1, 0, switched=True)),
        ("dpc_hop2_switched(2, 1, 1)", mp_dpc_hop2(2, 1, 1, switched=True)),
        ("mac_hop2(1, 4, 1, 0)", mp_mac_hop2(1, 4, 1, 0)),
        ("mac_hop2(0.5, 10, 1, 1)", mp_mac_hop2(0.5, 10, 1, 1)),
        ("mac_hop2(0.5, 10, 0, 0.3)", mp_mac_hop2(0.5, 10, 0, 0.3)),
        ("mac_hop2_strong(2, 3, 1, uns)", mp_mac_hop2_strong(2, 3, 1, False)),
        ("mac_hop2_strong(0.5, 8, 1, sw)", mp_mac_hop2_strong(0.5, 8, 1, True)),
        ("naive(2, 3, 1.0001, 1)", mp_naive_strong(2, 3, 1.0001, 1)),
        ("naive(1.5, 10, 2, 1)", mp_naive_strong(1.5, 10, 2, 1)),
        ("af_strong in (0,2,10,10)", mp_af_strong(0, 2, 10, 10, "in")),
        ("af_weak in (0.5,0.5,10,10,a=.5)", mp_af_weak(0.5, 0.5, 10, 10, "in", 0.5)),
        ("parallel_awgn(0, 3, 3)", mp_parallel_awgn(0, 3, 3)),
        ("parallel_awgn(0.15, 80, 80)", mp_parallel_awgn(0.15, 80, 80)),
        ("noisy_capacity(0.15, 100)", mp_noisy_capacity(0.15, 100)),
        ("af gain (0.5,10,10)", mp.sqrt(mp.mpf(10) / mp.mpf("13.5"))),
        ("af_rate(0,0,10,10)", mp_af_weak(0, 0, 10, 10, "in", 1)),
        ("crossover_window(0.15)", mp_crossover_window(0.15)),
        ("crossover_window(0.10)", mp_crossover_window(0.10)),
    ]
    for label, value in rows:
        if isinstance(value, tuple):
            text = ", ".join(mp.nstr(v, 17) for v in value)
        else:
            text = mp.nstr(value, 17)
        print(f"{label:36s} {text}")


if __name__ == "__main__":
    _print_frozen()
