"""Decode-and-forward achievable rates for the two-hop interference network.

First hop: Han-Kobayashi private/common splitting (direct form for weak
interference, role-switched form for strong).  Second hop: a dirty-paper
corner and a compound-MAC corner, combined by convex closure, with the MAC
variant picked per regime.  The end-to-end symmetric rate maximizes rp + rc
over the intersection of the two hop regions, grid-searching the power
splits (alpha, beta, alpha2).

The role-switched formula family absorbs the gain inversion and noise
rescaling of switch_roles(), so all functions here take the original
channel gains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from . import kernels
from .core import (
    ChannelParams,
    Duplex,
    RatePair,
    RateRegion,
    Regime,
    classify,
    convex_union,
    gamma,
    max_sum_in_intersection,
    rate_scale,
    rect_region,
)
from .optimize import OptimizerSpec, maximize

# Boundary discretization for the half-duplex hop-2 operating point.
N_SHARE = 101


class Scheme(Enum):
    DF_DIRECT = "df-direct"
    DF_ROLE_SWITCHED = "df-role-switched"
    DF_NAIVE_STRONG = "df-naive-strong"
    DF_HALF_DUPLEX = "df-half-duplex"
    AF_IN_PHASE = "af-in-phase"
    AF_OUT_OF_PHASE = "af-out-of-phase"


@dataclass(frozen=True)
class PowerSplit:
    """Optimizing power-split fractions; None marks an unused knob.

    alpha: fraction of P1 on hop-1 private messages.
    beta: fraction of P2 on hop-2 private messages.
    alpha2: fraction of hop-2 private power on the sub-private part
    (MAC scheme with further splitting only).
    """

    alpha: float | None = None
    beta: float | None = None
    alpha2: float | None = None

    def __post_init__(self):
        for name in ("alpha", "beta", "alpha2"):
            v = getattr(self, name)
            if v is not None and not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")


@dataclass(frozen=True)
class SchemeResult:
    scheme: Scheme
    rate: float
    split: PowerSplit | None
    share: float | None
    switched: bool

    def __post_init__(self):
        if not math.isfinite(self.rate) or self.rate < 0.0:
            raise ValueError("rate must be finite and nonnegative")
        if self.share is not None and not 0.0 <= self.share <= 1.0:
            raise ValueError("share must lie in [0, 1]")


@dataclass(frozen=True)
class MacRegionPowers:
    """Relay power split of the layered MAC scheme (all linear, >= 0).

    private + common_intended + common_interfering should exhaust the relay
    power, and subcommon + subprivate must re-split `private`.
    """

    private: float
    common_intended: float
    common_interfering: float
    subcommon: float
    subprivate: float

    def __post_init__(self):
        for name in (
            "private",
            "common_intended",
            "common_interfering",
            "subcommon",
            "subprivate",
        ):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"{name} must be finite and nonnegative")
        if abs(self.subcommon + self.subprivate - self.private) > 1e-9 * max(
            1.0, self.private
        ):
            raise ValueError("subcommon + subprivate must equal private")


@dataclass(frozen=True)
class MacRegionBounds:
    """The seven upper bounds of the layered MAC region.

    rc_* bound the common rate (rc_sum bounds 2*Rc), rpc_* the sub-common
    rate (rpc_sum bounds 2*Rpc), rpp the sub-private rate.
    """

    rc_intended: float
    rc_interfering: float
    rc_sum: float
    rpc_direct: float
    rpc_cross: float
    rpc_sum: float
    rpp: float


def _check_fraction(name: str, v: float) -> None:
    if not (math.isfinite(v) and 0.0 <= v <= 1.0):
        raise ValueError(f"{name} must lie in [0, 1], got {v!r}")


def hk_hop1(a: float, p1: float, alpha: float) -> RatePair:
    """Hop-1 Han-Kobayashi rates, direct form (weak interference, a <= 1)."""
    _check_fraction("alpha", alpha)
    rem = (1.0 - alpha) * p1
    s1 = 1.0 + (1.0 + a * a) * alpha * p1
    rp = gamma(alpha * p1 / (1.0 + a * a * alpha * p1))
    rc = min(gamma(a * a * rem / s1), 0.5 * gamma((1.0 + a * a) * rem / s1))
    return RatePair(rp, rc)


def hk_hop1_switched(a: float, p1: float, alpha: float) -> RatePair:
    """Hop-1 Han-Kobayashi rates after role switching (original a > 1)."""
    _check_fraction("alpha", alpha)
    rem = (1.0 - alpha) * p1
    s1 = 1.0 + (1.0 + a * a) * alpha * p1
    rp = gamma(a * a * alpha * p1 / (1.0 + alpha * p1))
    rc = min(gamma(rem / s1), 0.5 * gamma((1.0 + a * a) * rem / s1))
    return RatePair(rp, rc)


def dpc_hop2(b: float, p2: float, beta: float) -> RatePair:
    """Hop-2 dirty-paper-coding rates, direct form."""
    _check_fraction("beta", beta)
    rem = (1.0 - beta) * p2
    s2 = 1.0 + (1.0 + b * b) * beta * p2
    rp = gamma(beta * p2 / (1.0 + b * b * beta * p2))
    rc = 0.5 * gamma(
        (1.0 - b * b) ** 2 * rem * rem / (s2 * s2) + 2.0 * (1.0 + b * b) * rem / s2
    )
    return RatePair(rp, rc)


def dpc_hop2_switched(b: float, p2: float, beta: float) -> RatePair:
    """Hop-2 dirty-paper-coding rates after role switching (original b)."""
    _check_fraction("beta", beta)
    rem = (1.0 - beta) * p2
    s2 = 1.0 + (1.0 + b * b) * beta * p2
    rp = gamma(b * b * beta * p2 / (1.0 + beta * p2))
    rc = 0.5 * gamma(
        (b * b - 1.0) ** 2 * rem * rem / (s2 * s2) + 2.0 * (1.0 + b * b) * rem / s2
    )
    return RatePair(rp, rc)


def _mac_common(b: float, p2: float, beta: float) -> float:
    # Beamformed common rate; identical in every MAC variant.
    rem = (1.0 - beta) * p2
    return 0.5 * gamma((1.0 + b) ** 2 * rem / (1.0 + (1.0 + b * b) * beta * p2))


def mac_hop2(b: float, p2: float, beta: float, alpha2: float) -> RatePair:
    """Hop-2 layered MAC rates, direct form, for a fixed sub-split alpha2.

    The maximization over alpha2 is the caller's job (the optimizer grids
    it together with alpha and beta).
    """
    _check_fraction("beta", beta)
    _check_fraction("alpha2", alpha2)
    bb = b * b
    q = alpha2 * beta * p2
    qrem = (1.0 - alpha2) * beta * p2
    s3 = 1.0 + (1.0 + bb) * q
    rp = min(
        gamma(bb * qrem / s3), 0.5 * gamma((1.0 + bb) * qrem / s3)
    ) + gamma(q / (1.0 + bb * q))
    return RatePair(rp, _mac_common(b, p2, beta))


def mac_hop2_switched(b: float, p2: float, beta: float, alpha2: float) -> RatePair:
    """Hop-2 layered MAC rates after role switching (original b > 1)."""
    _check_fraction("beta", beta)
    _check_fraction("alpha2", alpha2)
    bb = b * b
    q = alpha2 * beta * p2
    qrem = (1.0 - alpha2) * beta * p2
    s3 = 1.0 + (1.0 + bb) * q
    rp = min(
        gamma(qrem / s3), 0.5 * gamma((1.0 + bb) * qrem / s3)
    ) + gamma(bb * q / (1.0 + q))
    return RatePair(rp, _mac_common(b, p2, beta))


def mac_hop2_strong(b: float, p2: float, beta: float, switched: bool) -> RatePair:
    """Hop-2 MAC rates when both receivers decode everything (no sub-split).

    The unswitched form is for a strong second hop (b > 1), the switched
    form for a role-switched network whose original b <= 1.
    """
    _check_fraction("beta", beta)
    bb = b * b
    if switched:
        rp = min(gamma(bb * beta * p2), 0.5 * gamma((1.0 + bb) * beta * p2))
    else:
        rp = min(gamma(beta * p2), 0.5 * gamma((1.0 + bb) * beta * p2))
    return RatePair(rp, _mac_common(b, p2, beta))


def mac_region_general(b: float, powers: MacRegionPowers) -> MacRegionBounds:
    """The seven inequalities of the layered MAC region, evaluated verbatim.

    Kept as a test surface: the closed-form MAC rates above are the
    symmetric reduction of these bounds under the optimal equal common
    power split.
    """
    pp = powers.private
    den_c = 1.0 + (1.0 + b * b) * pp
    s1 = math.sqrt(powers.common_intended)
    s2 = math.sqrt(powers.common_interfering)
    den_pc = 1.0 + (1.0 + b * b) * powers.subprivate
    return MacRegionBounds(
        rc_intended=gamma((s1 + b * s2) ** 2 / den_c),
        rc_interfering=gamma((s2 + b * s1) ** 2 / den_c),
        rc_sum=gamma(((s1 + b * s2) ** 2 + (s2 + b * s1) ** 2) / den_c),
        rpc_direct=gamma(powers.subcommon / den_pc),
        rpc_cross=gamma(b * b * powers.subcommon / den_pc),
        rpc_sum=gamma((1.0 + b * b) * powers.subcommon / den_pc),
        rpp=gamma(powers.subprivate / (1.0 + b * b * powers.subprivate)),
    )


_FAMILY_BY_REGIME = {
    Regime.WEAK_WEAK: kernels.FAMILY_WEAK_WEAK,
    Regime.WEAK_STRONG: kernels.FAMILY_WEAK_STRONG,
    Regime.STRONG_STRONG: kernels.FAMILY_STRONG_STRONG,
    Regime.STRONG_WEAK: kernels.FAMILY_STRONG_WEAK,
}

_REGION_MODES = {
    "both": kernels.REGION_BOTH,
    "dpc": kernels.REGION_DPC_ONLY,
    "mac": kernels.REGION_MAC_ONLY,
}


def _family_of(params: ChannelParams) -> int:
    return _FAMILY_BY_REGIME[classify(params)]


def _family_switched(family: int) -> bool:
    return family in (kernels.FAMILY_STRONG_STRONG, kernels.FAMILY_STRONG_WEAK)


def _family_has_alpha2(family: int) -> bool:
    return family in (kernels.FAMILY_WEAK_WEAK, kernels.FAMILY_STRONG_STRONG)


def _hop1_pair(family: int, a: float, p1: float, alpha: float) -> RatePair:
    if _family_switched(family):
        return hk_hop1_switched(a, p1, alpha)
    return hk_hop1(a, p1, alpha)


def _dpc_pair(family: int, b: float, p2: float, beta: float) -> RatePair:
    if _family_switched(family):
        return dpc_hop2_switched(b, p2, beta)
    return dpc_hop2(b, p2, beta)


def _mac_pair(
    family: int, b: float, p2: float, beta: float, alpha2: float
) -> RatePair:
    if family == kernels.FAMILY_WEAK_WEAK:
        return mac_hop2(b, p2, beta, alpha2)
    if family == kernels.FAMILY_STRONG_STRONG:
        return mac_hop2_switched(b, p2, beta, alpha2)
    return mac_hop2_strong(b, p2, beta, switched=family == kernels.FAMILY_STRONG_WEAK)


def _share_for_point(dpc: RatePair, mac: RatePair, point: RatePair) -> float:
    """Smallest DPC->MAC time-share weight whose point dominates `point`."""
    t = 0.0
    for d, m, p in ((dpc.rp, mac.rp, point.rp), (dpc.rc, mac.rc, point.rc)):
        if m > d and p > d:
            t = max(t, (p - d) / (m - d))
    return min(t, 1.0)


def _dims_for(family: int, mode: int) -> int:
    if mode == kernels.REGION_DPC_ONLY:
        return 2
    return 3 if _family_has_alpha2(family) else 2


def _resolve_spec(grid: OptimizerSpec | None, dims: int) -> OptimizerSpec:
    spec = grid if grid is not None else OptimizerSpec()
    return replace(spec, dims=dims)


def df_rate(
    params: ChannelParams,
    grid: OptimizerSpec | None = None,
    second_hop: str = "both",
) -> SchemeResult:
    """Best full-duplex DF symmetric rate over all power splits.

    Strong first-hop interference (a > 1) dispatches to the role-switched
    formula family, which is never worse than decoding everything in place.
    `second_hop` restricts the hop-2 region to "dpc" or "mac" rectangles
    alone (for scheme comparisons); "both" uses their convex closure.
    """
    if params.duplex is not Duplex.FULL:
        raise ValueError("df_rate needs full duplex; use half_duplex_rate instead")
    if second_hop not in _REGION_MODES:
        raise ValueError(f"unknown second_hop mode {second_hop!r}")
    mode = _REGION_MODES[second_hop]
    family = _family_of(params)
    dims = _dims_for(family, mode)
    spec = _resolve_spec(grid, dims)
    coeff = rate_scale()
    a, b, p1, p2 = params.a, params.b, params.p1, params.p2

    def objective(axes):
        if dims == 3:
            return kernels.df_grid(family, mode, a, b, p1, p2, coeff, *axes)
        vals = kernels.df_grid(
            family, mode, a, b, p1, p2, coeff, axes[0], axes[1], np.zeros(1)
        )
        return vals[:, :, 0]

    _, arg = maximize(objective, spec)
    alpha, beta = arg[0], arg[1]
    alpha2 = arg[2] if dims == 3 else None

    hop1 = rect_region(_hop1_pair(family, a, p1, alpha))
    dpc = _dpc_pair(family, b, p2, beta)
    mac = _mac_pair(family, b, p2, beta, alpha2 if alpha2 is not None else 0.0)
    if mode == kernels.REGION_DPC_ONLY:
        hop2, share = rect_region(dpc), 0.0
    elif mode == kernels.REGION_MAC_ONLY:
        hop2, share = rect_region(mac), 1.0
    else:
        hop2 = convex_union(rect_region(dpc), rect_region(mac))
    rate, point = max_sum_in_intersection(hop1, hop2)
    if mode == kernels.REGION_BOTH:
        share = _share_for_point(dpc, mac, point)
    switched = _family_switched(family)
    return SchemeResult(
        scheme=Scheme.DF_ROLE_SWITCHED if switched else Scheme.DF_DIRECT,
        rate=rate,
        split=PowerSplit(alpha, beta, alpha2),
        share=share,
        switched=switched,
    )


def naive_strong_rate(params: ChannelParams) -> SchemeResult:
    """Strong-interference baseline: both relays decode everything, then the
    second hop runs as a vector broadcast channel (no role switching)."""
    if not (params.a > 1.0 and params.b > 1.0):
        raise ValueError("the naive strong-interference scheme needs a > 1 and b > 1")
    a2, b2 = params.a * params.a, params.b * params.b
    r1 = min(gamma(params.p1), 0.5 * gamma((1.0 + a2) * params.p1))
    r2 = 0.5 * gamma(
        (b2 - 1.0) ** 2 * params.p2 * params.p2 + 2.0 * params.p2 * (1.0 + b2)
    )
    return SchemeResult(
        scheme=Scheme.DF_NAIVE_STRONG,
        rate=min(r1, r2),
        split=None,
        share=None,
        switched=False,
    )


def half_duplex_combine(hop1: RatePair, hop2: RatePair) -> float:
    """End-to-end half-duplex rate for fixed hop operating points.

    The second hop must re-deliver both message classes, so its channel
    uses scale with the larger of the per-class rate ratios.  A class the
    first hop does not use costs nothing (0/0 -> 0); a used class the
    second-hop point cannot carry makes the point infeasible (rate 0).
    """
    m = 0.0
    if hop1.rp > 0.0:
        if hop2.rp <= 0.0:
            return 0.0
        m = hop1.rp / hop2.rp
    if hop1.rc > 0.0:
        if hop2.rc <= 0.0:
            return 0.0
        m = max(m, hop1.rc / hop2.rc)
    return (hop1.rp + hop1.rc) / (1.0 + m)


def half_duplex_rate(
    params: ChannelParams, grid: OptimizerSpec | None = None
) -> SchemeResult:
    """Best half-duplex DF symmetric rate over splits and hop-2 boundary.

    The hop-2 operating point ranges over the DPC-to-MAC time-sharing
    boundary, discretized at N_SHARE points; the optimum depends on the
    point itself, not only on its sum.
    """
    if params.duplex is not Duplex.HALF:
        raise ValueError("half_duplex_rate needs half duplex; use df_rate instead")
    family = _family_of(params)
    dims = 3 if _family_has_alpha2(family) else 2
    spec = _resolve_spec(grid, dims)
    coeff = rate_scale()
    a, b, p1, p2 = params.a, params.b, params.p1, params.p2

    def objective(axes):
        if dims == 3:
            return kernels.hd_grid(family, a, b, p1, p2, coeff, *axes, N_SHARE)
        vals = kernels.hd_grid(
            family, a, b, p1, p2, coeff, axes[0], axes[1], np.zeros(1), N_SHARE
        )
        return vals[:, :, 0]

    _, arg = maximize(objective, spec)
    alpha, beta = arg[0], arg[1]
    alpha2 = arg[2] if dims == 3 else None

    hop1 = _hop1_pair(family, a, p1, alpha)
    dpc = _dpc_pair(family, b, p2, beta)
    mac = _mac_pair(family, b, p2, beta, alpha2 if alpha2 is not None else 0.0)
    step = 1.0 / (N_SHARE - 1)
    rate, share = 0.0, 0.0
    for m in range(N_SHARE):
        t = m * step
        point = RatePair(
            dpc.rp + t * (mac.rp - dpc.rp), dpc.rc + t * (mac.rc - dpc.rc)
        )
        v = half_duplex_combine(hop1, point)
        if v > rate:
            rate, share = v, t
    switched = _family_switched(family)
    return SchemeResult(
        scheme=Scheme.DF_HALF_DUPLEX,
        rate=rate,
        split=PowerSplit(alpha, beta, alpha2),
        share=share,
        switched=switched,
    )
