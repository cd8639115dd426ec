"""Amplify-and-forward achievable rates.

Both relays scale their received signal by the full-power gain c, either
with the same polarity (in phase) or with one sign flipped (out of phase).
Composing the two hops gives a single equivalent interference channel whose
gains and noise depend on the phase choice; the usual strong/weak machinery
then applies to that channel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from . import kernels
from .core import ChannelParams, RatePair, gamma, rate_scale
from .df import PowerSplit, Scheme, SchemeResult
from .optimize import OptimizerSpec, maximize


class Phase(Enum):
    IN_PHASE = "in"
    OUT_OF_PHASE = "out"


class EquivRegime(Enum):
    STRONG = "strong"
    WEAK = "weak"


@dataclass(frozen=True)
class EquivChannel:
    """Equivalent single-hop interference channel of the AF cascade.

    g_common_bound is the gain in the individual common-rate bound of the
    weak-interference split: the cross gain in phase, but the direct gain
    out of phase (implemented as displayed; see README notes).
    noise_var is infinite when the relays have no power (degenerate).
    """

    g_direct: float
    g_cross: float
    noise_var: float
    phase: Phase
    g_common_bound: float

    @property
    def degenerate(self) -> bool:
        return not math.isfinite(self.noise_var)


@dataclass(frozen=True)
class CrossoverWindow:
    """P1 = P2 range where out-of-phase AF beats the per-hop capacity."""

    lower: float
    upper: float

    @property
    def nonempty(self) -> bool:
        return self.lower < self.upper


def af_gain(params: ChannelParams) -> float:
    """Full-power relay amplitude scale; 0 when the relays have no power."""
    return math.sqrt(params.p2 / ((1.0 + params.a * params.a) * params.p1 + 1.0))


def equivalent_channel(params: ChannelParams, phase: Phase) -> EquivChannel:
    c = af_gain(params)
    a, b = params.a, params.b
    noise_var = math.inf if c == 0.0 else 1.0 + b * b + 1.0 / (c * c)
    if phase is Phase.IN_PHASE:
        g_direct, g_cross = 1.0 + a * b, a + b
        g_common_bound = g_cross
    else:
        g_direct, g_cross = a * b - 1.0, b - a
        g_common_bound = g_direct
    return EquivChannel(g_direct, g_cross, noise_var, phase, g_common_bound)


def af_regime(params: ChannelParams, phase: Phase) -> EquivRegime:
    """Strong equivalent interference iff a and b straddle 1.

    In phase the condition is a + b > 1 + ab, out of phase |ab-1| < |b-a|;
    both reduce to (1-a)(1-b) < 0, so the phase argument does not change
    the answer.  The boundary counts as weak.
    """
    del phase
    return (
        EquivRegime.STRONG
        if (1.0 - params.a) * (1.0 - params.b) < 0.0
        else EquivRegime.WEAK
    )


def af_strong_rate(eq: EquivChannel, p1: float) -> float:
    """Symmetric rate when both receivers decode both messages."""
    gd2 = eq.g_direct * eq.g_direct
    gc2 = eq.g_cross * eq.g_cross
    return min(
        gamma(gd2 * p1 / eq.noise_var),
        0.5 * gamma((gd2 + gc2) * p1 / eq.noise_var),
    )


def af_weak_rate(eq: EquivChannel, p1: float, alpha: float) -> RatePair:
    """Private/common split rates on the equivalent weak channel."""
    if not (math.isfinite(alpha) and 0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    gd2 = eq.g_direct * eq.g_direct
    gc2 = eq.g_cross * eq.g_cross
    gb2 = eq.g_common_bound * eq.g_common_bound
    rem = (1.0 - alpha) * p1
    rp = gamma(gd2 * alpha * p1 / (gc2 * alpha * p1 + eq.noise_var))
    s1 = (gd2 + gc2) * alpha * p1 + eq.noise_var
    s2 = (gd2 + gc2) * rem
    rc = min(gamma(gb2 * rem / s1), 0.5 * gamma(s2 / s1))
    return RatePair(rp, rc)


def af_rate(
    params: ChannelParams, phase: Phase, grid: OptimizerSpec | None = None
) -> SchemeResult:
    """Best AF symmetric rate for the given relay phase."""
    eq = equivalent_channel(params, phase)
    scheme = Scheme.AF_IN_PHASE if phase is Phase.IN_PHASE else Scheme.AF_OUT_OF_PHASE
    if af_regime(params, phase) is EquivRegime.STRONG:
        return SchemeResult(
            scheme=scheme,
            rate=af_strong_rate(eq, params.p1),
            split=None,
            share=None,
            switched=False,
        )
    spec = replace(grid if grid is not None else OptimizerSpec(), dims=1)
    gd2 = eq.g_direct * eq.g_direct
    gc2 = eq.g_cross * eq.g_cross
    gb2 = eq.g_common_bound * eq.g_common_bound
    coeff = rate_scale()

    def objective(axes):
        return kernels.af_weak_grid(gd2, gc2, gb2, eq.noise_var, params.p1, coeff, axes[0])

    _, arg = maximize(objective, spec)
    pair = af_weak_rate(eq, params.p1, arg[0])
    return SchemeResult(
        scheme=scheme,
        rate=pair.rp + pair.rc,
        split=PowerSplit(alpha=arg[0]),
        share=None,
        switched=False,
    )


def parallel_awgn_rate(a: float, p1: float, p2: float) -> float:
    """Out-of-phase AF rate when a = b: the cross talk cancels exactly and
    each user sees a clean AWGN channel through both hops."""
    a2 = a * a
    return gamma(
        (1.0 - a2) ** 2 * p1 * p2 / ((1.0 + a2) * (p1 + p2) + 1.0)
    )


def noisy_interference_capacity(a: float, p1: float) -> float | None:
    """Symmetric capacity of one hop under noisy interference, else None.

    For a weak interference channel the sum capacity is known (treat the
    other signal as noise) exactly when a(a^2 P1 + 1) <= 1/2; outside that
    condition the capacity is unknown and None is returned.
    """
    if not 0.0 < a < 1.0:
        raise ValueError("the noisy-interference condition is stated for 0 < a < 1")
    if a * (a * a * p1 + 1.0) > 0.5:
        return None
    return gamma(p1 / (1.0 + a * a * p1))


def crossover_window(a: float) -> CrossoverWindow:
    """P1 = P2 interval where the parallel-AWGN rate beats both per-hop
    noisy-interference capacities (nonempty only for small a)."""
    if not 0.0 < a < 1.0:
        raise ValueError("crossover_window needs 0 < a < 1")
    a2 = a * a
    one = 1.0 + 4.0 * a2 - a2 * a2
    lower = (one + math.sqrt(one * one + 4.0 * a2 * (1.0 - a2) ** 2)) / (
        2.0 * a2 * (1.0 - a2) ** 2
    )
    upper = (1.0 / a2) * (1.0 / (2.0 * a) - 1.0)
    return CrossoverWindow(lower=lower, upper=upper)
