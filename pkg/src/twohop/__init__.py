"""Achievable symmetric rates for two-hop Gaussian interference networks."""

from .af import (
    CrossoverWindow,
    EquivChannel,
    EquivRegime,
    Phase,
    af_gain,
    af_rate,
    af_regime,
    af_strong_rate,
    af_weak_rate,
    crossover_window,
    equivalent_channel,
    noisy_interference_capacity,
    parallel_awgn_rate,
)
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
    rect_region,
    switch_roles,
)
from .df import (
    MacRegionBounds,
    MacRegionPowers,
    PowerSplit,
    Scheme,
    SchemeResult,
    df_rate,
    dpc_hop2,
    dpc_hop2_switched,
    half_duplex_combine,
    half_duplex_rate,
    hk_hop1,
    hk_hop1_switched,
    mac_hop2,
    mac_hop2_strong,
    mac_hop2_switched,
    mac_region_general,
    naive_strong_rate,
)
from .kernels import backend_name
from .optimize import EvaluationError, OptimizerSpec, maximize

__version__ = "0.1.0"

__all__ = [
    "ChannelParams",
    "CrossoverWindow",
    "Duplex",
    "EquivChannel",
    "EquivRegime",
    "EvaluationError",
    "MacRegionBounds",
    "MacRegionPowers",
    "OptimizerSpec",
    "Phase",
    "PowerSplit",
    "RatePair",
    "RateRegion",
    "Regime",
    "Scheme",
    "SchemeResult",
    "af_gain",
    "af_rate",
    "af_regime",
    "af_strong_rate",
    "af_weak_rate",
    "backend_name",
    "classify",
    "convex_union",
    "crossover_window",
    "df_rate",
    "dpc_hop2",
    "dpc_hop2_switched",
    "equivalent_channel",
    "gamma",
    "half_duplex_combine",
    "half_duplex_rate",
    "hk_hop1",
    "hk_hop1_switched",
    "mac_hop2",
    "mac_hop2_strong",
    "mac_hop2_switched",
    "mac_region_general",
    "max_sum_in_intersection",
    "maximize",
    "naive_strong_rate",
    "noisy_interference_capacity",
    "parallel_awgn_rate",
    "rect_region",
    "switch_roles",
]
