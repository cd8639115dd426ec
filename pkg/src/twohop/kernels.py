"""Kernel lane selection: compiled extension if available, numpy otherwise.

The hot inner loops (full grids of the DF, half-duplex and AF objectives)
live in twohop._speedups (Cython) with a drop-in numpy twin in
twohop._fallback.  The lane is picked once at import; set TWOHOP_KERNELS=numpy
to force the fallback, e.g. to compare lanes (see benchmarks/bench_kernels.py).

Integer codes shared by both lanes:

  family: 0 weak/weak, 1 strong/strong (role-switched formulas),
          2 weak/strong, 3 strong/weak (role-switched formulas)
  region_mode: 0 DPC+MAC convex closure, 1 DPC rectangle only,
               2 MAC rectangle only
"""

import os

from . import _fallback

FAMILY_WEAK_WEAK = _fallback.FAMILY_WEAK_WEAK
FAMILY_STRONG_STRONG = _fallback.FAMILY_STRONG_STRONG
FAMILY_WEAK_STRONG = _fallback.FAMILY_WEAK_STRONG
FAMILY_STRONG_WEAK = _fallback.FAMILY_STRONG_WEAK

REGION_BOTH = _fallback.REGION_BOTH
REGION_DPC_ONLY = _fallback.REGION_DPC_ONLY
REGION_MAC_ONLY = _fallback.REGION_MAC_ONLY

if os.environ.get("TWOHOP_KERNELS") == "numpy":
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

df_grid = _impl.df_grid
hd_grid = _impl.hd_grid
af_weak_grid = _impl.af_weak_grid


def backend_name() -> str:
    """Active lane: "cython" or "numpy"."""
    return "numpy" if _impl is _fallback else "cython"
