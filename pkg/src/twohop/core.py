"""Channel model, rate function and rate-region geometry shared by all schemes.

Everything here is a pure function of its inputs; the value types are frozen
dataclasses, so instances can be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

# Rates are reported in bits per channel use.  Switching this to math.e turns
# every rate in the package into nats; all frozen test values assume base 2.
LOG_BASE = 2.0

# Absolute tolerance for region membership and dominance comparisons.
GEOM_TOL = 1e-9

# Tie window for "equal sum" when picking the smallest-rp optimum.
_TIE_TOL = 1e-12


def rate_scale() -> float:
    """Coefficient c such that gamma(x) == c * ln(1 + x)."""
    return 0.5 / math.log(LOG_BASE)


def gamma(x: float) -> float:
    """Gaussian point-to-point rate 0.5 * log(1 + x) of an SNR-like ratio.

    Raises ValueError for negative or non-finite arguments.
    """
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"gamma() needs a finite nonnegative argument, got {x!r}")
    return rate_scale() * math.log1p(x)


class Duplex(Enum):
    FULL = "full"
    HALF = "half"


class Regime(Enum):
    """Quadrant of (a, b) relative to 1; boundaries count as weak."""

    WEAK_WEAK = "weak_weak"
    WEAK_STRONG = "weak_strong"
    STRONG_WEAK = "strong_weak"
    STRONG_STRONG = "strong_strong"


@dataclass(frozen=True)
class ChannelParams:
    """A symmetric two-hop interference network instance.

    a and b are the first- and second-hop cross gains, P1 and P2 the
    transmitter and relay powers (linear scale, unit noise variance).
    `switched` marks an instance produced by switch_roles().
    """

    a: float
    b: float
    p1: float
    p2: float
    duplex: Duplex = Duplex.FULL
    switched: bool = False

    def __post_init__(self):
        for name in ("a", "b", "p1", "p2"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.a < 0.0 or self.b < 0.0:
            raise ValueError("cross gains must be nonnegative")
        if self.p1 < 0.0 or self.p2 < 0.0:
            raise ValueError("powers must be nonnegative")


@dataclass(frozen=True)
class RatePair:
    """Operating point (private rate, common rate) of one hop."""

    rp: float
    rc: float

    def __post_init__(self):
        if not (math.isfinite(self.rp) and math.isfinite(self.rc)):
            raise ValueError("rates must be finite")
        if self.rp < 0.0 or self.rc < 0.0:
            raise ValueError("rates must be nonnegative")


def classify(params: ChannelParams) -> Regime:
    """Quadrant of (a, b) relative to 1; a == 1 or b == 1 maps to weak."""
    if params.a <= 1.0:
        return Regime.WEAK_WEAK if params.b <= 1.0 else Regime.WEAK_STRONG
    return Regime.STRONG_WEAK if params.b <= 1.0 else Regime.STRONG_STRONG


def switch_roles(params: ChannelParams) -> ChannelParams:
    """Swap which relay serves which user: cross gains become 1/a and 1/b.

    Only the gains are inverted and the instance is flagged; the accompanying
    noise rescaling is already folded into the role-switched rate formulas in
    twohop.df, which take the original gains.
    """
    if params.a == 0.0 or params.b == 0.0:
        raise ValueError("switch_roles needs strictly positive cross gains")
    return replace(
        params, a=1.0 / params.a, b=1.0 / params.b, switched=not params.switched
    )


@dataclass(frozen=True)
class RateRegion:
    """Downward-closed convex region in the (rp, rc) plane.

    `corners` is the upper-right boundary, sorted by strictly increasing rp
    and strictly decreasing rc.  The region is the set of all points
    componentwise dominated by the boundary (it always contains the origin).
    """

    corners: tuple[RatePair, ...]

    def __post_init__(self):
        if not self.corners:
            raise ValueError("a region needs at least one corner")
        for prev, cur in zip(self.corners, self.corners[1:]):
            if not (cur.rp > prev.rp and cur.rc < prev.rc):
                raise ValueError("corners must have increasing rp, decreasing rc")

    @property
    def max_rp(self) -> float:
        return self.corners[-1].rp

    @property
    def max_rc(self) -> float:
        return self.corners[0].rc

    def boundary(self) -> list[tuple[float, float]]:
        """Boundary polyline from the rc-axis to the rp-axis."""
        pts = [(0.0, self.max_rc)]
        pts += [(c.rp, c.rc) for c in self.corners]
        pts.append((self.max_rp, 0.0))
        return pts

    def contains(self, point: RatePair, tol: float = GEOM_TOL) -> bool:
        x, y = point.rp, point.rc
        if x < -tol or y < -tol:
            return False
        if x > self.max_rp + tol or y > self.max_rc + tol:
            return False
        # Each boundary segment's supporting line bounds the convex region.
        for c1, c2 in zip(self.corners, self.corners[1:]):
            s = (c2.rc - c1.rc) / (c2.rp - c1.rp)
            if y > c1.rc + s * (x - c1.rp) + tol:
                return False
        return True


def rect_region(point: RatePair) -> RateRegion:
    """The downward-closed rectangle generated by a single operating point."""
    return RateRegion((point,))


def _nondominated(points: list[RatePair]) -> list[RatePair]:
    pts = sorted(points, key=lambda p: (p.rp, -p.rc))
    keep: list[RatePair] = []
    best_rc = -1.0
    for p in reversed(pts):  # decreasing rp; keep strict rc improvements
        if p.rc > best_rc:
            keep.append(p)
            best_rc = p.rc
    keep.reverse()
    return keep


def convex_union(r1: RateRegion, r2: RateRegion) -> RateRegion:
    """Smallest convex downward-closed region containing both operands.

    For two rectangles this is the dominant corner alone, or both corners
    joined by the time-sharing segment.
    """
    pts = _nondominated(list(r1.corners) + list(r2.corners))
    # Upper concave chain: drop corners on or below the chord of their
    # neighbours (those are reachable by time sharing anyway).
    hull: list[RatePair] = []
    for p in pts:
        while len(hull) >= 2:
            q, r = hull[-2], hull[-1]
            cross = (r.rp - q.rp) * (p.rc - r.rc) - (r.rc - q.rc) * (p.rp - r.rp)
            if cross >= 0.0:
                hull.pop()
            else:
                break
        hull.append(p)
    return RateRegion(tuple(hull))


def _segment_intersection(p1, p2, q1, q2):
    """Intersection point of two segments, or None if they do not cross."""
    d1x, d1y = p2[0] - p1[0], p2[1] - p1[1]
    d2x, d2y = q2[0] - q1[0], q2[1] - q1[1]
    den = d1x * d2y - d1y * d2x
    if abs(den) < 1e-30:  # parallel/collinear: endpoints are candidates already
        return None
    t = ((q1[0] - p1[0]) * d2y - (q1[1] - p1[1]) * d2x) / den
    u = ((q1[0] - p1[0]) * d1y - (q1[1] - p1[1]) * d1x) / den
    if -1e-12 <= t <= 1.0 + 1e-12 and -1e-12 <= u <= 1.0 + 1e-12:
        return (p1[0] + t * d1x, p1[1] + t * d1y)
    return None


def max_sum_in_intersection(
    hop1: RateRegion, hop2: RateRegion
) -> tuple[float, RatePair]:
    """Maximize rp + rc over the intersection of two regions.

    The optimum sits at a vertex of the intersection polygon, so it is found
    by enumerating boundary corners of each region that lie inside the other
    plus all pairwise boundary-segment crossings.  Ties are broken toward the
    smallest rp, which makes the returned point deterministic.
    """
    candidates: list[tuple[float, float]] = [(0.0, 0.0)]
    for c in hop1.corners:
        if hop2.contains(c):
            candidates.append((c.rp, c.rc))
    for c in hop2.corners:
        if hop1.contains(c):
            candidates.append((c.rp, c.rc))
    b1, b2 = hop1.boundary(), hop2.boundary()
    for s1, e1 in zip(b1, b1[1:]):
        for s2, e2 in zip(b2, b2[1:]):
            pt = _segment_intersection(s1, e1, s2, e2)
            if pt is not None:
                candidates.append(pt)

    feasible = []
    for x, y in candidates:
        pair = RatePair(max(x, 0.0), max(y, 0.0))
        if hop1.contains(pair) and hop2.contains(pair):
            feasible.append(pair)
    best_sum = max(p.rp + p.rc for p in feasible)
    best = min(
        (p for p in feasible if p.rp + p.rc >= best_sum - _TIE_TOL),
        key=lambda p: p.rp,
    )
    return best_sum, best
