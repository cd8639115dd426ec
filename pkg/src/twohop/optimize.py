"""Deterministic grid search with refinement over unit-interval variables.

The rate objectives contain min() kinks and regime switches, so a
derivative-free exhaustive search is used instead of gradient methods.
Objectives are evaluated in batch: they receive a tuple of per-dimension
axis arrays and must return the full value tensor for the grid those axes
span (C order, shape = axis lengths).  Evaluating the tensor in one call is
what lets the compiled kernels do the heavy lifting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np


class EvaluationError(RuntimeError):
    """Objective returned a non-finite value; carries the offending point."""

    def __init__(self, point: Sequence[float], value: float):
        self.point = list(point)
        self.value = value
        super().__init__(f"objective returned {value!r} at {self.point}")


@dataclass(frozen=True)
class OptimizerSpec:
    coarse_points: int = 101
    refine_rounds: int = 3
    shrink: float = 0.1
    dims: int = 1

    def __post_init__(self):
        if self.coarse_points < 2:
            raise ValueError("coarse_points must be >= 2")
        if self.refine_rounds < 0:
            raise ValueError("refine_rounds must be >= 0")
        if not 0.0 < self.shrink < 1.0:
            raise ValueError("shrink must be in (0, 1)")
        if not 1 <= self.dims <= 3:
            raise ValueError("dims must be 1..3")


def grid_objective(fn: Callable[..., float]):
    """Wrap a scalar function of d floats into the batched-axes form.

    Convenience for tests and one-off objectives; it evaluates point by
    point, so do not use it on hot paths.
    """

    def objective(axes):
        mesh = np.meshgrid(*axes, indexing="ij")
        out = np.empty(mesh[0].shape)
        for idx in np.ndindex(out.shape):
            out[idx] = fn(*(float(m[idx]) for m in mesh))
        return out

    return objective


def maximize(objective, spec: OptimizerSpec) -> tuple[float, list[float]]:
    """Maximize a batched objective over the unit hypercube [0, 1]^dims.

    Runs a full coarse grid, then `refine_rounds` rounds that re-grid a
    window around the incumbent (half-width = shrink * current width,
    clamped to [0, 1]).  Exact ties resolve to the lexicographically
    smallest argument vector, and earlier rounds win ties against later
    ones, so repeated calls are bit-identical.
    """
    d = spec.dims
    lo = [0.0] * d
    hi = [1.0] * d
    best_val = -math.inf
    best_arg: list[float] = [0.0] * d

    for _ in range(spec.refine_rounds + 1):
        axes = tuple(np.linspace(lo[i], hi[i], spec.coarse_points) for i in range(d))
        values = np.asarray(objective(axes), dtype=float)
        expected = tuple(len(ax) for ax in axes)
        if values.shape != expected:
            raise ValueError(f"objective returned shape {values.shape}, expected {expected}")
        if not np.all(np.isfinite(values)):
            bad = tuple(np.argwhere(~np.isfinite(values))[0])
            point = [float(axes[i][bad[i]]) for i in range(d)]
            raise EvaluationError(point, float(values[bad]))
        # np.argmax returns the first maximum in C order, which is the
        # lexicographically smallest argument vector for these axes.
        idx = np.unravel_index(int(np.argmax(values)), values.shape)
        val = float(values[idx])
        if val > best_val:
            best_val = val
            best_arg = [float(axes[i][idx[i]]) for i in range(d)]
        for i in range(d):
            half = spec.shrink * (hi[i] - lo[i])
            lo[i] = max(0.0, best_arg[i] - half)
            hi[i] = min(1.0, best_arg[i] + half)
    return best_val, best_arg
