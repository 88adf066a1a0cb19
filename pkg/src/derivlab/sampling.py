"""Smooth compactly supported test functions.

The bump is the standard smooth plateau exp(4 - 1/(y(1-y))) rescaled to an
interval [a, b]; it has unit peak height, vanishes to machine zero at the
edges, and is infinitely differentiable, so quadrature identities tested
with it see clean second-order behaviour.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import DomainError
from .spaces import SUPPORT_COMPACT, Grid, L1Element


def bump_fn(a: float, b: float, amplitude: float = 1.0) -> Callable:
    """Closure for the smooth bump on [a, b] (evaluable on any grid)."""
    if not 0 <= a < b:
        raise DomainError("need 0 <= a < b")

    def fn(x):
        x = np.asarray(x, dtype=float)
        y = (x - a) / (b - a)
        inside = (y > 0.0) & (y < 1.0)
        safe = np.where(inside, y * (1.0 - y), 1.0)
        with np.errstate(over="ignore", divide="ignore"):
            vals = np.exp(4.0 - 1.0 / safe)
        return amplitude * np.where(inside, vals, 0.0)

    return fn


def bump_l1(grid: Grid, a: float, b: float, amplitude: float = 1.0) -> L1Element:
    if b > grid.t_max + 1e-12:
        raise DomainError("bump support escapes the grid")
    return L1Element(grid, bump_fn(a, b, amplitude)(grid.nodes), SUPPORT_COMPACT)


def random_bump_params(rng: np.random.Generator, lo: float = 0.2,
                       hi: float = 5.0) -> tuple[float, float]:
    """Support endpoints for a wide random bump inside [lo, hi].

    The left edge stays in the lower fifth and the right edge in the upper
    fifth of the window, so the bumps are wide and their derivatives stay
    moderate; identity residual budgets assume this.
    """
    span = hi - lo
    a = rng.uniform(lo, lo + 0.2 * span)
    b = rng.uniform(hi - 0.2 * span, hi)
    return float(a), float(b)


def random_bump_pair(grid: Grid, rng: np.random.Generator,
                     lo: float = 0.2, hi: float = 5.0
                     ) -> tuple[L1Element, L1Element]:
    fa, fb = random_bump_params(rng, lo, hi)
    ga, gb = random_bump_params(rng, lo, hi)
    return bump_l1(grid, fa, fb), bump_l1(grid, ga, gb)
