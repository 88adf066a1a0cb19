"""The derivation operator, its pre-adjoint, and point-mass images.

For a dual-side function phi the derivation acts by

    (D f)(t) = integral of f(s) * (s/(t+s)) * phi(t+s) ds,

its pre-adjoint swaps the kernel factor to t/(t+s), and the image of the
unit point mass at s is the function t -> (s/(t+s)) phi(t+s).  Both kernel
factors are taken to be 0 at t = s = 0, the limit of the point-mass images
as s -> 0.  Splitting the two factors recovers the module action nodewise,
an identity the test suite checks exactly because the engine shares one
quadrature between the three operators.

The product-rule residual re-runs everything on a grid extended past T_max
by the support length of the factors, so the inner operator images are
evaluated exactly where the outer module actions need them; the residual
norm is then taken over the original grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from ._apply import KIND_ADJOINT, KIND_DERIV, apply_translated
from .algebra import convolve_l1, module_action
from .errors import DomainError, GridMismatchError, SupportOverflowError, TailError
from .spaces import (
    SUPPORT_COMPACT,
    TAIL_ZERO,
    Grid,
    L1Element,
    LInfElement,
    MeasureElement,
    Tail,
    Weight,
    linf_norm,
    linf_norm_parts,
)


@dataclass(frozen=True)
class DerivationKernel:
    """Lazily evaluable kernel K(t, s) = (s/(t+s)) phi(t+s).

    K(t, 0) = 0 and K(0, s) = phi(s); the (0, 0) value is 0.  Satisfies
    |K(t, s)| <= ||phi|| w(t) w(s) wherever the weight is submultiplicative.
    """

    phi: LInfElement

    def __call__(self, t, s) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        s = np.asarray(s, dtype=float)
        total = t + s
        safe = np.where(total > 0, total, 1.0)
        factor = np.where(total > 0, s / safe, 0.0)
        return factor * self.phi.eval_at(total).reshape(total.shape)


def deriv_delta(phi: LInfElement, s: float) -> LInfElement:
    """Image of the unit point mass at s: t -> (s/(t+s)) phi(t+s)."""
    if s < 0:
        raise DomainError("point-mass location must be nonnegative")
    grid = phi.grid
    t = grid.nodes
    total = t + s
    if s == 0.0:
        vals = np.zeros(grid.size, dtype=np.result_type(phi.samples, float))
    else:
        vals = (s / total) * phi.eval_at(total)
    tail = Tail.zero() if phi.tail.kind == TAIL_ZERO else Tail.bound()
    return LInfElement(grid, vals, phi.weight, tail)


def apply_D(phi: LInfElement, f: L1Element) -> LInfElement:
    """Derivation image of f; f must be compactly supported."""
    _require_compact(f)
    vals = apply_translated(phi, f, KIND_DERIV)
    tail = Tail.zero() if phi.tail.kind == TAIL_ZERO else Tail.bound()
    return LInfElement(f.grid, vals, phi.weight, tail)


def apply_T(phi: LInfElement, f: L1Element) -> LInfElement:
    """Pre-adjoint image of f, kernel factor t/(t+s); vanishes at t = 0."""
    _require_compact(f)
    vals = apply_translated(phi, f, KIND_ADJOINT)
    tail = Tail.zero() if phi.tail.kind == TAIL_ZERO else Tail.bound()
    return LInfElement(f.grid, vals, phi.weight, tail)


def _require_compact(f: L1Element):
    if not f.is_compactly_supported:
        raise TailError("operator input must be compactly supported; "
                        "truncating silently would hide unbounded error")


def apply_Dbar_measure(phi: LInfElement, mu: MeasureElement) -> LInfElement:
    """Extension of the derivation to a measure: sum of point-mass images
    over the atoms plus the image of the density."""
    grid = phi.grid
    out = LInfElement(grid, np.zeros(grid.size), phi.weight, Tail.zero())
    for s, c in mu.atoms:
        if s > grid.t_max + 1e-12:
            raise TailError(f"atom at {s} lies beyond the grid")
        out = out + c * deriv_delta(phi, s)
    if mu.density is not None:
        out = out + apply_D(phi, mu.density)
    return out


def derivation_identity_residual(phi: LInfElement, f: L1Element,
                                 g: L1Element) -> float:
    """Weighted sup norm over the grid of D(f*g) - f.(Dg) - g.(Df).

    The supports of f and g must add up inside the grid.  All terms are
    computed on a grid extended by the larger support length so that the
    module actions never read truncated operator values at the right edge.
    """
    if not (f.grid.same_as(g.grid) and f.grid.same_as(phi.grid)):
        raise GridMismatchError("inputs must share one grid")
    _require_compact(f)
    _require_compact(g)
    grid = f.grid
    end_f, end_g = f.support_end(), g.support_end()
    if end_f + end_g > grid.t_max + 1e-12:
        raise SupportOverflowError(
            f"supports add to {end_f + end_g:.3g}, beyond T_max {grid.t_max:.3g}")

    if grid.uniform_h is not None:
        h = grid.uniform_h
        extra = ceil(max(end_f, end_g) / h)
        if grid.scheme == "simpson":
            extra += extra % 2
        plus = Grid.uniform(h, grid.t_max + extra * h, scheme=grid.scheme)
        pad = plus.size - grid.size
        f_p = L1Element(plus, np.pad(f.samples, (0, pad)), SUPPORT_COMPACT)
        g_p = L1Element(plus, np.pad(g.samples, (0, pad)), SUPPORT_COMPACT)
        phi_p = phi.resample(plus)
    else:
        plus, f_p, g_p, phi_p = grid, f, g, phi

    conv = convolve_l1(f_p, g_p)
    lhs = apply_D(phi_p, conv)
    rhs = module_action(f_p, apply_D(phi_p, g_p)) \
        + module_action(g_p, apply_D(phi_p, f_p))
    diff = lhs.samples - rhs.samples
    base = grid.size
    prof = np.abs(diff[:base]) / phi.weight(grid.nodes)
    return float(np.max(prof))


@dataclass(frozen=True)
class NormProfilePoint:
    """One row of a point-mass norm profile."""

    s: float
    norm: float
    scaled: float           # norm / w(s)
    attained_by_tail: bool  # True when the tail bound beats the grid sup


def deriv_delta_norm_profile(phi: LInfElement, s_list) -> list[NormProfilePoint]:
    """Norms of the point-mass images over s, raw and scaled by 1/w(s).

    The sup behind each norm splits into the grid part and the analytic
    tail contribution of the descriptor; the flag records which attains it.
    """
    w = phi.weight
    out = []
    for s in s_list:
        el = deriv_delta(phi, float(s))
        grid_sup, tail_part = linf_norm_parts(el)
        norm = max(grid_sup, tail_part)
        out.append(NormProfilePoint(float(s), norm, norm / float(w(s)),
                                    tail_part > grid_sup))
    return out


@dataclass(frozen=True)
class KernelFamily:
    """The one-parameter family x -> (x/(x+p)) phi(x+p), one member per
    parameter value, stored on phi's grid.

    Up to naming of the free variable this is both the family of kernel
    rows and the family of scaled point-mass images that drive the
    total-boundedness proxy; each member's norm is bounded by
    ||phi|| w(p).
    """

    phi: LInfElement
    weight: Weight
    grid: Grid
    params: np.ndarray
    members: tuple[LInfElement, ...]

    def scaled_matrix(self) -> np.ndarray:
        """Member samples scaled by 1/(w(p) w(t)): rows live in the weighted
        sup metric, so a chebyshev row distance is the family metric."""
        omega_t = self.weight(self.grid.nodes)
        rows = np.vstack([m.samples for m in self.members])
        return rows / (self.weight(self.params)[:, None] * omega_t[None, :])


def kernel_family(phi: LInfElement, params) -> KernelFamily:
    """Build the kernel family of phi over the given parameter values."""
    params = np.asarray(sorted(float(p) for p in params))
    if params.size == 0:
        raise DomainError("family needs at least one parameter value")
    if np.any(params < 0):
        raise DomainError("family parameters must be nonnegative")
    grid = phi.grid
    x = grid.nodes
    members = []
    for p in params:
        total = x + p
        safe = np.where(total > 0, total, 1.0)
        factor = np.where(total > 0, x / safe, 0.0)
        vals = factor * phi.eval_at(total)
        tail = Tail.zero() if phi.tail.kind == TAIL_ZERO else Tail.bound()
        members.append(LInfElement(grid, vals, phi.weight, tail))
    return KernelFamily(phi, phi.weight, grid, params, tuple(members))
