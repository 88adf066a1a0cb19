"""Shared quadrature engine for the translated-kernel operators.

All three operators that integrate ``f(s) * factor(t,s) * phi(t+s)`` over
the s-grid run through here:

    module  : factor = 1
    deriv   : factor = s/(t+s)
    adjoint : factor = t/(t+s)

On a uniform grid the factor is j/(i+j) resp. i/(i+j) in node indices, so a
row sweep reduces to two correlations against the weighted samples of f:
with ``u_m = phi_m / m`` (u_0 = 0),

    deriv_i   = corr(phi)_i - i * corr(u)_i
    adjoint_i = i * corr(u)_i
    module_i  = corr(phi)_i

The deriv/adjoint split therefore sums to the module row exactly (shared
terms cancel in floating point), which is what the nodewise split identity
tests rely on.  Both kernel factors take the value 0 at t = s = 0, matching
the vanishing of the point-mass image at 0.
"""

from __future__ import annotations

import numpy as np

from .spaces import Grid, L1Element, LInfElement

KIND_MODULE = "module"
KIND_DERIV = "deriv"
KIND_ADJOINT = "adjoint"


def weighted_support(f: L1Element) -> tuple[int, int, np.ndarray]:
    """Quadrature-weighted samples of f trimmed to the nonzero index range.

    Returns (j0, j1, w*f restricted to [j0, j1]); j1 < j0 for the zero
    function.  Trimming is exact: zero samples contribute nothing.
    """
    ft = f.grid.weights * f.samples
    nz = np.nonzero(ft)[0]
    if nz.size == 0:
        return 0, -1, ft[:0]
    j0, j1 = int(nz[0]), int(nz[-1])
    return j0, j1, ft[j0:j1 + 1]


def phi_on_index_range(phi: LInfElement, upto: int) -> np.ndarray:
    """phi at uniform node indices 0..upto, continuing past the grid via the
    element's extension or tail rule."""
    grid = phi.grid
    n = grid.size - 1
    if upto <= n:
        return phi.samples[:upto + 1]
    beyond = np.arange(n + 1, upto + 1, dtype=float) * grid.uniform_h
    return np.concatenate([phi.samples, phi.eval_at(beyond)])


def apply_translated(phi: LInfElement, f: L1Element, kind: str) -> np.ndarray:
    """Node values of the chosen translated-kernel operator applied to f."""
    if kind not in (KIND_MODULE, KIND_DERIV, KIND_ADJOINT):
        raise ValueError(f"unknown kernel kind {kind!r}")
    if f.grid.uniform_h is not None:
        return _apply_uniform(phi, f, kind)
    return _apply_generic(phi, f, kind)


def _apply_uniform(phi: LInfElement, f: L1Element, kind: str) -> np.ndarray:
    grid = f.grid
    n = grid.size - 1
    dtype = np.result_type(phi.samples, f.samples, float)
    j0, j1, ft = weighted_support(f)
    if ft.size == 0:
        return np.zeros(n + 1, dtype=dtype)
    pe = phi_on_index_range(phi, n + j1)
    # np.correlate conjugates its second argument; undo for a bilinear sum.
    ftc = np.conj(ft)
    corr_phi = np.correlate(pe[j0:], ftc, mode="valid")
    if kind == KIND_MODULE:
        return corr_phi.astype(dtype, copy=False)
    idx = np.arange(pe.size, dtype=float)
    idx[0] = 1.0
    u = pe / idx
    u[0] = 0.0
    corr_u = np.correlate(u[j0:], ftc, mode="valid")
    rows = np.arange(n + 1, dtype=float)
    if kind == KIND_ADJOINT:
        return (rows * corr_u).astype(dtype, copy=False)
    out = corr_phi - rows * corr_u
    if j0 == 0:
        out[0] -= ft[0] * pe[0]  # kernel vanishes at t = s = 0
    return out.astype(dtype, copy=False)


def _apply_generic(phi: LInfElement, f: L1Element, kind: str) -> np.ndarray:
    # Non-uniform grids: direct row loop with interpolation, O(N^2).
    grid = f.grid
    t = grid.nodes
    dtype = np.result_type(phi.samples, f.samples, float)
    out = np.zeros(grid.size, dtype=dtype)
    j0, j1, ft = weighted_support(f)
    if ft.size == 0:
        return out
    s = t[j0:j1 + 1]
    for i, ti in enumerate(t):
        vals = phi.eval_at(ti + s)
        if kind == KIND_MODULE:
            out[i] = np.sum(ft * vals)
            continue
        denom = ti + s
        safe = np.where(denom > 0, denom, 1.0)
        num = s if kind == KIND_DERIV else ti
        factor = np.where(denom > 0, num / safe, 0.0)
        out[i] = np.sum(ft * factor * vals)
    return out
