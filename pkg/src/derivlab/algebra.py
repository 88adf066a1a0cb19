"""Convolution product, dual-module action, and the approximate identity.

The product is the half-line convolution (f*g)(t) = integral of
f(s) g(t-s) over [0, t]; the dual action of g on phi is
(g.phi)(t) = integral of g(s) phi(t+s) over the half line, which is the
adjoint relation <f, g.phi> = <f*g, phi>.  Convolving with a measure sums
translates of g over the atoms plus the convolution with the density.

Everything is direct quadrature: trapezoid end corrections for the
convolution (whatever the grid scheme, the sub-interval [0, t] is handled
with trapezoid weights), and the shared translated-kernel engine for the
module action.
"""

from __future__ import annotations

import numpy as np

from ._apply import KIND_MODULE, apply_translated
from .errors import DomainError, TailError
from .report import HOLDS, INCONCLUSIVE, AnalysisReport, evidence
from .spaces import (
    SUPPORT_COMPACT,
    SUPPORT_NONE,
    TAIL_BOUND,
    TAIL_ZERO,
    Grid,
    L1Element,
    LInfElement,
    MeasureElement,
    Tail,
    Weight,
    approx_identity,
    l1_norm,
    linf_norm,
    pairing_c0_measure,
)
from .spaces import _require_same_grid  # shared grid guard


def slack(h: float, *norms: float, c: float = 10.0) -> float:
    """Quadrature slack budget: c * h * product of the input norms.

    Algebraic identities hold exactly in the continuum; discretization is
    the only error source, so identity tests compare against this budget
    rather than a fixed epsilon.
    """
    budget = c * h
    for n in norms:
        budget *= n
    return budget


def convolve_l1(f: L1Element, g: L1Element) -> L1Element:
    """Half-line convolution evaluated at every node.

    The result is tagged compactly supported only when both inputs are and
    their supports add up inside the grid; mass pushed past T_max cannot be
    represented and downgrades the tag.
    """
    _require_same_grid(f, g)
    grid = f.grid
    if grid.uniform_h is not None:
        samples = _convolve_uniform(f.samples, g.samples, grid.uniform_h)
    else:
        samples = _convolve_generic(f, g)
    compact = (
        f.tail == SUPPORT_COMPACT
        and g.tail == SUPPORT_COMPACT
        and f.support_end() + g.support_end() <= grid.t_max + 1e-12
    )
    return L1Element(grid, samples, SUPPORT_COMPACT if compact else SUPPORT_NONE)


def _convolve_uniform(a: np.ndarray, b: np.ndarray, h: float) -> np.ndarray:
    n = a.size - 1
    dtype = np.result_type(a, b, float)
    out = np.zeros(n + 1, dtype=dtype)
    nza, nzb = np.nonzero(a)[0], np.nonzero(b)[0]
    if nza.size and nzb.size:
        i0, i1 = int(nza[0]), int(nza[-1])
        k0, k1 = int(nzb[0]), int(nzb[-1])
        full = np.convolve(a[i0:i1 + 1], b[k0:k1 + 1])
        lo = i0 + k0
        hi = min(n, i1 + k1)
        if lo <= n:
            out[lo:hi + 1] = full[:hi - lo + 1]
    out *= h
    # Trapezoid end corrections on [0, t]: half weight at s = 0 and s = t.
    out -= (h / 2.0) * (a[0] * b + a * b[0])
    return out


def _convolve_generic(f: L1Element, g: L1Element) -> np.ndarray:
    t = f.grid.nodes
    dtype = np.result_type(f.samples, g.samples, float)
    out = np.zeros(t.size, dtype=dtype)
    for i in range(1, t.size):
        sub = t[:i + 1]
        w = np.empty(i + 1)
        w[0] = (sub[1] - sub[0]) / 2.0
        w[-1] = (sub[-1] - sub[-2]) / 2.0
        if i > 1:
            w[1:-1] = (sub[2:] - sub[:-2]) / 2.0
        out[i] = np.sum(w * f.samples[:i + 1] * _interp_zero(g, t[i] - sub))
    return out


def _interp_zero(g: L1Element, pts: np.ndarray) -> np.ndarray:
    """g at arbitrary points, zero outside [0, T_max]."""
    nodes = g.grid.nodes
    if np.iscomplexobj(g.samples):
        re = np.interp(pts, nodes, g.samples.real, left=0.0, right=0.0)
        im = np.interp(pts, nodes, g.samples.imag, left=0.0, right=0.0)
        return re + 1j * im
    return np.interp(pts, nodes, g.samples, left=0.0, right=0.0)


def module_action(g: L1Element, phi: LInfElement) -> LInfElement:
    """The dual-module action (g.phi)(t) = quadrature of g(s) phi(t+s).

    phi must be evaluable past the grid: exactly for a zero or proportional
    tail or an attached extension; a bound-only tail admits only compactly
    supported g (values past the grid are then truncated to zero, which
    only disturbs nodes within the support length of the right edge).
    """
    _require_same_grid(g, phi)
    if (phi.tail.kind == TAIL_BOUND and phi.extension is None
            and not g.is_compactly_supported):
        raise TailError(
            "bound-only tail cannot be integrated against a function "
            "without compact support")
    vals = apply_translated(phi, g, KIND_MODULE)
    tail = Tail.zero() if phi.tail.kind == TAIL_ZERO else Tail.bound()
    return LInfElement(g.grid, vals, phi.weight, tail)


def convolve_measure(g: L1Element, mu: MeasureElement) -> L1Element:
    """g convolved with a measure: translates over the atoms plus the
    convolution with the density part."""
    grid = g.grid
    out = np.zeros(grid.size, dtype=np.result_type(g.samples, complex))
    for s, c in mu.atoms:
        if s > grid.t_max + 1e-12:
            raise TailError(f"atom at {s} lies beyond the grid")
        out += c * _interp_zero(g, grid.nodes - s)
    tail = g.tail
    if mu.density is not None:
        conv = convolve_l1(g, mu.density)
        out = out + conv.samples
        if conv.tail == SUPPORT_NONE:
            tail = SUPPORT_NONE
    if not np.iscomplexobj(g.samples) and np.allclose(out.imag, 0.0):
        out = out.real
    return L1Element(grid, out, tail)


def check_bai_convergence(h: LInfElement, mu: MeasureElement,
                          n_list) -> AnalysisReport:
    """Convergence of the approximate identity e_n = n 1_[0,1/n] against h.

    Reports the norm residuals ||e_n.h - h|| and the pairing residuals
    |<e_n.h, mu> - <h, mu>| over n, each with a strict-decrease verdict.
    """
    n_list = sorted(int(n) for n in n_list)
    if not n_list:
        raise DomainError("n_list must be nonempty")
    base_pair = pairing_c0_measure(h, mu)
    norms, pairs = [], []
    for n in n_list:
        en = approx_identity(h.grid, n)
        enh = module_action(en, h)
        norms.append(linf_norm(enh - h))
        pairs.append(abs(pairing_c0_measure(enh, mu) - base_pair))
    norms = np.asarray(norms)
    pairs = np.asarray(pairs)
    scale = max(linf_norm(h), 1.0)
    norm_ok = bool(np.all(np.diff(norms) < 0)) or bool(np.max(norms) <= 1e-14 * scale)
    pair_ok = bool(np.all(np.diff(pairs) < 0)) or bool(np.max(pairs) <= 1e-14 * scale)
    verdict = HOLDS if (norm_ok and pair_ok) else INCONCLUSIVE
    return AnalysisReport(
        name="check_bai_convergence",
        verdict=verdict,
        evidence={
            "norm_residual": evidence(n_list, norms),
            "pairing_residual": evidence(n_list, pairs),
        },
        parameters={"norm_decreasing": norm_ok, "pairing_decreasing": pair_ok},
        caveats=("residuals measured on the grid",)
        + (() if verdict == HOLDS else ("no strict decrease observed",)),
    )
