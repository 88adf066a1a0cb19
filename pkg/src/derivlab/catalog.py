"""Named symbol families with their expected verdicts.

Six entries cover the behaviours the analyzers are built to reproduce:

==================  =========================================================
id                  behaviour
==================  =========================================================
wkscts2             spikes [n, n+a_n] of height omega with shrinking widths:
                    the weighted profile does not vanish, yet the occupation
                    measure does, so the continuity condition holds
notwkscts           unit-width spikes [a_n, a_n+1] of height omega: the
                    pairing witness fires, weak-star continuity fails
omega               the weight itself as symbol: occupation measure stays at
                    one and the pairing witness fires
omega-minus-one     omega - 1: continuous, vanishing at 0, profile tending
                    to one; the scaled point-mass images settle, giving a
                    compact restriction without a vanishing profile
step                the unit indicator: a drop at 1, so the sharpening-bump
                    witness rules compactness out
limit-alpha         constant alpha (optionally plus a decaying term): norm
                    gaps persist while pairings converge, ruling out
                    compactness in the unweighted case
==================  =========================================================

Infinite spike sums are truncated at the grid end and tagged zero-tail;
verdict windows sit inside [0, T_max - 1], where the truncation is
invisible.  Entry ids are stable strings used by the command line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import analyzers
from .errors import InvalidParamsError, UnknownEntryError
from .report import FAILS, FAILS_WEAK_STAR, HOLDS, HOLDS_FOR_D, NOT_COMPACT
from .spaces import (
    Grid,
    LInfElement,
    Tail,
    Weight,
    indicator_linf,
    is_l0inf,
)


@dataclass(frozen=True)
class CatalogEntry:
    """One reproducible symbol family and what the analyzers should say."""

    id: str
    defaults: Mapping[str, float]
    expected: Mapping[str, str]
    notes: str
    grid_hint: tuple[float, float]          # (h, t_max)
    weight_hint: Weight | None = None


_ENTRIES = (
    CatalogEntry(
        id="wkscts2",
        defaults={"alpha_power": 1.0},
        expected={"is_l0inf": FAILS, "weakstar_condition_check": HOLDS},
        notes="omega-height spikes [n, n + n^-p]: profile maxima stay at 1, "
              "occupation measure decays like n^-p",
        grid_hint=(1.0 / 1024.0, 520.0),
    ),
    CatalogEntry(
        id="notwkscts",
        defaults={"a_start": 1.0, "a_step": 1.0},
        expected={"weakstar_counterexample_check": FAILS_WEAK_STAR},
        notes="unit-width omega-height spikes at a_n: pairing witness "
              "against weak-star continuity",
        grid_hint=(1.0 / 512.0, 52.0),
    ),
    CatalogEntry(
        id="omega",
        defaults={},
        expected={"weakstar_condition_check": FAILS,
                  "weakstar_counterexample_check": FAILS_WEAK_STAR},
        notes="the weight itself: unit profile everywhere",
        grid_hint=(1.0 / 512.0, 52.0),
    ),
    CatalogEntry(
        id="omega-minus-one",
        defaults={},
        expected={"compact_verdict": HOLDS_FOR_D},
        notes="omega - 1: compact restriction although the weighted profile "
              "tends to one",
        grid_hint=(1.0 / 32.0, 200.0),
        weight_hint=Weight.power(2.0),
    ),
    CatalogEntry(
        id="step",
        defaults={"edge": 1.0},
        expected={"compact_verdict": FAILS,
                  "noncompact_witness_step": NOT_COMPACT},
        notes="unit indicator: the drop at the edge defeats compactness",
        grid_hint=(1.0 / 16384.0, 2.0),
    ),
    CatalogEntry(
        id="limit-alpha",
        defaults={"alpha": 1.0, "beta": 0.0},
        expected={"compact_verdict": FAILS,
                  "noncompact_witness_limit": NOT_COMPACT},
        notes="symbol with nonzero limit at infinity (unweighted): "
              "weak-star convergence without norm convergence",
        grid_hint=(1.0 / 128.0, 200.0),
    ),
)

_BY_ID = {e.id: e for e in _ENTRIES}


def list_entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise UnknownEntryError(f"unknown catalog id {entry_id!r}") from None


def build(entry_id: str, w: Weight, grid: Grid, **params) -> LInfElement:
    """Construct the symbol for a catalog entry on the given weight/grid."""
    entry = get_entry(entry_id)
    merged = dict(entry.defaults)
    unknown = set(params) - set(merged)
    if unknown:
        raise InvalidParamsError(f"{entry_id}: unknown params {sorted(unknown)}")
    merged.update(params)
    builder = _BUILDERS[entry_id]
    return builder(w, grid, merged)


def _build_omega(w, grid, params):
    return LInfElement(grid, np.asarray(w(grid.nodes)), w,
                       Tail.proportional(1.0), extension=lambda pts: w(pts))


def _build_omega_minus_one(w, grid, params):
    tail = Tail.zero() if w.kind == "constant-one" else Tail.bound()
    return LInfElement(grid, np.asarray(w(grid.nodes)) - 1.0, w, tail,
                       extension=lambda pts: np.asarray(w(pts)) - 1.0)


def _build_step(w, grid, params):
    edge = float(params["edge"])
    if not 0 < edge < grid.t_max:
        raise InvalidParamsError("step edge must lie inside the grid")
    return indicator_linf(grid, 0.0, edge, w)


def _build_limit_alpha(w, grid, params):
    alpha = complex(params["alpha"])
    beta = complex(params["beta"])
    if alpha == 0:
        raise InvalidParamsError("alpha must be nonzero")
    if w.kind != "constant-one":
        raise InvalidParamsError("limit-alpha is an unweighted family")
    if alpha.imag == 0 and beta.imag == 0:
        alpha, beta = alpha.real, beta.real

    def fn(pts):
        return alpha + beta * np.exp(-np.asarray(pts, dtype=float))

    return LInfElement(grid, fn(grid.nodes), w, Tail.proportional(alpha),
                       extension=fn)


def _build_wkscts2(w, grid, params):
    p = float(params["alpha_power"])
    if p <= 0:
        raise InvalidParamsError("spike widths must shrink: alpha_power > 0")
    intervals = []
    n = 1
    while n + 1.0 <= grid.t_max + 1e-12:
        width = float(n) ** (-p)
        if not width <= 1.0:
            raise InvalidParamsError("spike widths must stay within 1")
        intervals.append((float(n), float(n) + width))
        n += 1
    if not intervals:
        raise InvalidParamsError("grid too short for any spike")
    return analyzers.build_spike_family(w, grid, intervals)


def default_a_list(grid: Grid, a_start: float = 1.0, a_step: float = 1.0) -> list[float]:
    """Spike starts a_n = a_start + n*a_step while [a_n, a_n+1] fits."""
    if a_start < 1.0 or a_step < 1.0:
        raise InvalidParamsError("need a_start >= 1 and steps >= 1")
    out = []
    a = a_start
    while a + 1.0 <= grid.t_max + 1e-12:
        out.append(a)
        a += a_step
    return out


def _build_notwkscts(w, grid, params):
    a_list = default_a_list(grid, float(params["a_start"]), float(params["a_step"]))
    if not a_list:
        raise InvalidParamsError("grid too short for any spike")
    return analyzers.build_spike_family(w, grid, [(a, a + 1.0) for a in a_list])


_BUILDERS = {
    "omega": _build_omega,
    "omega-minus-one": _build_omega_minus_one,
    "step": _build_step,
    "limit-alpha": _build_limit_alpha,
    "wkscts2": _build_wkscts2,
    "notwkscts": _build_notwkscts,
}


def run_designated_analyzers(entry: CatalogEntry, w: Weight, grid: Grid,
                             **params) -> dict[str, "analyzers.AnalysisReport"]:
    """Run exactly the analyzers the entry carries expectations for."""
    phi = build(entry.id, w, grid, **params)
    reports = {}
    for name in entry.expected:
        if name == "is_l0inf":
            reports[name] = is_l0inf(phi)
        elif name == "weakstar_condition_check":
            t_grid = np.arange(1.0, np.floor(grid.t_max))
            reports[name] = analyzers.weakstar_condition_check(
                phi, [0.5, 0.25, 0.1], t_grid)
        elif name == "weakstar_counterexample_check":
            merged = dict(entry.defaults)
            merged.update(params)
            a_list = default_a_list(grid, merged.get("a_start", 1.0),
                                    merged.get("a_step", 1.0))
            reports[name] = analyzers.weakstar_counterexample_check(
                w, a_list, grid, phi=phi)
        elif name == "compact_verdict":
            reports[name] = analyzers.compact_verdict(phi, w)
        elif name == "noncompact_witness_step":
            edge = dict(entry.defaults, **params).get("edge", 1.0)
            reports[name] = analyzers.noncompact_witness_step(
                phi, t0=float(edge), delta=0.5, n_list=[4, 8, 16])
        elif name == "noncompact_witness_limit":
            alpha = dict(entry.defaults, **params).get("alpha", 1.0)
            reports[name] = analyzers.noncompact_witness_limit(
                phi, alpha, [2, 4, 8, 16])
        else:  # pragma: no cover - table and runner kept in sync
            raise UnknownEntryError(f"no runner for analyzer {name!r}")
    return reports
