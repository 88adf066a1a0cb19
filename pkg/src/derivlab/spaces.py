"""Weights, grids, and the three discretized spaces built on them.

A weight is a positive continuous submultiplicative function on the half
line with value 1 at 0.  On a truncated quadrature grid [0, T_max] we
represent three kinds of objects:

* integrable functions with finite weighted L1 norm (``L1Element``),
* dual-side functions with finite weighted sup norm (``LInfElement``),
* measures as atom lists plus an optional density (``MeasureElement``).

Sup norms are grid sups plus a tail contribution from the element's tail
descriptor; every sup-based verdict downstream inherits the "verified on
grid" caveat.  Indicator samples place the midpoint value at jump nodes so
the trapezoid rule integrates them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .errors import (
    DomainError,
    ExtrapolationError,
    GridMismatchError,
    TailError,
)
from .report import (
    FAILS,
    HOLDS,
    AnalysisReport,
    decay_verdict,
    dyadic_window_maxima,
    evidence,
)

# Tail descriptor kinds for LInfElement: what the function does past T_max.
TAIL_ZERO = "zero"                # identically zero beyond the grid
TAIL_PROPORTIONAL = "proportional"  # equals coefficient * omega beyond the grid
TAIL_BOUND = "bound"              # only |phi| <= ||phi|| * omega is claimed

# L1Element tail kinds.
SUPPORT_COMPACT = "compact-support"
SUPPORT_NONE = "none"

_REL_TOL = 1e-12


# ---------------------------------------------------------------------------
# Weights

@dataclass(frozen=True)
class Weight:
    """Submultiplicative weight on the half line.

    kinds: ``constant-one``, ``power`` ((1+t)**alpha), ``exponential``
    (exp(rate*t)), ``gaussian-decay`` (exp(-rate*t**2)), and ``tabulated``
    (linear interpolation, refusing to extrapolate).
    """

    kind: str
    param: float = 0.0
    table_t: np.ndarray | None = field(default=None, repr=False, compare=False)
    table_w: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("constant-one", "power", "exponential",
                             "gaussian-decay", "tabulated"):
            raise DomainError(f"unknown weight kind {self.kind!r}")
        if self.kind == "power" and not self.param > 0:
            raise DomainError("power weight needs exponent > 0")
        if self.kind == "gaussian-decay" and not self.param > 0:
            raise DomainError("gaussian-decay weight needs rate > 0")
        if self.kind == "tabulated":
            t = np.asarray(self.table_t, dtype=float)
            w = np.asarray(self.table_w, dtype=float)
            if t.ndim != 1 or t.shape != w.shape or t.size < 2:
                raise DomainError("tabulated weight needs matching 1-d tables")
            if t[0] != 0.0 or np.any(np.diff(t) <= 0):
                raise DomainError("table abscissae must increase from 0")
            if abs(w[0] - 1.0) > _REL_TOL:
                raise DomainError("weight must equal 1 at t = 0")
            if np.any(w <= 0):
                raise DomainError("weight values must be positive")
            object.__setattr__(self, "table_t", t)
            object.__setattr__(self, "table_w", w)

    @classmethod
    def constant_one(cls) -> "Weight":
        return cls("constant-one")

    @classmethod
    def power(cls, alpha: float) -> "Weight":
        return cls("power", float(alpha))

    @classmethod
    def exponential(cls, rate: float) -> "Weight":
        return cls("exponential", float(rate))

    @classmethod
    def gaussian_decay(cls, rate: float = 1.0) -> "Weight":
        return cls("gaussian-decay", float(rate))

    @classmethod
    def tabulated(cls, t, values) -> "Weight":
        return cls("tabulated", 0.0, np.asarray(t, float), np.asarray(values, float))

    def __call__(self, t):
        """Evaluate the weight; accepts scalars or arrays, t >= 0."""
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 0):
            raise DomainError("weights are defined on t >= 0 only")
        if self.kind == "constant-one":
            out = np.ones_like(arr)
        elif self.kind == "power":
            out = (1.0 + arr) ** self.param
        elif self.kind == "exponential":
            out = np.exp(self.param * arr)
        elif self.kind == "gaussian-decay":
            out = np.exp(-self.param * arr * arr)
        else:
            if np.any(arr > self.table_t[-1] * (1 + 1e-12)):
                raise ExtrapolationError(
                    f"tabulated weight queried beyond t = {self.table_t[-1]}")
            out = np.interp(arr, self.table_t, self.table_w)
        return out if arr.ndim else float(out)


def weight_eval(w: Weight, t) -> float:
    """Function-style accessor for Weight.__call__."""
    return w(t)


def check_submultiplicative(w: Weight, pair_samples: int, *, seed: int = 0,
                            t_range: float | None = None,
                            tol: float = 1e-10) -> AnalysisReport:
    """Sample pairs (t, s) and report the worst ratio w(t+s)/(w(t)w(s)).

    Verdict holds when the maximum ratio stays within 1 + tol.
    """
    if pair_samples < 1:
        raise DomainError("pair_samples must be >= 1")
    if t_range is None:
        if w.kind == "tabulated":
            t_range = w.table_t[-1] / 2
        elif w.kind == "gaussian-decay":
            # keep w(t+s) above the float64 underflow threshold
            t_range = (175.0 / w.param) ** 0.5
        else:
            t_range = 50.0
    rng = np.random.default_rng(seed)
    t = rng.uniform(0.0, t_range, pair_samples)
    s = rng.uniform(0.0, t_range, pair_samples)
    ratio = w(t + s) / (w(t) * w(s))
    worst = int(np.argmax(ratio))
    verdict = HOLDS if ratio[worst] <= 1.0 + tol else FAILS
    return AnalysisReport(
        name="check_submultiplicative",
        verdict=verdict,
        evidence={"ratio": evidence(t + s, ratio)},
        parameters={"kind": w.kind, "pair_samples": pair_samples,
                    "max_ratio": float(ratio[worst]), "tol": tol, "seed": seed},
        caveats=("sampled pairs only",),
    )


def lower_integral_constant(w: Weight, grid: "Grid", *, points_per_unit: int = 256) -> float:
    """min over grid nodes x <= T_max - 1 of (integral of w over [x, x+1]) / w(x).

    The unit-window integrals use a dedicated trapezoid rule so the result
    does not depend on whether x+1 lands on a grid node.
    """
    if grid.t_max < 2.0:
        raise DomainError("grid must extend to T_max >= 2")
    xs = grid.nodes[grid.nodes <= grid.t_max - 1.0 + 1e-12]
    offsets = np.linspace(0.0, 1.0, points_per_unit + 1)
    best = np.inf
    for x in xs:
        wx = float(w(x))
        if wx == 0.0:  # weight underflowed; the window ratio is effectively 0
            return 0.0
        integral = np.trapezoid(np.asarray(w(x + offsets)), offsets)
        best = min(best, integral / wx)
    return float(best)


# ---------------------------------------------------------------------------
# Grids

@dataclass(frozen=True)
class Grid:
    """Quadrature nodes and weights on [0, T_max].

    Nodes increase strictly from 0; the weights integrate the constant 1
    exactly.  ``uniform_h`` is set when the node spacing is constant, which
    enables the fast index-shift paths in the operator modules.
    """

    nodes: np.ndarray
    weights: np.ndarray
    scheme: str = "trapezoid"
    uniform_h: float | None = None

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        if nodes.ndim != 1 or nodes.size < 2:
            raise DomainError("grid needs at least two nodes")
        if nodes[0] != 0.0:
            raise DomainError("grid must start at 0")
        if np.any(np.diff(nodes) <= 0):
            raise DomainError("grid nodes must increase strictly")
        if weights.shape != nodes.shape:
            raise DomainError("one quadrature weight per node")
        total = float(np.sum(weights))
        if abs(total - nodes[-1]) > 1e-12 * max(1.0, nodes[-1]):
            raise DomainError("quadrature weights must sum to T_max")

    @property
    def t_max(self) -> float:
        return float(self.nodes[-1])

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    @classmethod
    def uniform(cls, h: float, t_max: float, *, scheme: str = "trapezoid",
                refine_zero: bool = False, refine_levels: int = 8) -> "Grid":
        """Uniform grid of spacing h, optionally refined geometrically in the
        first cell (the operator kernels vary fastest near 0)."""
        n = round(t_max / h)
        if n < 1 or abs(n * h - t_max) > 1e-9 * max(1.0, t_max):
            raise DomainError("t_max must be an integer multiple of h")
        nodes = np.arange(n + 1, dtype=float) * h
        nodes[-1] = t_max
        if refine_zero:
            extra = h / (2.0 ** np.arange(refine_levels, 0, -1))
            nodes = np.concatenate([[0.0], extra, nodes[1:]])
            return cls(nodes, _trapezoid_weights(nodes), "trapezoid", None)
        if scheme == "trapezoid":
            w = np.full(n + 1, h)
            w[0] = w[-1] = h / 2.0
            return cls(nodes, w, scheme, h)
        if scheme == "simpson":
            if n % 2 != 0:
                raise DomainError("simpson scheme needs an even interval count")
            w = np.full(n + 1, 2.0 * h / 3.0)
            w[1::2] = 4.0 * h / 3.0
            w[0] = w[-1] = h / 3.0
            return cls(nodes, w, scheme, h)
        raise DomainError(f"unknown scheme {scheme!r}")

    def same_as(self, other: "Grid") -> bool:
        return self is other or (
            self.nodes.size == other.nodes.size
            and np.array_equal(self.nodes, other.nodes)
        )

    def index_of(self, t: float) -> int:
        """Index of the node equal to t (within rounding); DomainError if none."""
        i = int(np.searchsorted(self.nodes, t - 1e-9))
        if i >= self.nodes.size or abs(self.nodes[i] - t) > 1e-9 * max(1.0, t):
            raise DomainError(f"{t} is not a grid node")
        return i


def _trapezoid_weights(nodes: np.ndarray) -> np.ndarray:
    w = np.empty_like(nodes)
    w[0] = (nodes[1] - nodes[0]) / 2.0
    w[-1] = (nodes[-1] - nodes[-2]) / 2.0
    w[1:-1] = (nodes[2:] - nodes[:-2]) / 2.0
    return w


def _require_same_grid(a, b):
    if not a.grid.same_as(b.grid):
        raise GridMismatchError("elements live on different grids")


# ---------------------------------------------------------------------------
# Elements

@dataclass(frozen=True)
class L1Element:
    """Grid samples of an integrable function, with a support tag."""

    grid: Grid
    samples: np.ndarray
    tail: str = SUPPORT_COMPACT

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.shape != self.grid.nodes.shape:
            raise DomainError("one sample per grid node")
        if not np.all(np.isfinite(samples)):
            raise DomainError("samples must be finite")
        if self.tail not in (SUPPORT_COMPACT, SUPPORT_NONE):
            raise DomainError(f"unknown L1 tail {self.tail!r}")
        object.__setattr__(self, "samples", samples)

    @property
    def is_compactly_supported(self) -> bool:
        return self.tail == SUPPORT_COMPACT

    def support_end(self) -> float:
        """Last node carrying a nonzero sample (0.0 for the zero function)."""
        nz = np.nonzero(self.samples)[0]
        return float(self.grid.nodes[nz[-1]]) if nz.size else 0.0

    def __add__(self, other: "L1Element") -> "L1Element":
        _require_same_grid(self, other)
        tail = SUPPORT_COMPACT if (
            self.tail == other.tail == SUPPORT_COMPACT) else SUPPORT_NONE
        return L1Element(self.grid, self.samples + other.samples, tail)

    def __sub__(self, other: "L1Element") -> "L1Element":
        return self + (other * (-1.0))

    def __mul__(self, scalar) -> "L1Element":
        return L1Element(self.grid, self.samples * scalar, self.tail)

    __rmul__ = __mul__


@dataclass(frozen=True)
class Tail:
    """Tail descriptor of an LInfElement: behaviour past T_max."""

    kind: str
    coefficient: complex = 0.0

    def __post_init__(self):
        if self.kind not in (TAIL_ZERO, TAIL_PROPORTIONAL, TAIL_BOUND):
            raise DomainError(f"unknown tail kind {self.kind!r}")

    @classmethod
    def zero(cls) -> "Tail":
        return cls(TAIL_ZERO)

    @classmethod
    def proportional(cls, coefficient) -> "Tail":
        return cls(TAIL_PROPORTIONAL, complex(coefficient))

    @classmethod
    def bound(cls) -> "Tail":
        return cls(TAIL_BOUND)


@dataclass(frozen=True)
class LInfElement:
    """Grid samples of a dual-side function with a tail descriptor.

    ``extension`` optionally evaluates the underlying function beyond the
    grid exactly (elements built from closed forms keep their formula); the
    tail descriptor remains the normative classification used by norms and
    membership verdicts.
    """

    grid: Grid
    samples: np.ndarray
    weight: Weight
    tail: Tail = field(default_factory=Tail.bound)
    extension: Callable[[np.ndarray], np.ndarray] | None = field(
        default=None, repr=False, compare=False)

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.shape != self.grid.nodes.shape:
            raise DomainError("one sample per grid node")
        if not np.all(np.isfinite(samples)):
            raise DomainError("samples must be finite")
        # the weight must stay strictly positive on the sampled nodes, or
        # every profile downstream degenerates (think float underflow of a
        # decaying weight on a grid that extends too far)
        if float(self.weight(self.grid.t_max)) <= 0.0:
            raise DomainError("weight underflows to 0 within the grid")
        object.__setattr__(self, "samples", samples)
        if self.tail.kind == TAIL_PROPORTIONAL:
            self._check_tail_consistency()

    def _check_tail_consistency(self):
        # The claimed coefficient must match the last 10% of the profile
        # within 10% relative (plus a small absolute floor for coefficient 0).
        n = self.grid.size
        k = max(2, n // 10)
        t = self.grid.nodes[-k:]
        prof = self.samples[-k:] / self.weight(t)
        alpha = self.tail.coefficient
        dev = np.max(np.abs(prof - alpha))
        if dev > 0.1 * max(abs(alpha), 1e-9):
            raise DomainError(
                "proportional tail coefficient inconsistent with the grid "
                f"profile (deviation {dev:.3g} against coefficient {alpha})")

    @classmethod
    def from_function(cls, grid: Grid, fn: Callable, weight: Weight,
                      tail: Tail | None = None,
                      keep_extension: bool = True) -> "LInfElement":
        samples = np.asarray(fn(grid.nodes))
        ext = fn if keep_extension else None
        return cls(grid, samples, weight, tail or Tail.bound(), ext)

    def eval_at(self, points) -> np.ndarray:
        """Evaluate at arbitrary points: linear interpolation on the grid,
        extension or tail rule beyond it.  A bound-only tail evaluates to 0
        beyond the grid (truncation; callers guard where that matters)."""
        pts = np.atleast_1d(np.asarray(points, dtype=float))
        if np.any(pts < 0):
            raise DomainError("evaluation points must be nonnegative")
        beyond = pts > self.grid.t_max
        if self.extension is not None:
            out = np.asarray(self.extension(pts),
                             dtype=np.result_type(self.samples, float)).copy()
            inside = ~beyond
            out[inside] = self._interp(pts[inside])
            return out
        out = np.zeros(pts.shape, dtype=np.result_type(self.samples, float))
        inside = ~beyond
        out[inside] = self._interp(pts[inside])
        if np.any(beyond) and self.tail.kind == TAIL_PROPORTIONAL:
            out[beyond] = self.tail.coefficient * self.weight(pts[beyond])
        return out

    def _interp(self, pts):
        if np.iscomplexobj(self.samples):
            re = np.interp(pts, self.grid.nodes, self.samples.real)
            im = np.interp(pts, self.grid.nodes, self.samples.imag)
            return re + 1j * im
        return np.interp(pts, self.grid.nodes, self.samples)

    def resample(self, grid: Grid) -> "LInfElement":
        """Re-express the element on another grid (tail rules apply beyond
        the original T_max)."""
        return LInfElement(grid, self.eval_at(grid.nodes), self.weight,
                           self.tail, self.extension)

    def profile(self) -> np.ndarray:
        """|phi| / omega on the grid."""
        return np.abs(self.samples) / self.weight(self.grid.nodes)

    def __add__(self, other: "LInfElement") -> "LInfElement":
        _require_same_grid(self, other)
        if self.tail.kind == other.tail.kind == TAIL_ZERO:
            tail = Tail.zero()
        elif self.tail.kind == other.tail.kind == TAIL_PROPORTIONAL:
            tail = Tail.proportional(self.tail.coefficient + other.tail.coefficient)
        else:
            tail = Tail.bound()
        ext = None
        if self.extension is not None and other.extension is not None:
            mine, theirs = self.extension, other.extension
            ext = lambda pts: np.asarray(mine(pts)) + np.asarray(theirs(pts))
        return LInfElement(self.grid, self.samples + other.samples,
                           self.weight, tail, ext)

    def __sub__(self, other: "LInfElement") -> "LInfElement":
        return self + (other * (-1.0))

    def __mul__(self, scalar) -> "LInfElement":
        tail = self.tail
        if tail.kind == TAIL_PROPORTIONAL:
            tail = Tail.proportional(tail.coefficient * scalar)
        ext = None
        if self.extension is not None:
            mine = self.extension
            ext = lambda pts: np.asarray(mine(pts)) * scalar
        return LInfElement(self.grid, self.samples * scalar, self.weight, tail, ext)

    __rmul__ = __mul__


@dataclass(frozen=True)
class MeasureElement:
    """Atoms (location, complex mass) plus an optional L1 density."""

    atoms: tuple[tuple[float, complex], ...] = ()
    density: L1Element | None = None

    def __post_init__(self):
        atoms = tuple((float(s), complex(c)) for s, c in self.atoms)
        for s, _ in atoms:
            if s < 0:
                raise DomainError("atom locations must be nonnegative")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def point_mass(cls, s: float, mass: complex = 1.0) -> "MeasureElement":
        return cls(atoms=((s, mass),))

    @classmethod
    def from_density(cls, density: L1Element) -> "MeasureElement":
        return cls(atoms=(), density=density)

    def __add__(self, other: "MeasureElement") -> "MeasureElement":
        if self.density is not None and other.density is not None:
            density = self.density + other.density
        else:
            density = self.density or other.density
        return MeasureElement(self.atoms + other.atoms, density)

    def __mul__(self, scalar) -> "MeasureElement":
        atoms = tuple((s, c * scalar) for s, c in self.atoms)
        density = None if self.density is None else self.density * scalar
        return MeasureElement(atoms, density)

    __rmul__ = __mul__


# ---------------------------------------------------------------------------
# Sampling helpers

def indicator_l1(grid: Grid, a: float, b: float, amplitude: complex = 1.0,
                 *, node_tol: float = 1e-9) -> L1Element:
    """Sample amplitude * 1_[a,b] with the midpoint value at jump nodes.

    A node hitting a or b exactly takes amplitude/2 (a = 0 keeps the full
    amplitude; the domain edge is not a two-sided jump).  Node-aligned
    breakpoints make the trapezoid integral of the indicator exact.
    """
    if not 0 <= a < b:
        raise DomainError("need 0 <= a < b")
    t = grid.nodes
    vals = np.zeros(t.shape, dtype=np.result_type(amplitude, float))
    vals[(t > a + node_tol) & (t < b - node_tol)] = amplitude
    at_a = np.abs(t - a) <= node_tol
    at_b = np.abs(t - b) <= node_tol
    vals[at_a] = amplitude if a == 0.0 else amplitude / 2.0
    vals[at_b] = amplitude / 2.0
    return L1Element(grid, vals, SUPPORT_COMPACT)


def indicator_linf(grid: Grid, a: float, b: float, weight: Weight,
                   amplitude: complex = 1.0) -> LInfElement:
    ind = indicator_l1(grid, a, b, amplitude)
    return LInfElement(grid, ind.samples, weight, Tail.zero())


def approx_identity(grid: Grid, n: int) -> L1Element:
    """The unit-mass bump n * 1_[0, 1/n]; needs the grid to resolve 1/n."""
    if n < 1:
        raise DomainError("index must be >= 1")
    if grid.uniform_h is not None and grid.uniform_h > 1.0 / (2 * n):
        raise DomainError(f"grid spacing too coarse to resolve 1/{n}")
    return indicator_l1(grid, 0.0, 1.0 / n, float(n))


# ---------------------------------------------------------------------------
# Norms and pairings

def l1_norm(f: L1Element, w: Weight) -> float:
    """Weighted L1 norm: quadrature of |f| * omega."""
    t = f.grid.nodes
    return float(np.sum(f.grid.weights * np.abs(f.samples) * w(t)))


def linf_norm_parts(phi: LInfElement) -> tuple[float, float]:
    """(grid sup of |phi|/omega, tail contribution from the descriptor)."""
    grid_sup = float(np.max(phi.profile()))
    tail_part = abs(phi.tail.coefficient) if phi.tail.kind == TAIL_PROPORTIONAL else 0.0
    return grid_sup, tail_part


def linf_norm(phi: LInfElement, w: Weight | None = None) -> float:
    """Weighted sup norm: grid sup of |phi|/omega plus the tail term.

    The weight argument is accepted for symmetry with the other norms but
    must agree with the element's own weight.
    """
    if w is not None and w is not phi.weight and w != phi.weight:
        raise DomainError("norm weight differs from the element's weight")
    grid_sup, tail_part = linf_norm_parts(phi)
    return max(grid_sup, tail_part)


def measure_norm(mu: MeasureElement, w: Weight) -> float:
    """Sum of |mass| * omega(location) over atoms plus the density norm."""
    total = sum(abs(c) * w(s) for s, c in mu.atoms)
    if mu.density is not None:
        total += l1_norm(mu.density, w)
    return float(total)


def pairing_l1_linf(f: L1Element, phi: LInfElement) -> complex:
    """Quadrature of f * phi over the grid."""
    _require_same_grid(f, phi)
    val = np.sum(f.grid.weights * f.samples * phi.samples)
    return complex(val)


def pairing_c0_measure(h: LInfElement, mu: MeasureElement) -> complex:
    """Sum of masses times h(location), plus the pairing with the density.

    Atom locations beyond the grid are only admissible for a zero tail
    (they contribute nothing); anything else raises TailError.
    """
    total = 0.0 + 0.0j
    for s, c in mu.atoms:
        if s > h.grid.t_max + 1e-12:
            if h.tail.kind != TAIL_ZERO:
                raise TailError(
                    f"atom at {s} beyond the grid needs a zero-tail function")
            continue
        total += c * complex(h.eval_at(s)[0])
    if mu.density is not None:
        total += pairing_l1_linf(mu.density, h)
    return complex(total)


# ---------------------------------------------------------------------------
# Membership verdicts

def _tail_window(phi: LInfElement) -> float | None:
    """Profile value implied by the tail descriptor, if it asserts one."""
    if phi.tail.kind == TAIL_ZERO:
        return 0.0
    if phi.tail.kind == TAIL_PROPORTIONAL:
        return abs(phi.tail.coefficient)
    return None


def is_l0inf(phi: LInfElement, w: Weight | None = None, *,
             tol_decay: float = 1e-2) -> AnalysisReport:
    """Does |phi|/omega tend to 0 at infinity?

    Grid evidence (dyadic window maxima of the profile) dominates the
    verdict; a zero tail cannot whitewash a non-decaying grid profile, since
    spike families are stored truncated.
    """
    t = phi.grid.nodes
    starts, maxima = dyadic_window_maxima(t, phi.profile())
    verdict = decay_verdict(maxima, tol_decay)
    tail_value = _tail_window(phi)
    caveats = ["grid profile only; tail classified by descriptor"]
    if tail_value is not None and tail_value > tol_decay:
        verdict = FAILS
        caveats.append(f"tail profile sits at {tail_value:.3g}")
    return AnalysisReport(
        name="is_l0inf",
        verdict=verdict,
        evidence={"window_maxima": evidence(starts, maxima)},
        parameters={"tol_decay": tol_decay, "tail": phi.tail.kind},
        caveats=tuple(caveats),
    )


def grid_discontinuity_ratio(phi: LInfElement) -> float:
    """Largest adjacent-sample jump relative to the element's scale.

    Smooth functions give O(h); a genuine jump stays at the jump size no
    matter how fine the grid.
    """
    scale = float(np.max(np.abs(phi.samples)))
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(np.diff(phi.samples)))) / scale


def is_c0_membership(phi: LInfElement, w: Weight | None = None, *,
                     tol_decay: float = 1e-2,
                     continuity_tol: float = 0.25) -> AnalysisReport:
    """Is phi continuous with |phi|/omega vanishing at infinity?

    Adds a grid-level continuity screen (adjacent jumps relative to scale)
    to the decay verdict of :func:`is_l0inf`.
    """
    base = is_l0inf(phi, w, tol_decay=tol_decay)
    jump = grid_discontinuity_ratio(phi)
    verdict = base.verdict
    caveats = list(base.caveats)
    if jump > continuity_tol:
        verdict = FAILS
        caveats.append(f"adjacent-node jump ratio {jump:.3g} flags a discontinuity")
    ev = dict(base.evidence)
    ev["jump_ratio"] = evidence([0.0], [jump])
    return AnalysisReport(
        name="is_c0_membership",
        verdict=verdict,
        evidence=ev,
        parameters={"tol_decay": tol_decay, "continuity_tol": continuity_tol,
                    "tail": phi.tail.kind},
        caveats=tuple(caveats),
    )


def linf_profile_unbounded(phi: LInfElement) -> bool:
    """Grid screen for |phi|/omega growing without bound (the element then
    lies outside the dual space and sup-based claims do not apply)."""
    from .report import windows_growing
    _, maxima = dyadic_window_maxima(phi.grid.nodes, phi.profile())
    return windows_growing(maxima)


def vanishes_at_zero(phi: LInfElement, *, tol: float = 1e-2) -> tuple[bool, np.ndarray]:
    """Grid verdict for "phi(s) -> 0 as s -> 0".

    Uses maxima over shrinking windows [0, 2^-k]; passes on a small last
    window or on a consistent downward trend across the windows.  Returns
    (verdict, window maxima).
    """
    t = phi.grid.nodes
    prof = np.abs(phi.samples)
    h_min = t[1] - t[0]
    ks = []
    size = 1.0
    while size >= 4 * h_min:
        ks.append(size)
        size /= 2.0
    if not ks:
        ks = [1.0]
    maxima = np.array([float(np.max(prof[t <= s])) for s in ks])
    scale = max(maxima[0], 1e-300)
    if maxima[-1] <= tol * scale:
        return True, maxima
    ratios = maxima[1:] / np.maximum(maxima[:-1], 1e-300)
    tail_ratios = ratios[-3:] if ratios.size >= 3 else ratios
    trending = bool(np.all(tail_ratios <= 0.9)) and maxima[-1] <= 0.25 * scale
    return trending, maxima
