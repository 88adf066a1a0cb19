"""Structured verdicts with numeric evidence.

Every analyzer returns an :class:`AnalysisReport`: a verdict string, named
evidence sequences (pairs of parameter/value columns), the parameters the
run used, and caveat strings.  Sup-based verdicts are grid verdicts and say
so in a caveat; a report never claims more than the samples support.

Reports serialize to a line-oriented text format (one ``VERDICT:`` line per
analyzer) and to CSV, one evidence sequence per file with header
``parameter,value``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import numpy as np

# Verdict vocabulary.  "holds"/"fails" answer the question the analyzer
# poses; compactness verdicts distinguish which operator the conclusion
# covers (the extension to measures, or only the algebra operator).
HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"
NOT_COMPACT = "not-compact"
HOLDS_FOR_D = "holds-for-D"
HOLDS_FOR_DBAR = "holds-for-Dbar"
FAILS_WEAK_STAR = "fails-weak-star"

_DECIDED = {HOLDS, FAILS, NOT_COMPACT, HOLDS_FOR_D, HOLDS_FOR_DBAR, FAILS_WEAK_STAR}
_ALL_VERDICTS = _DECIDED | {INCONCLUSIVE}


@dataclass(frozen=True)
class AnalysisReport:
    """Verdict plus the numbers that justify it.

    evidence maps a sequence name to an (n, 2) float array whose columns are
    (parameter, value).  A decided verdict must come with at least one
    evidence sequence; an inconclusive one must carry a caveat.
    """

    name: str
    verdict: str
    evidence: Mapping[str, np.ndarray] = field(default_factory=dict)
    parameters: Mapping[str, object] = field(default_factory=dict)
    caveats: tuple[str, ...] = ()

    def __post_init__(self):
        if self.verdict not in _ALL_VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict in _DECIDED and not self.evidence:
            raise ValueError("decided verdict requires at least one evidence sequence")
        if self.verdict == INCONCLUSIVE and not self.caveats:
            raise ValueError("inconclusive verdict requires a caveat")
        for key, seq in self.evidence.items():
            arr = np.asarray(seq)
            if arr.ndim != 2 or arr.shape[1] != 2:
                raise ValueError(f"evidence {key!r} must be an (n, 2) array")

    def series(self, key: str) -> tuple[np.ndarray, np.ndarray]:
        arr = np.asarray(self.evidence[key])
        return arr[:, 0], arr[:, 1]

    def to_text(self) -> str:
        lines = [f"ANALYZER: {self.name}", f"VERDICT: {self.verdict}"]
        for key in sorted(self.parameters):
            lines.append(f"PARAM {key} = {_fmt(self.parameters[key])}")
        for cav in self.caveats:
            lines.append(f"CAVEAT {cav}")
        for key in sorted(self.evidence):
            p, v = self.series(key)
            if len(v) == 0:
                lines.append(f"EVIDENCE {key}: empty")
                continue
            lines.append(
                f"EVIDENCE {key}: n={len(v)}"
                f" first={_fmt(v[0])} last={_fmt(v[-1])} max={_fmt(np.max(v))}"
            )
        return "\n".join(lines) + "\n"

    def write_csv(self, out_dir: str | Path, prefix: str | None = None) -> list[Path]:
        """Write one CSV per evidence sequence; returns the paths written."""
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        prefix = prefix if prefix is not None else self.name
        written = []
        for key in sorted(self.evidence):
            p, v = self.series(key)
            path = out / f"{_slug(prefix)}__{_slug(key)}.csv"
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["parameter", "value"])
                for pk, vk in zip(p, v):
                    writer.writerow([_fmt(pk), _fmt(vk)])
            written.append(path)
        return written


def evidence(params, values) -> np.ndarray:
    """Pack parameter/value columns into the (n, 2) evidence layout."""
    p = np.asarray(params, dtype=float).ravel()
    v = np.asarray(values, dtype=float).ravel()
    if p.shape != v.shape:
        raise ValueError("parameter and value columns must have equal length")
    return np.column_stack([p, v])


def _fmt(x) -> str:
    if isinstance(x, (bool, str)):
        return str(x)
    if isinstance(x, (tuple, list)):
        return ",".join(_fmt(v) for v in x)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _slug(name: str) -> str:
    return "".join(c if (c.isalnum() or c in "-_.") else "-" for c in name)


# ---------------------------------------------------------------------------
# Dyadic-window utilities shared by the "vanishes at infinity" style checks.

def dyadic_window_maxima(t: np.ndarray, values: np.ndarray, t_min: float = 1.0):
    """Max of ``values`` over windows [2^k, 2^{k+1}] of the ``t`` axis.

    The final window is truncated at t[-1].  Returns (window_starts, maxima).
    Profiles on the half line routinely spike and recover, so windowed maxima
    rather than raw tail values drive the decay verdicts.
    """
    t = np.asarray(t, dtype=float)
    values = np.asarray(values, dtype=float)
    if t.ndim != 1 or t.shape != values.shape:
        raise ValueError("t and values must be 1-d arrays of equal length")
    starts, maxima = [], []
    lo = float(t_min)
    t_end = float(t[-1])
    while lo < t_end:
        hi = min(2.0 * lo, t_end)
        mask = (t >= lo) & (t <= hi)
        if mask.any():
            starts.append(lo)
            maxima.append(float(np.max(values[mask])))
        lo *= 2.0
    return np.asarray(starts), np.asarray(maxima)


def decay_verdict(window_maxima: np.ndarray, tol: float) -> str:
    """Grid verdict for "profile tends to 0 at infinity".

    holds when the last window sits below tol; fails when it does not and no
    substantial decay is visible (last window within a factor 2 of the peak);
    inconclusive for a profile that decays but has not crossed tol yet.
    """
    m = np.asarray(window_maxima, dtype=float)
    if m.size == 0:
        return HOLDS
    last = m[-1]
    if last <= tol:
        return HOLDS
    if last >= 0.5 * np.max(m):
        return FAILS
    return INCONCLUSIVE


def windows_growing(window_maxima: np.ndarray, factor: float = 4.0) -> bool:
    """True when windowed maxima grow monotonically by at least ``factor``
    overall; used to flag profiles that are unbounded rather than decaying."""
    m = np.asarray(window_maxima, dtype=float)
    if m.size < 3:
        return False
    increasing = bool(np.all(np.diff(m) >= -1e-12 * np.max(m)))
    return increasing and m[-1] >= factor * max(m[0], 1e-300)
