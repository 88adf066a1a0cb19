"""Run configuration: flat key=value text with section headers.

A config carries the weight spec, the grid spec, the RNG seed, the output
directory, and tolerance overrides.  Parsing a config and writing it back
in canonical form round-trips to identical text, which the tests pin down;
reports stay byte-reproducible because nothing here depends on runtime
state.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, field, replace

from .errors import ConfigError
from .spaces import Grid, Weight

# Single source for every named tolerance the analyzers accept.
DEFAULT_TOLERANCES: dict[str, float] = {
    "slack_c": 10.0,        # quadrature slack constant in slack(h)
    "tol_decay": 1e-2,      # dyadic-window decay threshold
    "tol_submult": 1e-10,   # allowed submultiplicativity violation
    "counterexample": 1e-3,  # relative slack on the pairing witness bound
    "witness_flat": 1e-3,   # flat-zone ceiling in the step witness
    "witness_peak": 0.05,   # peak-zone shortfall in the step witness
    "witness_norm": 0.1,    # norm-gap persistence in the limit witness
    "cauchy_tail": 0.1,     # Cauchy threshold for scaled point-mass images
    "continuity": 0.25,     # adjacent-node jump ratio flagging a jump
    "zero_limit": 1e-2,     # vanishing-at-zero window threshold
    "net_eps": 0.05,        # epsilon for the covering nets
}

_WEIGHT_KINDS = ("constant-one", "power", "exponential", "gaussian-decay",
                 "tabulated")


@dataclass(frozen=True)
class RunConfig:
    weight: Weight = field(default_factory=Weight.constant_one)
    h: float = 1.0 / 256.0
    t_max: float = 40.0
    refine_zero: bool = False
    scheme: str = "trapezoid"
    seed: int = 7
    out_dir: str = "out"
    tolerances: tuple[tuple[str, float], ...] = field(
        default_factory=lambda: tuple(sorted(DEFAULT_TOLERANCES.items())))

    def tolerance(self, name: str) -> float:
        for key, value in self.tolerances:
            if key == name:
                return value
        raise ConfigError(f"unknown tolerance {name!r}")

    def with_overrides(self, *, h=None, t_max=None, seed=None, out_dir=None,
                       tolerance_overrides=None) -> "RunConfig":
        cfg = self
        if h is not None:
            cfg = replace(cfg, h=float(h))
        if t_max is not None:
            cfg = replace(cfg, t_max=float(t_max))
        if seed is not None:
            cfg = replace(cfg, seed=int(seed))
        if out_dir is not None:
            cfg = replace(cfg, out_dir=str(out_dir))
        if tolerance_overrides:
            table = dict(cfg.tolerances)
            for key, value in tolerance_overrides.items():
                if key not in table:
                    raise ConfigError(f"unknown tolerance {key!r}")
                table[key] = float(value)
            cfg = replace(cfg, tolerances=tuple(sorted(table.items())))
        return cfg

    def make_grid(self) -> Grid:
        return Grid.uniform(self.h, self.t_max, scheme=self.scheme,
                            refine_zero=self.refine_zero)

    def canonical_text(self) -> str:
        lines = ["[weight]", f"kind = {self.weight.kind}"]
        if self.weight.kind == "power":
            lines.append(f"alpha = {_fmt(self.weight.param)}")
        elif self.weight.kind in ("exponential", "gaussian-decay"):
            lines.append(f"rate = {_fmt(self.weight.param)}")
        elif self.weight.kind == "tabulated":
            lines.append("nodes = " + ",".join(_fmt(v) for v in self.weight.table_t))
            lines.append("values = " + ",".join(_fmt(v) for v in self.weight.table_w))
        lines += [
            "",
            "[grid]",
            f"h = {_fmt(self.h)}",
            f"t_max = {_fmt(self.t_max)}",
            f"refine_zero = {str(self.refine_zero).lower()}",
            f"scheme = {self.scheme}",
            "",
            "[run]",
            f"seed = {self.seed}",
            f"out = {self.out_dir}",
            "",
            "[tolerances]",
        ]
        lines += [f"{k} = {_fmt(v)}" for k, v in self.tolerances]
        return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def parse_config(text: str) -> RunConfig:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc
    cfg = RunConfig()

    if parser.has_section("weight"):
        cfg = replace(cfg, weight=_parse_weight(parser["weight"]))
    if parser.has_section("grid"):
        sec = parser["grid"]
        cfg = replace(
            cfg,
            h=_get_float(sec, "h", cfg.h),
            t_max=_get_float(sec, "t_max", cfg.t_max),
            refine_zero=_get_bool(sec, "refine_zero", cfg.refine_zero),
            scheme=sec.get("scheme", cfg.scheme).strip(),
        )
        if cfg.scheme not in ("trapezoid", "simpson"):
            raise ConfigError(f"unknown scheme {cfg.scheme!r}")
    if parser.has_section("run"):
        sec = parser["run"]
        try:
            cfg = replace(cfg, seed=int(sec.get("seed", cfg.seed)))
        except ValueError as exc:
            raise ConfigError(f"bad seed: {exc}") from exc
        cfg = replace(cfg, out_dir=sec.get("out", cfg.out_dir).strip())
    if parser.has_section("tolerances"):
        overrides = {}
        for key in parser["tolerances"]:
            if key not in DEFAULT_TOLERANCES:
                raise ConfigError(f"unknown tolerance {key!r}")
            overrides[key] = _get_float(parser["tolerances"], key, None)
        cfg = cfg.with_overrides(tolerance_overrides=overrides)

    known = {"weight", "grid", "run", "tolerances", "phi"}
    for section in parser.sections():
        if section not in known:
            raise ConfigError(f"unknown section [{section}]")
    return cfg


def load_config(path) -> RunConfig:
    try:
        with open(path) as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc


def _parse_weight(sec) -> Weight:
    kind = sec.get("kind", "constant-one").strip()
    if kind not in _WEIGHT_KINDS:
        raise ConfigError(f"unknown weight kind {kind!r}")
    try:
        if kind == "constant-one":
            return Weight.constant_one()
        if kind == "power":
            return Weight.power(float(sec["alpha"]))
        if kind == "exponential":
            return Weight.exponential(float(sec["rate"]))
        if kind == "gaussian-decay":
            return Weight.gaussian_decay(float(sec["rate"]))
        nodes = [float(v) for v in sec["nodes"].split(",")]
        values = [float(v) for v in sec["values"].split(",")]
        return Weight.tabulated(nodes, values)
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad weight parameters: {exc}") from exc


def _get_float(sec, key, default):
    raw = sec.get(key, None)
    if raw is None:
        if default is None:
            raise ConfigError(f"missing value for {key!r}")
        return default
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key!r}: {raw!r}") from exc


def _get_bool(sec, key, default):
    raw = sec.get(key, None)
    if raw is None:
        return default
    val = raw.strip().lower()
    if val in ("true", "1", "yes", "on"):
        return True
    if val in ("false", "0", "no", "off"):
        return False
    raise ConfigError(f"bad boolean for {key!r}: {raw!r}")
