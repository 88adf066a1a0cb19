"""Batch front end.

Subcommands:

* ``verify-derivation``: product-rule residuals on random smooth pairs,
  exit 1 when any residual exceeds the slack budget;
* ``weakstar-report``: occupation-measure condition, range check, and
  (for spike families) the pairing witness, with CSV profiles;
* ``compactness-report``: the compactness decision tree plus net
  stability, point-mass norm profiles, the singular value diagnostic, and
  the applicable non-compactness witness;
* ``reproduce``: run a catalog entry's designated analyzers and compare
  against its expected verdicts, exit 1 on mismatch.

Exit codes: 0 success, 1 verdict or residual failure, 2 usage or
configuration errors.  Identical config and seed produce byte-identical
CSV output.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import analyzers, catalog
from .algebra import slack
from .config import RunConfig, load_config, parse_config
from .derivations import (
    deriv_delta_norm_profile,
    derivation_identity_residual,
    kernel_family,
)
from .errors import ConfigError, DerivlabError, UnknownEntryError
from .report import AnalysisReport, evidence
from .sampling import bump_l1, random_bump_params
from .spaces import (
    Grid,
    LInfElement,
    Tail,
    Weight,
    indicator_l1,
    l1_norm,
    linf_norm,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

PHI_IDS = tuple(e.id for e in catalog.list_entries()) + ("zero",)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, UnknownEntryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DerivlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derivlab",
        description="verification runs for half-line convolution algebra "
                    "derivations")
    sub = parser.add_subparsers(required=True)

    def common(p):
        p.add_argument("--config", metavar="PATH", default=None)
        p.add_argument("--out", metavar="DIR", default=None)
        p.add_argument("--seed", metavar="N", type=int, default=None)
        p.add_argument("--h", metavar="REAL", type=float, default=None)
        p.add_argument("--tmax", metavar="REAL", type=float, default=None)
        p.add_argument("--tolerance", metavar="NAME=VALUE", action="append",
                       default=[])

    p = sub.add_parser("verify-derivation",
                       help="product-rule residuals on random pairs")
    common(p)
    p.add_argument("--phi", metavar="ID|FILE", required=True)
    p.add_argument("--trials", type=int, default=10)
    p.set_defaults(func=cmd_verify_derivation)

    p = sub.add_parser("weakstar-report", help="weak-star continuity checks")
    common(p)
    p.add_argument("--phi", metavar="ID|FILE", required=True)
    p.set_defaults(func=cmd_weakstar_report)

    p = sub.add_parser("compactness-report", help="compactness proxies")
    common(p)
    p.add_argument("--phi", metavar="ID|FILE", required=True)
    p.set_defaults(func=cmd_compactness_report)

    p = sub.add_parser("reproduce",
                       help="check a catalog entry against its expected verdicts")
    common(p)
    p.add_argument("entry", metavar="ENTRY-ID")
    p.set_defaults(func=cmd_reproduce)
    return parser


def _load(args, *, grid_hint=None, weight_hint=None) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    if args.config is None:
        if weight_hint is not None:
            from dataclasses import replace
            cfg = replace(cfg, weight=weight_hint)
        if grid_hint is not None:
            cfg = cfg.with_overrides(h=grid_hint[0], t_max=grid_hint[1])
    overrides = {}
    for item in args.tolerance:
        if "=" not in item:
            raise ConfigError(f"--tolerance needs NAME=VALUE, got {item!r}")
        name, _, value = item.partition("=")
        try:
            overrides[name.strip()] = float(value)
        except ValueError as exc:
            raise ConfigError(f"bad tolerance value in {item!r}") from exc
    return cfg.with_overrides(h=args.h, t_max=args.tmax, seed=args.seed,
                              out_dir=args.out, tolerance_overrides=overrides)


def resolve_phi(spec: str, w: Weight, grid: Grid) -> tuple[str, LInfElement]:
    """A symbol spec is a catalog id, the literal ``zero``, or a file with a
    [phi] section carrying ``id`` plus builder parameters."""
    params = {}
    phi_id = spec
    if os.path.exists(spec) and os.path.isfile(spec):
        import configparser
        parser = configparser.ConfigParser(interpolation=None)
        try:
            parser.read(spec)
        except configparser.Error as exc:
            raise ConfigError(f"malformed phi file {spec}: {exc}") from exc
        if not parser.has_section("phi"):
            raise ConfigError(f"phi file {spec} lacks a [phi] section")
        sec = dict(parser["phi"])
        try:
            phi_id = sec.pop("id")
        except KeyError:
            raise ConfigError(f"phi file {spec} lacks an id") from None
        try:
            params = {k: float(v) for k, v in sec.items()}
        except ValueError as exc:
            raise ConfigError(f"bad phi parameter: {exc}") from exc
    if phi_id == "zero":
        return phi_id, LInfElement(grid, np.zeros(grid.size), w, Tail.zero(),
                                   extension=lambda pts: np.zeros(np.shape(pts)))
    return phi_id, catalog.build(phi_id, w, grid, **params)


def _emit(reports: list[AnalysisReport], cfg: RunConfig, out_name: str):
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    text = "".join(r.to_text() + "\n" for r in reports)
    (out / f"{out_name}.txt").write_text(text)
    for r in reports:
        r.write_csv(out, prefix=f"{out_name}__{r.name}")
    for r in reports:
        print(f"VERDICT: {r.name} = {r.verdict}")


def cmd_verify_derivation(args) -> int:
    cfg = _load(args)
    grid = cfg.make_grid()
    w = cfg.weight
    phi_id, phi = resolve_phi(args.phi, w, grid)
    rng = np.random.default_rng(cfg.seed)
    hi = min(5.0, grid.t_max / 4.0)
    c = cfg.tolerance("slack_c")
    rows = []
    failures = 0
    for trial in range(args.trials):
        fa, fb = random_bump_params(rng, 0.2, hi)
        ga, gb = random_bump_params(rng, 0.2, hi)
        f = bump_l1(grid, fa, fb)
        g = bump_l1(grid, ga, gb)
        residual = derivation_identity_residual(phi, f, g)
        budget = slack(grid.uniform_h or cfg.h, l1_norm(f, w), l1_norm(g, w),
                       max(linf_norm(phi), 1e-300), c=c)
        ok = residual <= budget
        failures += 0 if ok else 1
        rows.append((trial, residual))
        print(f"trial {trial}: residual {residual:.6g} "
              f"{'<=' if ok else '>'} slack {budget:.6g}")
    report = AnalysisReport(
        name="verify_derivation",
        verdict="holds" if failures == 0 else "fails",
        evidence={"residual": evidence([r[0] for r in rows],
                                       [r[1] for r in rows])},
        parameters={"phi": phi_id, "trials": args.trials, "seed": cfg.seed,
                    "h": cfg.h, "t_max": cfg.t_max, "slack_c": c},
        caveats=("residuals measured in the weighted sup norm on the grid",),
    )
    _emit([report], cfg, "verify-derivation")
    return EXIT_OK if failures == 0 else EXIT_FAILED


def cmd_weakstar_report(args) -> int:
    cfg = _load(args)
    grid = cfg.make_grid()
    w = cfg.weight
    phi_id, phi = resolve_phi(args.phi, w, grid)
    tol = cfg.tolerance("tol_decay")
    t_grid = np.arange(1.0, np.floor(grid.t_max))
    reports = [analyzers.weakstar_condition_check(
        phi, [0.5, 0.25, 0.1], t_grid, tol_decay=tol)]
    f_list = [indicator_l1(grid, 0.0, 1.0),
              bump_l1(grid, 1.0, min(3.0, grid.t_max / 2.0))]
    reports.append(analyzers.range_c0_check(phi, f_list, tol_decay=tol))
    if phi_id in ("notwkscts", "omega"):
        a_list = catalog.default_a_list(grid)
        reports.append(analyzers.weakstar_counterexample_check(
            w, a_list, grid, phi=phi, tol=cfg.tolerance("counterexample")))
    _emit(reports, cfg, f"weakstar-{phi_id}")
    return EXIT_OK


def cmd_compactness_report(args) -> int:
    cfg = _load(args)
    grid = cfg.make_grid()
    w = cfg.weight
    phi_id, phi = resolve_phi(args.phi, w, grid)
    reports = [analyzers.compact_verdict(
        phi, w,
        tol_zero=cfg.tolerance("zero_limit"),
        continuity_tol=cfg.tolerance("continuity"),
        cauchy_tol=cfg.tolerance("cauchy_tail"))]

    params = np.arange(0.0, grid.t_max + 0.25, 0.5)
    fam = kernel_family(phi, params)
    _, net_report = analyzers.family_total_boundedness(
        fam, cfg.tolerance("net_eps"))
    reports.append(net_report)

    s_list = [0.25 * 2.0 ** k for k in range(int(np.log2(grid.t_max * 2)))]
    profile = deriv_delta_norm_profile(phi, s_list)
    reports.append(AnalysisReport(
        name="deriv_delta_norm_profile", verdict="inconclusive",
        evidence={"norm": evidence([p.s for p in profile],
                                   [p.norm for p in profile]),
                  "scaled_norm": evidence([p.s for p in profile],
                                          [p.scaled for p in profile])},
        parameters={"phi": phi_id,
                    "tail_attained": sum(p.attained_by_tail for p in profile)},
        caveats=("norm profile is descriptive evidence, not a verdict",),
    ))

    n_svd = 512
    svd_grid = Grid.uniform(grid.t_max / n_svd, grid.t_max)
    reports.append(analyzers.svd_decay(phi.resample(svd_grid), svd_grid))

    if phi_id == "step":
        reports.append(analyzers.noncompact_witness_step(
            phi, t0=1.0, delta=0.5, n_list=[4, 8, 16],
            tol_flat=cfg.tolerance("witness_flat"),
            tol_peak=cfg.tolerance("witness_peak")))
    elif phi_id == "limit-alpha":
        reports.append(analyzers.noncompact_witness_limit(
            phi, alpha=1.0, n_list=[2, 4, 8, 16],
            tol_norm=cfg.tolerance("witness_norm")))
    _emit(reports, cfg, f"compactness-{phi_id}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    entry = catalog.get_entry(args.entry)
    cfg = _load(args, grid_hint=entry.grid_hint, weight_hint=entry.weight_hint)
    grid = cfg.make_grid()
    reports = catalog.run_designated_analyzers(entry, cfg.weight, grid)
    _emit(list(reports.values()), cfg, f"reproduce-{entry.id}")
    mismatches = []
    for name, expected in entry.expected.items():
        got = reports[name].verdict
        status = "ok" if got == expected else "MISMATCH"
        print(f"{entry.id}: {name} expected {expected}, got {got} [{status}]")
        if got != expected:
            mismatches.append(name)
    return EXIT_OK if not mismatches else EXIT_FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
