"""Command-line front end.

Subcommands:

    tfu run <config> --out <dir> [--no-timestamp] [--scenario <name>]
    tfu export-stft --f <spec> --g <spec> --out <file> [--count N] [--step S]
    tfu bounds --mode <variant> --p <p> --eps <e> [--d <d>]

Configs are INI files: one section per scenario, flat keys (see the bundled
"paper-suite" config for the full vocabulary). `run` writes one JSON report
per scenario plus CSV tables for sweeps, and exits 0 only if every enabled
assertion passed (2 on assertion failure, 1 on configuration or runtime
errors; partial results are still written on assertion failure).

Function specs are colon-separated: "gaussian:a=2", "gaussian:a=1:amp=1",
"hermite:n=2", optionally with "z=" (translation) and "w=" (modulation).
Gaussian amplitude defaults to unit L2 norm.

Scenario runs are independent and may execute concurrently; TFU_THREADS
caps the worker count. Report files are written atomically, and with
--no-timestamp two runs of the same config are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from tfu.core import DEFAULT_LAYOUT, SignalLayout, TFArray, TFGrid, discrete_fourier
from tfu.identity import build_auxiliary, fundamental_identity_defect, rotation_invariance_defect
from tfu.reference import (
    AnalyticFunction,
    fourier_closed_form,
    gaussian,
    gaussian_stft_field,
    hermite,
    sample,
    unit_gaussian,
)
from tfu.stft import compute_stft, isometry_defect
from tfu.support import SupportMode, SupportVariant, bound_sweep, lieb_ratio, lower_bound, sorted_cell_masses
from tfu.weights import WeightFamily, WeightSpec, decay_fit, growth_scan


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# function / mode / weight mini-grammars


def parse_function_spec(spec: str) -> AnalyticFunction:
    parts = [p for p in spec.strip().split(":") if p]
    if not parts:
        raise ConfigError("empty function spec")
    kind, params = parts[0].lower(), {}
    for tok in parts[1:]:
        if "=" not in tok:
            raise ConfigError(f"malformed function parameter {tok!r} in {spec!r}")
        key, val = tok.split("=", 1)
        params[key.strip()] = val.strip()
    z = float(params.pop("z", 0.0))
    w = float(params.pop("w", 0.0))
    if kind == "gaussian":
        a = float(params.pop("a", 1.0))
        amp = params.pop("amp", "unit")
        if params:
            raise ConfigError(f"unknown gaussian parameter(s) {sorted(params)} in {spec!r}")
        if amp == "unit":
            return unit_gaussian(a, z=z, w=w)
        return gaussian(a, amplitude=complex(amp), z=z, w=w)
    if kind == "hermite":
        n = int(params.pop("n", 0))
        if params:
            raise ConfigError(f"unknown hermite parameter(s) {sorted(params)} in {spec!r}")
        return hermite(n, z=z, w=w)
    raise ConfigError(f"unknown function kind {kind!r} in {spec!r}")


_VARIANTS = {
    "l1_fraction": SupportVariant.L1_FRACTION,
    "lp_vs_l1p": SupportVariant.LP_VS_L1P,
    "lp_vs_energy": SupportVariant.LP_VS_ENERGY,
}

_FAMILIES = {
    "radial_half": WeightFamily.RADIAL_HALF,
    "radial_full": WeightFamily.RADIAL_FULL,
    "hyperbolic": WeightFamily.HYPERBOLIC,
    "pair_hyperbolic": WeightFamily.PAIR_HYPERBOLIC,
    "bonami": WeightFamily.BONAMI_DENOMINATOR,
    "demange": WeightFamily.DEMANGE_DENOMINATOR,
}


def _parse_tokens(spec: str, what: str) -> tuple[str, dict[str, str]]:
    toks = spec.split()
    if not toks:
        raise ConfigError(f"empty {what} spec")
    params = {}
    for tok in toks[1:]:
        if "=" not in tok:
            raise ConfigError(f"malformed {what} parameter {tok!r} in {spec!r}")
        key, val = tok.split("=", 1)
        params[key] = val
    return toks[0].lower(), params


@dataclass
class WeightScanSpec:
    """One growth-scan request: weight, field source, expectations."""

    weight: WeightSpec
    source: str  # stft | closed | pair | pair_exact
    expect: str  # divergent | convergent
    radii: tuple[float, ...]
    slope: float | None = None
    slope_tol: float = 0.0

    @property
    def label(self) -> str:
        fam = {v: k for k, v in _FAMILIES.items()}[self.weight.family]
        return f"{fam} p={self.weight.p:g} N={self.weight.N:g} field={self.source}"


def parse_weight_scan(spec: str, default_radii: tuple[float, ...]) -> WeightScanSpec:
    name, params = _parse_tokens(spec, "weight scan")
    if name not in _FAMILIES:
        raise ConfigError(f"unknown weight family {name!r} in {spec!r}")
    weight = WeightSpec(
        _FAMILIES[name], p=float(params.pop("p", 1.0)), N=float(params.pop("N", 0.0))
    )
    source = params.pop("field", "stft")
    if source not in ("stft", "closed", "pair", "pair_exact"):
        raise ConfigError(f"unknown field source {source!r} in {spec!r}")
    expect = params.pop("expect", "divergent")
    if expect not in ("divergent", "convergent"):
        raise ConfigError(f"unknown verdict expectation {expect!r} in {spec!r}")
    radii = default_radii
    if "radii" in params:
        radii = tuple(float(v) for v in params.pop("radii").split(":"))
    slope = float(params["slope"]) if "slope" in params else None
    params.pop("slope", None)
    slope_tol = float(params.pop("slope_tol", 0.0))
    if params:
        raise ConfigError(f"unknown weight scan parameter(s) {sorted(params)} in {spec!r}")
    return WeightScanSpec(weight, source, expect, radii, slope, slope_tol)


def parse_support_mode(spec: str) -> tuple[SupportMode, str]:
    name, params = _parse_tokens(spec, "support mode")
    if name not in _VARIANTS:
        raise ConfigError(f"unknown support variant {name!r} in {spec!r}")
    mode = SupportMode(
        _VARIANTS[name], p=float(params.pop("p", 2.0)), epsilon=float(params.pop("eps", 0.0))
    )
    expect = params.pop("expect", "holds")
    if expect not in ("holds", "unsatisfiable"):
        raise ConfigError(f"unknown support expectation {expect!r} in {spec!r}")
    if params:
        raise ConfigError(f"unknown support parameter(s) {sorted(params)} in {spec!r}")
    return mode, expect


# ---------------------------------------------------------------------------
# config loading

_BASE_KEYS = {"f", "g", "checks", "count", "step", "radii"}
_CHECK_KEYS: dict[str, set[str]] = {
    "isometry": {"isometry_tol"},
    "closed_form": {"closed_form_tol"},
    "identity": {"identity_tuples", "identity_tol"},
    "rotation": {"rotation_z", "rotation_tol"},
    "lieb": {"lieb_p", "lieb_dir_tol", "lieb_equality_tol"},
    "weights": {"weights"},
    "support": {"support"},
    "decay": {"decay_tail", "decay_product_tol"},
    "greedy_oracle": {"oracle_fields", "oracle_size", "oracle_max_subset", "oracle_seed"},
}
_ALL_KEYS = _BASE_KEYS | set().union(*_CHECK_KEYS.values())


@dataclass
class Scenario:
    name: str
    f_spec: str
    g_spec: str
    layout: SignalLayout
    checks: list[str]
    options: dict[str, str] = field(default_factory=dict)


def _split_list(raw: str) -> list[str]:
    return [tok.strip() for tok in raw.replace(",", " ").split() if tok.strip()]


def load_config(path: Path) -> list[Scenario]:
    import configparser

    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            parser.read_file(fh)
    except (configparser.Error, OSError) as exc:
        raise ConfigError(f"cannot parse config {path}: {exc}") from exc
    scenarios = []
    for section in parser.sections():
        opts = dict(parser.items(section))
        for key in opts:
            if key not in _ALL_KEYS:
                raise ConfigError(f"unknown key '{key}' in [{section}]")
        checks = _split_list(opts.get("checks", ""))
        for check in checks:
            if check not in _CHECK_KEYS:
                raise ConfigError(f"unknown check '{check}' in [{section}]")
        if not checks:
            raise ConfigError(f"scenario [{section}] enables no checks")
        layout = SignalLayout(
            count=int(opts.get("count", DEFAULT_LAYOUT.count)),
            step=float(opts.get("step", DEFAULT_LAYOUT.step)),
        )
        scenarios.append(
            Scenario(
                name=section,
                f_spec=opts.get("f", "gaussian:a=1"),
                g_spec=opts.get("g", "gaussian:a=1"),
                layout=layout,
                checks=checks,
                options=opts,
            )
        )
    if not scenarios:
        raise ConfigError(f"config {path} defines no scenarios")
    return scenarios


# ---------------------------------------------------------------------------
# scenario execution


def _is_unit_gaussian_pair(scn: Scenario) -> bool:
    def is_unit(spec: str) -> bool:
        fn = parse_function_spec(spec)
        return (
            fn.kind == "gaussian"
            and fn.width == 1.0
            and fn.translation == 0.0
            and fn.modulation == 0.0
            and abs(fn.amplitude - 2**0.25) < 1e-15
        )

    return is_unit(scn.f_spec) and is_unit(scn.g_spec)


@dataclass
class ScenarioResult:
    name: str
    passed: bool
    report: dict
    csv_tables: dict[str, tuple[list[str], list[list[str]]]]  # suffix -> (header, rows)


def _fmt(x: float) -> str:
    return "%.17g" % x


def run_scenario(scn: Scenario) -> ScenarioResult:
    f_fn = parse_function_spec(scn.f_spec)
    g_fn = parse_function_spec(scn.g_spec)
    f = sample(f_fn, scn.layout)
    g = sample(g_fn, scn.layout)
    grid = TFGrid.from_layout(scn.layout)
    opts = scn.options
    default_radii = tuple(float(v) for v in _split_list(opts.get("radii", "1 2 3 4 5 6")))
    checks: dict[str, dict] = {}
    tables: dict[str, tuple[list[str], list[list[str]]]] = {}

    for check in scn.checks:
        if check == "isometry":
            tol = float(opts.get("isometry_tol", 1e-8))
            defect = isometry_defect(f, g, grid)
            checks[check] = {"defect": defect, "tolerance": tol, "passed": defect < tol}

        elif check == "closed_form":
            if not _is_unit_gaussian_pair(scn):
                raise ConfigError(
                    f"closed_form check in [{scn.name}] requires the unit gaussian pair"
                )
            tol = float(opts.get("closed_form_tol", 1e-8))
            v = compute_stft(f, g, grid)
            dev = float(np.max(np.abs(v.values - gaussian_stft_field(grid).values)))
            checks[check] = {"max_abs_deviation": dev, "tolerance": tol, "passed": dev < tol}

        elif check == "identity":
            tol = float(opts.get("identity_tol", 1e-6))
            raw = opts.get("identity_tuples", "")
            tuples = []
            if raw:
                for group in raw.split(";"):
                    specs = [tok.strip() for tok in group.split(",") if tok.strip()]
                    if len(specs) != 4:
                        raise ConfigError(
                            f"identity tuple needs 4 function specs, got {len(specs)} in [{scn.name}]"
                        )
                    tuples.append(specs)
            else:
                tuples.append([scn.f_spec, scn.f_spec, scn.g_spec, scn.g_spec])
            results = []
            for specs in tuples:
                sigs = [sample(parse_function_spec(sp), scn.layout) for sp in specs]
                defect = fundamental_identity_defect(*sigs, grid)
                results.append({"functions": specs, "defect": defect, "passed": defect < tol})
            checks[check] = {
                "tolerance": tol,
                "tuples": results,
                "passed": all(r["passed"] for r in results),
            }

        elif check == "rotation":
            tol = float(opts.get("rotation_tol", 1e-6))
            raw = opts.get("rotation_z", "0 0")
            results = []
            for group in raw.split(";"):
                vals = [float(tok) for tok in group.split()]
                if len(vals) != 2:
                    raise ConfigError(f"rotation_z entries need 2 numbers in [{scn.name}]")
                aux = build_auxiliary(f, g, grid, vals[0], vals[1])
                defect = rotation_invariance_defect(aux)
                results.append({"z": vals[0], "zeta": vals[1], "defect": defect, "passed": defect < tol})
            checks[check] = {
                "tolerance": tol,
                "shifts": results,
                "passed": all(r["passed"] for r in results),
            }

        elif check == "lieb":
            ps = [float(v) for v in _split_list(opts.get("lieb_p", "2"))]
            dir_tol = float(opts.get("lieb_dir_tol", 1e-6))
            eq_tol = opts.get("lieb_equality_tol")
            v = compute_stft(f, g, grid)
            fn, gn = f.l2_norm(), g.l2_norm()
            entries, rows = [], []
            for p in ps:
                ratio = lieb_ratio(v, p, fn, gn)
                if p > 2:
                    ok = ratio <= 1 + dir_tol
                elif p < 2:
                    ok = ratio >= 1 - dir_tol
                else:
                    ok = abs(ratio - 1) <= dir_tol
                if eq_tol is not None:
                    ok = ok and abs(ratio - 1) <= float(eq_tol)
                entries.append({"p": p, "ratio": ratio, "passed": ok})
                rows.append([_fmt(p), _fmt(ratio)])
            tables["lieb"] = (["p", "ratio"], rows)
            checks[check] = {
                "direction_tolerance": dir_tol,
                "ratios": entries,
                "passed": all(e["passed"] for e in entries),
            }

        elif check == "weights":
            raw = opts.get("weights", "")
            if not raw.strip():
                raise ConfigError(f"weights check in [{scn.name}] needs a 'weights' key")
            scans = [parse_weight_scan(s, default_radii) for s in raw.split(";") if s.strip()]
            entries = []
            rows = []
            v_num = None
            fam_inv = {v_: k for k, v_ in _FAMILIES.items()}
            for ws in scans:
                if ws.source == "stft":
                    if v_num is None:
                        v_num = compute_stft(f, g, grid)
                    target: object = v_num
                elif ws.source == "closed":
                    if not _is_unit_gaussian_pair(scn):
                        raise ConfigError(
                            f"field=closed in [{scn.name}] requires the unit gaussian pair"
                        )
                    target = gaussian_stft_field(grid)
                elif ws.source == "pair":
                    target = f
                else:  # pair_exact
                    fhat = sample(fourier_closed_form(f_fn), scn.layout.dual())
                    target = (f, fhat)
                report = growth_scan(target, ws.weight, ws.radii)
                ok = report.verdict == ws.expect
                if ws.slope is not None:
                    ok = ok and abs(report.fitted_exponent - ws.slope) <= ws.slope_tol
                entries.append(
                    {
                        "scan": ws.label,
                        "expected": ws.expect,
                        "verdict": report.verdict,
                        "fitted_exponent": report.fitted_exponent,
                        "note": report.note,
                        "passed": ok,
                    }
                )
                fam = fam_inv[ws.weight.family]
                for r, m in zip(report.radii, report.masses):
                    rows.append(
                        [fam, _fmt(ws.weight.p), _fmt(ws.weight.N), ws.source, _fmt(r), _fmt(m)]
                    )
            tables["growth"] = (["family", "p", "N", "field", "R", "mass"], rows)
            checks[check] = {"scans": entries, "passed": all(e["passed"] for e in entries)}

        elif check == "support":
            raw = opts.get("support", "")
            if not raw.strip():
                raise ConfigError(f"support check in [{scn.name}] needs a 'support' key")
            parsed = [parse_support_mode(s) for s in raw.split(";") if s.strip()]
            reports = bound_sweep(f, g, grid, [m for m, _ in parsed])
            entries, rows = [], []
            var_inv = {v_: k for k, v_ in _VARIANTS.items()}
            for (mode, expect), rep in zip(parsed, reports):
                if expect == "unsatisfiable":
                    ok = not rep.satisfiable
                else:
                    ok = rep.satisfiable and bool(rep.bound_holds)
                entries.append(
                    {
                        "variant": var_inv[mode.variant],
                        "p": mode.p,
                        "epsilon": mode.epsilon,
                        "satisfiable": rep.satisfiable,
                        "measured_area": rep.measured_area,
                        "lower_bound": rep.lower_bound,
                        "cells": rep.cells,
                        "note": rep.note,
                        "expected": expect,
                        "passed": ok,
                    }
                )
                rows.append(
                    [
                        var_inv[mode.variant],
                        _fmt(mode.p),
                        _fmt(mode.epsilon),
                        str(rep.satisfiable),
                        str(rep.cells),
                        "" if rep.measured_area is None else _fmt(rep.measured_area),
                        _fmt(rep.lower_bound),
                        "" if rep.bound_holds is None else str(rep.bound_holds),
                        rep.note,
                    ]
                )
            tables["support"] = (
                [
                    "variant",
                    "p",
                    "epsilon",
                    "satisfiable",
                    "cells",
                    "measured_area",
                    "lower_bound",
                    "bound_holds",
                    "note",
                ],
                rows,
            )
            checks[check] = {"modes": entries, "passed": all(e["passed"] for e in entries)}

        elif check == "decay":
            tail = float(opts.get("decay_tail", 0.25))
            tol = float(opts.get("decay_product_tol", 1e-2))
            a_time = decay_fit(f, tail)
            a_freq = decay_fit(discrete_fourier(f), tail)
            product = a_time * a_freq
            checks[check] = {
                "fit_time": a_time,
                "fit_frequency": a_freq,
                "product": product,
                "tolerance": tol,
                "passed": abs(product - 1.0) <= tol,
            }

        elif check == "greedy_oracle":
            n_fields = int(opts.get("oracle_fields", 20))
            size = int(opts.get("oracle_size", 8))
            kmax = int(opts.get("oracle_max_subset", 3))
            seed = int(opts.get("oracle_seed", 20260809))
            ok = _greedy_matches_bruteforce(n_fields, size, kmax, seed)
            checks[check] = {
                "fields": n_fields,
                "size": size,
                "max_subset": kmax,
                "seed": seed,
                "passed": ok,
            }

    passed = all(entry["passed"] for entry in checks.values())
    report = {"name": scn.name, "passed": passed, "checks": checks}
    return ScenarioResult(name=scn.name, passed=passed, report=report, csv_tables=tables)


def _greedy_matches_bruteforce(n_fields: int, size: int, kmax: int, seed: int) -> bool:
    """Greedy prefix mass vs exhaustive max over subsets, exact comparison.

    Both sides sum cell values in the same canonical order (descending
    value, row-major tie-break), so equality is bitwise.
    """
    rng = np.random.default_rng(seed)
    grid = TFGrid(x_step=1.0, xi_step=1.0, x_count=size, xi_count=size)
    for _ in range(n_fields):
        arr = TFArray(grid=grid, values=rng.random((size, size)).astype(complex))
        _, masses = sorted_cell_masses(arr, p=1.0)
        vals = list(masses)
        for k in range(1, kmax + 1):
            greedy = 0.0
            for x in vals[:k]:
                greedy += x
            best = -math.inf
            for combo in itertools.combinations(range(len(vals)), k):
                s = 0.0
                for i in combo:  # combo is increasing, i.e. canonical order
                    s += vals[i]
                if s > best:
                    best = s
            if best != greedy:
                return False
    return True


# ---------------------------------------------------------------------------
# output plumbing


def _atomic_write(path: Path, data: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)
    os.replace(tmp, path)


def _write_json(path: Path, obj: dict) -> None:
    _atomic_write(path, json.dumps(obj, indent=2) + "\n")


def _write_csv(path: Path, header: list[str], rows: list[list[str]]) -> None:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _atomic_write(path, buf.getvalue())


def export_tfarray(v: TFArray, path: str | Path) -> None:
    """CSV dump: header x,xi,re,im,abs; row-major; 17 significant digits."""
    x = v.grid.x_nodes()
    xi = v.grid.xi_nodes()
    lines = ["x,xi,re,im,abs"]
    vals = v.values
    for j in range(v.grid.x_count):
        for k in range(v.grid.xi_count):
            z = vals[j, k]
            lines.append(
                f"{x[j]:.17g},{xi[k]:.17g},{z.real:.17g},{z.imag:.17g},{abs(z):.17g}"
            )
    try:
        _atomic_write(Path(path), "\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def import_tfarray(path: str | Path) -> TFArray:
    """Rebuild a TFArray from an export_tfarray file (bit-exact round trip)."""
    data = np.loadtxt(path, delimiter=",", skiprows=1, usecols=(0, 1, 2, 3))
    x = np.unique(data[:, 0])
    xi = np.unique(data[:, 1])
    x_step = float(x[1] - x[0])
    xi_step = float(xi[1] - xi[0])
    grid = TFGrid(x_step=x_step, xi_step=xi_step, x_count=x.size, xi_count=xi.size)
    values = (data[:, 2] + 1j * data[:, 3]).reshape(x.size, xi.size)
    return TFArray(grid=grid, values=values)


# ---------------------------------------------------------------------------
# subcommands


def _resolve_config(arg: str) -> Path:
    path = Path(arg)
    if path.exists():
        return path
    if arg == "paper-suite":
        from importlib.resources import files

        return Path(str(files("tfu").joinpath("configs/paper_suite.ini")))
    raise ConfigError(f"config not found: {arg}")


def cmd_run(args: argparse.Namespace) -> int:
    config = _resolve_config(args.config)
    scenarios = load_config(config)
    if args.scenario is not None:
        scenarios = [s for s in scenarios if s.name == args.scenario]
        if not scenarios:
            raise ConfigError(f"scenario {args.scenario!r} not found in {config}")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    workers = int(os.environ.get("TFU_THREADS", "0")) or min(4, len(scenarios))
    workers = max(1, min(workers, len(scenarios)))
    errors: list[str] = []
    results: dict[str, ScenarioResult] = {}

    def work(scn: Scenario) -> tuple[str, ScenarioResult | None, str | None]:
        try:
            return scn.name, run_scenario(scn), None
        except (ConfigError, ValueError) as exc:
            return scn.name, None, str(exc)

    if workers == 1:
        outcomes = [work(s) for s in scenarios]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(work, scenarios))

    for name, result, error in outcomes:
        if error is not None:
            errors.append(f"[{name}] {error}")
            continue
        results[name] = result
        report = dict(result.report)
        if not args.no_timestamp:
            report["timestamp"] = datetime.now(timezone.utc).isoformat()
        _write_json(out_dir / f"{name}.json", report)
        for suffix, (header, rows) in result.csv_tables.items():
            _write_csv(out_dir / f"{name}__{suffix}.csv", header, rows)

    summary = {
        "config": config.name,
        "scenarios": [
            {"name": s.name, "passed": results[s.name].passed}
            for s in scenarios
            if s.name in results
        ],
        "errors": errors,
        "passed": not errors and all(r.passed for r in results.values()),
    }
    if not args.no_timestamp:
        summary["timestamp"] = datetime.now(timezone.utc).isoformat()
    _write_json(out_dir / "summary.json", summary)

    for s in scenarios:
        if s.name in results:
            status = "pass" if results[s.name].passed else "FAIL"
            print(f"{status}  {s.name}")
    for err in errors:
        print(f"error: {err}", file=sys.stderr)
    if errors:
        return 1
    return 0 if summary["passed"] else 2


def cmd_export_stft(args: argparse.Namespace) -> int:
    layout = SignalLayout(count=args.count, step=args.step)
    f = sample(parse_function_spec(args.f), layout)
    g = sample(parse_function_spec(args.g), layout)
    v = compute_stft(f, g, TFGrid.from_layout(layout))
    export_tfarray(v, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.mode not in _VARIANTS:
        raise ConfigError(
            f"unknown support variant {args.mode!r} (choose from {sorted(_VARIANTS)})"
        )
    mode = SupportMode(_VARIANTS[args.mode], p=args.p, epsilon=args.eps)
    print(repr(lower_bound(mode, d=args.d)))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 on usage errors, not 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tfu", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run scenarios from a config file")
    p_run.add_argument("config", help="config path, or the bundled name 'paper-suite'")
    p_run.add_argument("--out", required=True, help="output directory for reports")
    p_run.add_argument("--no-timestamp", action="store_true", help="omit timestamps from reports")
    p_run.add_argument("--scenario", default=None, help="run a single scenario by name")
    p_run.set_defaults(func=cmd_run)

    p_exp = sub.add_parser("export-stft", help="export an STFT field as CSV")
    p_exp.add_argument("--f", required=True, help="signal function spec")
    p_exp.add_argument("--g", required=True, help="window function spec")
    p_exp.add_argument("--out", required=True, help="output CSV path")
    p_exp.add_argument("--count", type=int, default=DEFAULT_LAYOUT.count)
    p_exp.add_argument("--step", type=float, default=DEFAULT_LAYOUT.step)
    p_exp.set_defaults(func=cmd_export_stft)

    p_bnd = sub.add_parser("bounds", help="evaluate a closed-form support bound")
    p_bnd.add_argument("--mode", required=True, help="|".join(sorted(_VARIANTS)))
    p_bnd.add_argument("--p", type=float, required=True)
    p_bnd.add_argument("--eps", type=float, default=0.0)
    p_bnd.add_argument("--d", type=int, default=1)
    p_bnd.set_defaults(func=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
