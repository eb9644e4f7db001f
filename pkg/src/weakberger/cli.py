"""Command-line front end.

Exit codes: 0 all expectations met, 1 an expectation failed, 2 unknown
scenario or unresolvable rep-spec, 3 error during the computation.
Set ``WEAKBERGER_REPORT_DIR`` to also write every report as a JSON file there.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog, curvature, symspace, tanaka
from .catalog import CatalogError
from .exactlin import format_scalar
from .liealg import from_document
from .scenarios import ScenarioError, load_registry, run_scenario

EXIT_OK, EXIT_MISMATCH, EXIT_UNKNOWN, EXIT_ERROR = 0, 1, 2, 3
REPORT_DIR_ENV = "WEAKBERGER_REPORT_DIR"
SCHEMA_VERSION = 1


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=str) + "\n"


def _write_report(name: str, report: dict) -> None:
    target = os.environ.get(REPORT_DIR_ENV)
    if target:
        path = Path(target)
        path.mkdir(parents=True, exist_ok=True)
        safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in name)
        (path / f"{safe}.json").write_text(_dumps(report))


def _parse_params(items: list[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise ScenarioError(f"parameter {item!r} is not of the form key=value")
        k, v = item.split("=", 1)
        out[k.strip().replace("-", "_")] = v.strip()
    return out


def _run_one(name: str, overrides: dict) -> tuple[str, dict | None, str | None]:
    registry = load_registry()
    try:
        report = run_scenario(registry[name], overrides)
    except Exception as exc:  # reported as exit status 3
        return name, None, f"{type(exc).__name__}: {exc}"
    return name, report, None


def _text_report(report: dict) -> str:
    lines = [f"{report['scenario']}: {'PASS' if report['passed'] else 'FAIL'}  ({report['description']})"]
    for c in report["checks"]:
        mark = "ok " if c["ok"] else "BAD"
        lines.append(f"  [{mark}] {c['key']}: expected {c['expected']!r}, computed {c['computed']!r} [{c['provenance']}]")
    return "\n".join(lines)


def cmd_list(args) -> int:
    registry = load_registry()
    if args.json:
        sys.stdout.write(
            _dumps(
                {
                    name: {"criterion": sc.criterion, "description": sc.description, "params": sc.params}
                    for name, sc in registry.items()
                }
            )
        )
    else:
        for name, sc in registry.items():
            crit = f"#{sc.criterion}" if sc.criterion else "  -"
            print(f"{name:24s} {crit:>4s}  {sc.description}")
    return EXIT_OK


def cmd_run(args) -> int:
    registry = load_registry()
    names = sorted(registry) if args.all else [args.scenario]
    if not args.all and args.scenario is None:
        print("run needs a scenario name or --all", file=sys.stderr)
        return EXIT_UNKNOWN
    for n in names:
        if n not in registry:
            print(f"unknown scenario {n!r}; try 'weakberger list'", file=sys.stderr)
            return EXIT_UNKNOWN
    try:
        overrides = _parse_params(args.params)
    except ScenarioError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNKNOWN
    for flag in ("seed", "max_degree", "field"):
        val = getattr(args, flag)
        if val is not None:
            overrides[flag] = val
    if args.parallel and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            results = list(pool.map(_run_one, names, [overrides] * len(names)))
    else:
        results = [_run_one(n, overrides) for n in names]
    results.sort(key=lambda r: r[0])
    status = EXIT_OK
    merged = {}
    for name, report, error in results:
        if error is not None:
            report = {"scenario": name, "error": error, "passed": False}
            status = EXIT_ERROR
        elif not report["passed"] and status == EXIT_OK:
            status = EXIT_MISMATCH
        report["schema_version"] = SCHEMA_VERSION
        merged[name] = report
        _write_report(name, report)
        if not args.json:
            print(_text_report(report) if error is None else f"{name}: ERROR {error}")
    if args.json:
        sys.stdout.write(_dumps(merged if args.all else merged[names[0]]))
    return status


def _load_rep(spec: str, field: str):
    path = Path(spec)
    if spec.endswith(".json") and path.is_file():
        _, reps = from_document(path.read_text())
        if not reps:
            raise CatalogError(f"{spec} contains no representation")
        return reps[0].as_field(field), path.stem
    entry = catalog.resolve(spec, field)
    return entry.rep, entry.name


def _compute(sub: str, rep, name: str, args) -> dict:
    report: dict = {"command": sub, "rep": name, "field": rep.field.value}
    if sub == "pspace":
        report.update(curvature.space_report(curvature.pspace(rep), args.emit_basis))
    elif sub == "rspace":
        report.update(curvature.space_report(curvature.rspace(rep), args.emit_basis))
    elif sub == "rnabla":
        cd = curvature.rnabla_space(rep)
        report.update({"dim": cd.dim, "rspace_dim": cd.rspace.dim, "ambient_dim": cd.space.ambient})
        if args.emit_basis:
            report["basis"] = [[format_scalar(x) for x in v] for v in cd.basis]
    elif sub == "prolong":
        res = tanaka.full_prolongation(tanaka.build_base_grading(rep), args.max_degree or 6)
        report.update(tanaka.prolongation_report(res))
        if args.emit_basis:
            report["g_bases"] = [[[format_scalar(x) for x in v] for v in c.basis] for c in res.components]
    elif sub == "symmetric-pair":
        cs = curvature.rspace(rep)
        R1 = curvature.decompose_r(cs).R1
        if R1.dim == 0:
            raise ValueError(f"{name} has no invariant curvature tensor")
        pair = symspace.build_symmetric_pair(rep, R1.basis[0])
        report.update(pair.report())
    elif sub == "multiplicity":
        report["multiplicity"] = curvature.standard_multiplicity(rep)
    return report


def cmd_compute(args) -> int:
    try:
        rep, name = _load_rep(args.rep_spec, args.field or "qi")
    except (CatalogError, ValueError, OSError) as exc:
        print(f"cannot resolve {args.rep_spec!r}: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    try:
        report = _compute(args.sub, rep, name, args)
    except Exception as exc:
        print(f"computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report["schema_version"] = SCHEMA_VERSION
    _write_report(f"{args.sub}-{name}", report)
    if args.json:
        sys.stdout.write(_dumps(report))
    else:
        for key in sorted(report):
            if key not in ("basis", "g_bases"):
                print(f"{key}: {report[key]}")
        for key in ("basis", "g_bases"):
            if key in report:
                print(f"{key}: {json.dumps(report[key])}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakberger", description="Exact curvature spaces and Tanaka prolongations.")
    subs = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--field", choices=["q", "qi"], default=None)
    common.add_argument("--max-degree", type=int, default=None)

    ls = subs.add_parser("list", parents=[common], help="list registered scenarios")
    ls.set_defaults(func=cmd_list)

    run = subs.add_parser("run", parents=[common], help="run a registered scenario")
    run.add_argument("scenario", nargs="?")
    run.add_argument("params", nargs="*", help="parameter overrides key=value (lists separated by ';')")
    run.add_argument("--all", action="store_true", help="run every scenario")
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--parallel", type=int, nargs="?", const=os.cpu_count() or 2, default=0, metavar="N")
    run.set_defaults(func=cmd_run)

    comp = subs.add_parser("compute", parents=[common], help="compute one space for a rep-spec")
    comp.add_argument("sub", choices=["pspace", "rspace", "rnabla", "prolong", "symmetric-pair", "multiplicity"])
    comp.add_argument("rep_spec", help='catalog rep-spec such as "sl2xk(sl2:sym3)" or a representation JSON file')
    comp.add_argument("--emit-basis", action="store_true")
    comp.set_defaults(func=cmd_compute)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
