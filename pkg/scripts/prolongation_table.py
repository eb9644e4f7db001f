"""Tabulate Tanaka prolongation dimensions for a list of symplectic representations.

    python3 scripts/prolongation_table.py --max-degree 4 "sl2:sym3" "sp(4)"
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from weakberger import catalog, tanaka


@dataclass
class TableConfig:
    specs: list[str] = field(default_factory=lambda: ["sl2:sym3", "sl2:sym5 in sp(6)", "sp(2)", "sp(4)", "sp6:lambda30"])
    max_degree: int = 6
    field: str = "qi"


def run(cfg: TableConfig) -> list[dict]:
    rows = []
    for spec in cfg.specs:
        entry = catalog.resolve(spec, cfg.field)
        start = time.perf_counter()
        res = tanaka.full_prolongation(tanaka.build_base_grading(entry.rep), cfg.max_degree)
        rows.append(
            {
                "spec": spec,
                "g": res.dims,
                "status": res.status,
                "dim": res.assembled.dim if res.assembled is not None else None,
                "simple": res.simple,
                "seconds": time.perf_counter() - start,
            }
        )
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("specs", nargs="*")
    p.add_argument("--max-degree", type=int, default=TableConfig.max_degree)
    p.add_argument("--field", choices=["q", "qi"], default=TableConfig.field)
    args = p.parse_args()
    cfg = TableConfig(max_degree=args.max_degree, field=args.field)
    if args.specs:
        cfg.specs = args.specs
    print(f"{'k':22s} {'g_1, g_2, ...':28s} {'dim':>5s} {'simple':>7s} {'time':>7s}  status")
    for r in run(cfg):
        dim = "-" if r["dim"] is None else str(r["dim"])
        simple = "-" if r["simple"] is None else str(r["simple"])
        print(f"{r['spec']:22s} {str(r['g']):28s} {dim:>5s} {simple:>7s} {r['seconds']:6.2f}s  {r['status']}")


if __name__ == "__main__":
    main()
