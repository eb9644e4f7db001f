"""Survey P(h), R(h) and their splits across catalog representations.

Prints one row per representation; irreducible orthogonal entries also get the
multiplicity of V in V (x) h.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from weakberger import catalog, curvature
from weakberger.liealg import PreconditionError


@dataclass
class SurveyConfig:
    specs: list[str] = field(
        default_factory=lambda: [
            "so(3)",
            "so(4)",
            "so(5)",
            "tensor(so(3),so(3))",
            "sl2xk(sl2:sym3)",
            "sl2xk(sl2:sym5)",
            "sl2xk(sp(4))",
        ]
    )
    field: str = "qi"
    multiplicity: bool = True


def survey_one(spec: str, cfg: SurveyConfig) -> dict:
    r = catalog.resolve(spec, cfg.field).rep
    start = time.perf_counter()
    ps, cs = curvature.pspace(r), curvature.rspace(r)
    row = {
        "spec": spec,
        "n": r.dim,
        "P": ps.dim,
        "P0,P1": curvature.decompose_p(ps).dims,
        "R": cs.dim,
        "R0,R1,R'": curvature.decompose_r(cs).dims,
        "weak_berger": curvature.spanned_by_images(ps),
        "mult": None,
    }
    if cfg.multiplicity:
        try:
            row["mult"] = curvature.standard_multiplicity(r)
        except PreconditionError:
            pass
    row["seconds"] = time.perf_counter() - start
    return row


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("specs", nargs="*")
    p.add_argument("--no-multiplicity", action="store_true")
    args = p.parse_args()
    cfg = SurveyConfig(multiplicity=not args.no_multiplicity)
    if args.specs:
        cfg.specs = args.specs
    cols = ["spec", "n", "P", "P0,P1", "R", "R0,R1,R'", "weak_berger", "mult"]
    print("  ".join(f"{c:>20s}" if c == "spec" else f"{c:>12s}" for c in cols) + "        time")
    for spec in cfg.specs:
        row = survey_one(spec, cfg)
        cells = [f"{str(row[c]):>20s}" if c == "spec" else f"{str(row[c]):>12s}" for c in cols]
        print("  ".join(cells) + f"  {row['seconds']:9.2f}s")


if __name__ == "__main__":
    main()
