"""Runner functions behind the scenario registry.

Each runner takes keyword parameters and returns a flat JSON-ready dict of
computed values; the registry (``data/scenarios.json``) says which values are
expected and where each expectation comes from.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import catalog, curvature, symspace, tanaka
from .exactlin import Subspace
from .liealg import hom_space

__all__ = ["Scenario", "load_registry", "RUNNERS", "run_scenario", "ScenarioError"]


class ScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class Expectation:
    key: str
    expected: object
    provenance: str


@dataclass(frozen=True)
class Scenario:
    name: str
    runner: str
    description: str
    params: dict
    expectations: tuple[Expectation, ...] = field(default_factory=tuple)
    criterion: int | None = None


def load_registry() -> dict[str, Scenario]:
    text = resources.files("weakberger").joinpath("data/scenarios.json").read_text()
    out = {}
    for rec in json.loads(text)["scenarios"]:
        exps = tuple(Expectation(e["key"], e["expected"], e["provenance"]) for e in rec["expect"])
        out[rec["name"]] = Scenario(
            rec["name"], rec["runner"], rec["description"], dict(rec.get("params", {})), exps, rec.get("criterion")
        )
    return dict(sorted(out.items()))


def _entry(spec: str, fld: str = "qi"):
    return catalog.resolve(spec, fld)


def _rng(seed: int) -> random.Random:
    return random.Random(seed)


def run_tanaka(k: str, max_degree: int = 6, field: str = "qi", m: int | None = None, **_) -> dict:
    entry = _entry(k, field)
    if m is not None and entry.rep.dim != 2 * m:
        raise ScenarioError(f"{k} acts on C^{entry.rep.dim}, not C^{2 * m}")
    base = tanaka.build_base_grading(entry.rep)
    res = tanaka.full_prolongation(base, max_degree)
    pro = res.extra["prolongation"]
    g1 = res.components[0]
    out = {
        "base_dims": list(base.dims.values()),
        "g_dims": res.dims,
        "g1": g1.dim,
        "terminated": res.terminated,
        "status": res.status,
        "assembled_dim": res.assembled.dim if res.assembled is not None else None,
        "simple": res.simple,
        "killing_graded": res.killing_graded,
        "grading_element": res.grading_element_ok,
        "g1_alternative_equal": tanaka.g1_alternative(base) == g1,
    }
    if g1.dim:
        out["hom_V_g1"] = hom_space(entry.rep, tanaka.g1_module(pro, entry.rep)).dim
    return out


def run_proposition(k: str, field: str = "qi", **_) -> dict:
    entry = _entry(k, field)
    h = catalog.sl2_tensor_symplectic(entry).rep
    ps = curvature.pspace(h)
    pro = tanaka.Prolongation(tanaka.build_base_grading(entry.rep))
    g1 = tanaka.prolong_step(pro, 1)
    images, roundtrip = [], True
    for v in ps.basis:
        u1, u2 = tanaka.pspace_to_g1_pair(h, entry.rep, v, pro)
        roundtrip &= tanaka.g1_pair_to_pspace(h, entry.rep, u1, u2) == tuple(v)
        images.append(tuple(u1) + tuple(u2))
    rank = Subspace(2 * pro.ambient(1), images, h.field).dim
    return {
        "dim_p": ps.dim,
        "dim_g1": g1.dim,
        "two_dim_g1": 2 * g1.dim,
        "iso_rank": rank,
        "isomorphism": rank == ps.dim == 2 * g1.dim and roundtrip,
        "weak_berger": curvature.spanned_by_images(ps),
    }


def run_pspace(rep: str, field: str = "qi", **_) -> dict:
    ps = curvature.pspace(_entry(rep, field).rep)
    split = curvature.decompose_p(ps)
    return {"dim": ps.dim, "P0": split.P0.dim, "P1": split.p1_dim, "weak_berger": curvature.spanned_by_images(ps)}


def run_pspace_pair(kind: str, n1: int, n2: int, field: str = "qi", **_) -> dict:
    build = catalog.so_pair_tensor if kind == "so" else catalog.sp_pair_tensor
    r = build(n1, n2, field).rep
    ps = curvature.pspace(r)
    return {"dim": ps.dim, "n": r.dim, "dim_equals_n": ps.dim == r.dim}


def run_rspace(rep: str, field: str = "qi", **_) -> dict:
    r = _entry(rep, field).rep
    cs = curvature.rspace(r)
    out = {"dim": cs.dim, "berger": curvature.spanned_by_images(cs)}
    if r.form is not None:
        R0, R1, rest = curvature.decompose_r(cs).dims
        out.update({"R0": R0, "R1": R1, "Rprime": rest})
    return out


def run_rnabla(rep: str, field: str = "qi", **_) -> dict:
    r = _entry(rep, field).rep
    return {"dim": curvature.rnabla_space(r).dim}


def run_first_prolongation(reps: list, field: str = "qi", **_) -> dict:
    return {f"dim[{s}]": curvature.first_prolongation(_entry(s, field).rep).dim for s in reps}


def run_equivalences(reps: list, field: str = "qi", **_) -> dict:
    out = {}
    all_ok = True
    for s in reps:
        r = _entry(s, field).rep
        ps, cs = curvature.pspace(r), curvature.rspace(r)
        P0, p1 = curvature.decompose_p(ps).dims
        R0, R1, _ = curvature.decompose_r(cs).dims
        a = (P0 != 0) == (R0 != 0)
        b = p1 in (0, r.dim)
        c = (p1 != 0) == (R1 == 1)
        out[f"dims[{s}]"] = {"n": r.dim, "P0": P0, "P1": p1, "R0": R0, "R1": R1}
        out[f"p0_iff_r0[{s}]"] = a
        out[f"p1_in_0_n[{s}]"] = b
        out[f"p1_iff_r1[{s}]"] = c
        all_ok &= a and b and c
    out["all"] = all_ok
    return out


def run_tau(reps: list, **_) -> dict:
    out = {}
    for s in reps:
        r = _entry(s, "q").rep
        ps, cs = curvature.pspace(r), curvature.rspace(r)
        psplit, rsplit = curvature.decompose_p(ps), curvature.decompose_r(cs)
        t1 = curvature.tau_image(r, rsplit.R1, ps)
        t0 = curvature.tau_image(r, rsplit.R0, ps)
        out[f"tau_R1_eq_P1[{s}]"] = t1 == psplit.P1
        out[f"tau_R0_sub_P0[{s}]"] = t0.is_subspace_of(psplit.P0)
        out[f"tau_R0_eq_P0[{s}]"] = t0 == psplit.P0
        out[f"dims[{s}]"] = {"tau_R0": t0.dim, "P0": psplit.P0.dim, "tau_R1": t1.dim, "P1": psplit.P1.dim}
    return out


def run_star_lemma(reps: list, samples: int = 100, seed: int = 0, **_) -> dict:
    out = {}
    for s in reps:
        r = _entry(s, "q").rep
        ps = curvature.pspace(r)
        rng = _rng(seed)
        ok = 0
        for _ in range(samples):
            S = [ps.space.combine([rng.randint(-5, 5) for _ in range(ps.dim)]) for _ in range(r.dim)]
            ok += curvature.star_lemma_check(r, S, ps)
        out[f"all_true[{s}]"] = ok == samples
        out[f"passed[{s}]"] = ok
    return out


def _random_tensors(r, cs: curvature.CurvatureSpace, rng: random.Random, count: int):
    R1 = curvature.decompose_r(cs).R1
    amb = cs.space.ambient
    for i in range(count):
        kind = i % 3
        if kind == 0 and R1.dim:
            yield R1.combine([Fraction(rng.randint(-5, 5)) for _ in range(R1.dim)])
        elif kind == 1:
            yield cs.space.combine([Fraction(rng.randint(-5, 5)) for _ in range(cs.dim)])
        else:
            yield tuple(Fraction(rng.randint(-5, 5)) if rng.random() < 0.3 else Fraction(0) for _ in range(amb))


def run_symmetric_pair(rep: str, samples: int = 50, seed: int = 0, **_) -> dict:
    r = _entry(rep, "q").rep
    pair = symspace.build_symmetric_pair(r, symspace.sphere_tensor(r))
    out = pair.report()
    cs = curvature.rspace(r)
    rng = _rng(seed)
    checked = 0
    for R in _random_tensors(r, cs, rng, samples):
        symspace.jacobi_characterization(r, R)
        checked += 1
    out["random_checked"] = checked
    return out


def run_multiplicity(reps: list, **_) -> dict:
    return {f"multiplicity[{s}]": curvature.standard_multiplicity(_entry(s, "qi").rep) for s in reps}


def run_quaternionic(k: str, **_) -> dict:
    return symspace.quaternionic_grading(_entry(k, "qi")).report()


RUNNERS = {
    "tanaka": run_tanaka,
    "proposition": run_proposition,
    "pspace": run_pspace,
    "pspace_pair": run_pspace_pair,
    "rspace": run_rspace,
    "rnabla": run_rnabla,
    "first_prolongation": run_first_prolongation,
    "equivalences": run_equivalences,
    "tau": run_tau,
    "star_lemma": run_star_lemma,
    "symmetric_pair": run_symmetric_pair,
    "multiplicity": run_multiplicity,
    "quaternionic": run_quaternionic,
}


def _coerce(value: str, like):
    if isinstance(like, bool):
        return value.lower() in ("1", "true", "yes")
    if isinstance(like, int):
        return int(value)
    if isinstance(like, list):
        return [v.strip() for v in value.split(";") if v.strip()]
    return value


def run_scenario(sc: Scenario, overrides: dict | None = None) -> dict:
    """Run one scenario; returns the report dict (``passed`` tells whether every expectation held)."""
    params = dict(sc.params)
    for key, val in (overrides or {}).items():
        if key not in params and key not in ("seed", "max_degree", "field"):
            raise ScenarioError(f"scenario {sc.name} has no parameter {key!r}")
        params[key] = _coerce(val, params[key]) if isinstance(val, str) and key in params else val
    computed = RUNNERS[sc.runner](**params)
    checks = []
    for e in sc.expectations:
        got = computed.get(e.key)
        checks.append(
            {"key": e.key, "expected": e.expected, "computed": got, "provenance": e.provenance, "ok": got == e.expected}
        )
    return {
        "scenario": sc.name,
        "description": sc.description,
        "criterion": sc.criterion,
        "params": params,
        "computed": computed,
        "checks": checks,
        "passed": all(c["ok"] for c in checks),
    }
