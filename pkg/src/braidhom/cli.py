"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a failing check, 2 on
usage errors and theorem-hypothesis or coefficient-policy violations, 3
when an oracle job exceeds its budget.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Sequence

from . import catalog as _catalog
from .bounds import (
    cohdim_bound,
    conn2_bound,
    nakaoka_bound,
    scanning_connectivity,
    sp_connectivity_bound,
    stability_range,
    tp_relative_bound,
)
from .braid import CohomologyTable, SpaceDescriptor, dualize, split_closed, split_punctures
from .chain import homology
from .errors import BraidHomError, BudgetExceeded, CatalogError
from .groups import Coefficients, GradedAbelianGroup
from .sp2 import TwoComplexPresentation, build_sp_model, load_presentation, reduced_sp_model
from .tp import ReducedTpTable, reduced_tp_wedge, tp_circle_complex

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _read_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _group_from_file(path: str) -> GradedAbelianGroup:
    data = _read_json(path)
    if isinstance(data, dict) and "groups" in data:
        data = data["groups"]
    return GradedAbelianGroup.from_json(data)


def _tables_from_files(paths: Sequence[str]) -> list[CohomologyTable]:
    out = []
    for path in paths:
        data = _read_json(path)
        items = data if isinstance(data, list) else [data]
        out += [CohomologyTable.from_json(item) for item in items]
    return out


def _group_rows(g: GradedAbelianGroup, coeff: Coefficients, lo: int = 0, hi: int | None = None,
                symbol: str = "H_") -> list[str]:
    hi = g.top_degree if hi is None else hi
    rows = []
    for q in range(lo, hi + 1):
        if coeff.is_field:
            rows.append(f"{symbol}{q} = {g.describe_field(q, str(coeff).upper())}")
        else:
            rows.append(f"{symbol}{q} = {g.describe(q)}")
    return rows or ["(all groups vanish)"]


# -- subcommands ------------------------------------------------------------------------

def cmd_sp_surface(a) -> dict:
    coeff = Coefficients.parse(a.coeff)
    if a.presentation:
        x = load_presentation(a.presentation)
    else:
        x = TwoComplexPresentation.surface(a.genus, a.punctures)
    build = reduced_sp_model if a.reduced else build_sp_model
    g = homology(build(x, a.n, coeff), coeff)
    return {"result": {"presentation": x.to_json(), "n": a.n, "reduced": a.reduced,
                       "coeff": str(coeff), "homology": g.to_json()},
            "table": _group_rows(g, coeff, 0, 2 * a.n, "H~_" if a.reduced else "H_")}


def cmd_tp_circle(a) -> dict:
    coeff = Coefficients.parse(a.coeff)
    cx = tp_circle_complex(a.n)
    g = homology(cx, coeff)
    return {"result": {"n": a.n, "coeff": str(coeff), "homology": g.to_json()},
            "table": _group_rows(g, coeff, 0, a.n)}


def cmd_wedge_tp(a) -> dict:
    field = Coefficients.parse(a.field)
    data = _read_json(a.summands)
    items = data if isinstance(data, list) else data.get("summands", [])
    tables = [ReducedTpTable.from_json(item) for item in items]
    g = reduced_tp_wedge(tables, a.n, field)
    return {"result": {"n": a.n, "field": str(field), "summands": [t.summand for t in tables],
                       "reduced_homology": g.to_json()},
            "table": _group_rows(g, field, 0, None, "H~_")}


def cmd_dualize(a) -> dict:
    rel = _group_from_file(a.rel)
    t = dualize(rel, a.k, a.d, a.flavor, a.coeff, orientable=a.orientable)
    return {"result": t.to_json(), "table": _group_rows(t.groups, t.coeff, 0, a.k * a.d, "H^")}


def cmd_split_closed(a) -> dict:
    (pn,) = _tables_from_files([a.punctured_n])
    (pm,) = _tables_from_files([a.punctured_n_minus_1])
    t = split_closed(pn, pm, a.d)
    return {"result": t.to_json(), "table": _group_rows(t.groups, t.coeff, 0, None, "H^")}


def cmd_split_punctures(a) -> dict:
    base = {t.k: t for t in _tables_from_files(a.base)}
    t = split_punctures(base, a.k, a.d, a.field, orientable=a.orientable, n=a.n)
    return {"result": t.to_json(), "table": _group_rows(t.groups, t.coeff, 0, None, "H^")}


def _need(a, *names):
    missing = [n for n in names if getattr(a, n) is None]
    if missing:
        raise UsageError(f"--theorem {a.theorem} needs " + ", ".join("--" + m for m in missing))


def cmd_bounds(a) -> dict:
    th = a.theorem
    if th == "main3":
        _need(a, "d", "k", "r")
        # without --closed the manifold is taken to have boundary
        space = SpaceDescriptor(a.d, not a.non_orientable, a.closed or a.punctures > 0, a.punctures, a.r)
        rep = cohdim_bound(space, a.k)
        res = rep.to_json()
        return {"result": res, "table": [f"cohdim bound ({th}): {rep.bound}"]}
    if th == "connectivity":
        _need(a, "n", "r")
        value = sp_connectivity_bound(a.n, a.r)
    elif th == "conntwo":
        _need(a, "n", "w")
        value = conn2_bound(a.n, a.w)
    elif th == "nakaoka":
        _need(a, "k", "r")
        value = nakaoka_bound(a.k, a.r)
    elif th == "R":
        _need(a, "k", "r")
        value = tp_relative_bound(a.k, a.r, a.flavor)
    elif th == "arnold":
        _need(a, "k")
        s = stability_range(a.k, a.profile)
        res = {"theorem": th, "k": a.k, "profile": a.profile, "stability_range": s}
        rows = [f"s({a.k}) = {s}"]
        if a.k >= 2:
            res["scanning_connectivity"] = scanning_connectivity(a.k, a.profile)
            rows.append(f"scanning connectivity s({a.k - 1}) = {res['scanning_connectivity']}")
        return {"result": res, "table": rows}
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown theorem {th}")
    inputs = {k: getattr(a, k) for k in ("n", "k", "r", "w") if getattr(a, k) is not None}
    return {"result": {"theorem": th, "bound": value, "kind": "connectivity", "inputs": inputs},
            "table": [f"connectivity bound ({th}): {value}"]}


def cmd_oracle(a) -> dict:
    from .oracle import load_space, oracle_homology, oracle_relative

    coeff = Coefficients.parse(a.coeff)
    try:
        x = load_space(a.space)
    except OSError as exc:
        raise UsageError(f"unknown space {a.space!r}: not a builtin and {exc.strerror}") from None
    basepoint = a.basepoint
    if basepoint is None and (a.mode != "SP" or a.relative_to is not None):
        basepoint = x.vertices[0]
    elif basepoint is not None and basepoint not in x.vertices:
        # builtin vertex labels are integers
        try:
            basepoint = int(basepoint)
        except ValueError:
            pass
    if a.relative_to is not None:
        g = oracle_relative(x, a.n, a.relative_to, basepoint, coeff, a.mode.replace("bar", ""),
                            budget=a.budget)
        label = f"({a.mode}^{a.n}, {a.mode}^{a.relative_to})"
    else:
        g = oracle_homology(x, a.mode, a.n, coeff, basepoint, budget=a.budget)
        label = f"{a.mode}^{a.n}"
    validated = a.space in ("point", "interval", "circle", "circle3", "circle4", "S1", "S2", "S3",
                            "sphere2", "sphere3", "torus", "figure-eight")
    return {"result": {"space": a.space, "mode": a.mode, "n": a.n, "coeff": str(coeff),
                       "relative_to": a.relative_to, "homology": g.to_json(),
                       "oracle_unverified": not validated},
            "table": [f"{label}({a.space}):"] + _group_rows(g, coeff)
            + ([] if validated else ["note: input outside the validated family (oracle-unverified)"])}


def cmd_catalog(a) -> dict:
    if a.key:
        e = _catalog.lookup(a.key)
        rows = [e.key, f"  {e.description}", f"  anchor: {e.anchor.label}: \"{e.anchor.quote}\"",
                f"  checkable: {e.checkable}"]
        return {"result": e.to_json(), "table": rows}
    entries = _catalog.entries()
    rows = [f"{e.key:32s} {'check' if e.checkable else 'text '}  {e.anchor.label}" for e in entries]
    return {"result": {"entries": [e.to_json() for e in entries]}, "table": rows}


def cmd_verify(a) -> dict:
    from .verify import run_all

    results = run_all(a.only or None, extended=a.extended)
    ok = all(r.passed for r in results)
    return {"result": {"passed": ok, "checks": [r.to_json() for r in results]},
            "table": [r.line() for r in results], "exit": 0 if ok else 1}


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidhom",
                                description="Homology of symmetric, truncated symmetric and braid spaces.")
    p.add_argument("--format", choices=("table", "json"), default="table")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sp-surface", help="homology of SP^n of a surface or 2-complex")
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("--punctures", type=int, default=0)
    s.add_argument("--presentation", help="JSON 2-complex presentation (overrides --genus)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--coeff", default="z")
    s.add_argument("--reduced", action="store_true", help="reduced product SPbar^n")
    s.set_defaults(func=cmd_sp_surface)

    s = sub.add_parser("tp-circle", help="homology of TP^n(S^1)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--coeff", default="z")
    s.set_defaults(func=cmd_tp_circle)

    s = sub.add_parser("wedge-tp", help="reduced TP of a wedge from summand tables")
    s.add_argument("--summands", required=True, help="JSON list of reduced TP tables")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--field", default="f2")
    s.set_defaults(func=cmd_wedge_tp)

    s = sub.add_parser("dualize", help="braid-space cohomology from relative TP homology")
    s.add_argument("--rel", required=True, help="JSON graded group")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--flavor", choices=("punctured", "closed"), default="punctured")
    s.add_argument("--coeff", default="f2")
    s.add_argument("--orientable", action="store_true")
    s.set_defaults(func=cmd_dualize)

    s = sub.add_parser("split-closed", help="mod 2 cohomology of B(M,n) from B(M-p,n), B(M-p,n-1)")
    s.add_argument("--punctured-n", required=True)
    s.add_argument("--punctured-n-minus-1", required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_split_closed)

    s = sub.add_parser("split-punctures", help="cohomology of B(M - k points, n) from B(M-p, r)")
    s.add_argument("--base", nargs="+", required=True, help="JSON cohomology tables for r = 0..n")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--field", default="f2")
    s.add_argument("--orientable", action="store_true")
    s.set_defaults(func=cmd_split_punctures)

    s = sub.add_parser("bounds", help="evaluate a dimension or connectivity bound")
    s.add_argument("--theorem", required=True,
                   choices=("main3", "connectivity", "conntwo", "nakaoka", "R", "arnold"))
    for name in ("d", "k", "r", "n", "w"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("--closed", action="store_true", help="M closed with nothing removed")
    s.add_argument("--punctures", type=int, default=0)
    s.add_argument("--non-orientable", action="store_true")
    s.add_argument("--flavor", choices=("punctured", "closed"), default="punctured")
    s.add_argument("--profile", choices=("generic", "surface-punctured"), default="generic")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("oracle", help="brute-force homology of SP/TP of a simplicial complex")
    s.add_argument("--space", required=True, help="builtin name or JSON facet file")
    s.add_argument("--mode", choices=("SP", "TP", "SPbar", "TPbar"), default="SP")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--coeff", default="z")
    s.add_argument("--basepoint", help="basepoint vertex label (default: first vertex)")
    s.add_argument("--relative-to", type=int, help="lower stage m: homology of the pair (P^n, P^m)")
    s.add_argument("--budget", type=int, help="simplex budget (else BRAIDHOM_BUDGET or the default)")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("catalog", help="list catalog entries with their anchors")
    s.add_argument("key", nargs="?")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("verify", help="run the acceptance cross-checks")
    s.add_argument("--only", nargs="*", help="check ids such as A1 A7 CAT")
    s.add_argument("--extended", action="store_true", help="also recompute B(R^2,4) with the oracle (~1 min)")
    s.set_defaults(func=cmd_verify)
    return p


def _jsonable(obj):
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}; raise --budget or set BRAIDHOM_BUDGET", file=sys.stderr)
        return 3
    except CatalogError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except (BraidHomError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "result": _jsonable(out["result"])}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print("\n".join(out["table"]))
    return out.get("exit", 0)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
