"""Command-line surface: deterministic JSON/CSV/text reports over the library.

Exit codes: 0 = success / verified; 1 = input error; 2 = verification
mismatch (report carries the diff).  All randomized subcommands require an
explicit --seed so runs are reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from .cyclo import CycloNumber
from .dlengine import UniformFunction, assemble, compare, degree
from .dualmorph import DualMorphism, analyze, identity_morphism
from .ffield import AddChar, MultChar, gauss_sum, get_field
from .finitetorus import TameChar, split_frobenius, tame_stabilizers
from .lattice import IntMatrix, QmodZVec
from .matrixgroup import build_group, delta_cf, dl_family, realize
from .rootdata import RootDatum, build_standard, weyl_group
from .ssclasses import enumerate_classes, enumerate_pair_classes
from .stablefun import GroupContext, StableFunction, delta, random_stable, transfer


class InputError(ValueError):
    pass


# -- morphism construction -------------------------------------------------------


def _preset_morphism(name: str) -> DualMorphism:
    gl2 = build_standard("GL", 2)
    gl1 = build_standard("GL", 1)
    presets = {
        "identity-gl2": lambda: identity_morphism(gl2),
        "diag-gl1-gl2": lambda: analyze(gl2, gl1, IntMatrix.from_rows([[1, 1]])),
        "levi-t-gl2": lambda: analyze(
            gl2, build_standard("Torus", 2), IntMatrix.identity(2)
        ),
        "power-2-gl1": lambda: analyze(gl1, gl1, IntMatrix.from_rows([[2]])),
        "power-3-gl1": lambda: analyze(gl1, gl1, IntMatrix.from_rows([[3]])),
    }
    try:
        return presets[name]()
    except KeyError:
        raise InputError(
            f"unknown preset {name!r}; choose from {sorted(presets)}"
        ) from None


def morphism_presets() -> tuple[str, ...]:
    return ("identity-gl2", "diag-gl1-gl2", "levi-t-gl2", "power-2-gl1", "power-3-gl1")


def _datum_from_obj(obj) -> RootDatum:
    if isinstance(obj, str):
        return build_standard(obj)
    return RootDatum.from_json_obj(obj)


def _morphism_from_file(path: str) -> DualMorphism:
    with open(path) as fh:
        obj = json.load(fh)
    source = _datum_from_obj(obj["source"])
    target = _datum_from_obj(obj["target"])
    a = IntMatrix.from_rows(obj["matrix"])
    return analyze(source, target, a)


def _get_morphism(args) -> DualMorphism:
    if getattr(args, "preset", None):
        return _preset_morphism(args.preset)
    if getattr(args, "file", None):
        return _morphism_from_file(args.file)
    raise InputError("provide --preset or --file")


# -- gamma tables ---------------------------------------------------------------


def gamma_table_obj(f: StableFunction) -> dict:
    return {
        "datum": f.context.datum.name,
        "q": f.context.frob.q,
        "gamma": {c.label(): f.gamma[c].to_json_obj() for c in f.context.classes()},
    }


def ingest_gamma_table(obj) -> StableFunction:
    datum = build_standard(obj["datum"])
    ctx = GroupContext(datum, split_frobenius(datum, int(obj["q"])))
    by_label = {c.label(): c for c in ctx.classes()}
    gamma = {}
    for label, val in obj["gamma"].items():
        if label not in by_label:
            raise InputError(f"unknown class label {label!r}")
        gamma[by_label[label]] = CycloNumber.from_json_obj(val)
    return StableFunction(ctx, gamma)


def _fmt(v: CycloNumber) -> str:
    if v.is_rational():
        r = v.rational_value()
        return str(r.numerator) if r.denominator == 1 else str(r)
    return repr(v)


# -- subcommand handlers ------------------------------------------------------------


def _cmd_rootdatum(args):
    rd = build_standard(args.name)
    wg = weyl_group(rd)
    report = {
        "name": rd.name,
        "rank": rd.rank,
        "roots": [list(r) for r in rd.roots],
        "coroots": [list(r) for r in rd.coroots],
        "simple": list(rd.simple),
        "positive": list(rd.positive_indices()),
        "weyl_order": len(wg.elements),
        "lengths": sorted(w.length for w in wg.elements),
        "table": {
            "columns": ["weyl_element", "length"],
            "rows": [
                [json.dumps(list(list(r) for r in w.matrix.entries)), str(w.length)]
                for w in wg.elements
            ],
        },
    }
    return 0, report


def _cmd_morphism(args):
    m = _get_morphism(args)
    wg_t = weyl_group(m.target)
    two_routes = m.w_l == m.levi_reflection_subgroup()
    lift_table = {}
    for i, wp in enumerate(wg_t.elements):
        key = json.dumps(list(list(r) for r in wp.matrix.entries))
        lift_table[key] = [
            list(list(r) for r in w.matrix.entries) for w in (m.lift(wp) if m.lift_table[i] else [])
        ]
    report = {
        "source": m.source.name,
        "target": m.target.name,
        "matrix": [list(r) for r in m.matrix.entries],
        "levi_root_indices": list(m.levi_root_indices),
        "levi_roots": [list(m.source.roots[i]) for i in m.levi_root_indices],
        "w_l_order": m.w_l.order,
        "w_l_two_routes_agree": two_routes,
        "valid": m.valid,
        "lifts": lift_table,
    }
    return 0, report


def _context(group_name: str, q: int) -> GroupContext:
    rd = build_standard(group_name)
    return GroupContext(rd, split_frobenius(rd, q))


def _cmd_classes(args):
    ctx = _context(args.group, args.q)
    geo = ctx.classes()
    pairs = enumerate_pair_classes(ctx.datum, ctx.frob)
    report = {
        "group": ctx.datum.name,
        "q": args.q,
        "count": len(geo),
        "classes": [c.label() for c in geo],
        "rational_pair_count": len(pairs),
        "rational_pairs": [p.label() for p in pairs],
        "table": {
            "columns": ["class_label"],
            "rows": [[c.label()] for c in geo],
        },
    }
    return 0, report


def _cmd_tame(args):
    rd = build_standard(args.group)
    point = QmodZVec.from_label(args.point)
    fr = split_frobenius(rd, args.q)
    chi = TameChar(point, fr.p)
    stab, refl = tame_stabilizers(rd, chi)
    report = {
        "group": rd.name,
        "q": args.q,
        "point": point.label(),
        "order": point.order(),
        "stabilizer_order": stab.order,
        "reflection_stabilizer_order": refl.order,
        "stabilizer": [
            list(list(r) for r in w.matrix.entries) for w in stab.elements()
        ],
        "reflection_stabilizer": [
            list(list(r) for r in w.matrix.entries) for w in refl.elements()
        ],
    }
    return 0, report


def _source_function(args, ctx: GroupContext) -> StableFunction:
    if getattr(args, "gamma_file", None):
        with open(args.gamma_file) as fh:
            f = ingest_gamma_table(json.load(fh))
        if f.context != ctx:
            raise InputError("gamma table does not match the morphism's source context")
        return f
    if getattr(args, "random", False):
        if args.seed is None:
            raise InputError("--seed is required for randomized input")
        return random_stable(ctx, random.Random(args.seed))
    return delta(ctx)


def _cmd_transfer(args):
    m = _get_morphism(args)
    fr = split_frobenius(m.source, args.q)
    fr_t = split_frobenius(m.target, args.q)
    src_ctx = GroupContext(m.source, fr)
    f = _source_function(args, src_ctx)
    g = transfer(m, fr, fr_t, f)
    out = gamma_table_obj(g)
    report = {
        "source": m.source.name,
        "target": m.target.name,
        "q": args.q,
        "input_gamma": gamma_table_obj(f),
        "datum": out["datum"],
        "gamma": out["gamma"],
        "table": {
            "columns": ["class_label", "gamma"],
            "rows": [
                [c.label(), _fmt(g.gamma[c])] for c in g.context.classes()
            ],
        },
    }
    return 0, report


def _cmd_verify_delta(args):
    if args.group not in ("GL2", "SL2"):
        raise InputError("verify delta supports GL2 and SL2")
    group = build_group(args.group, args.q)
    ctx = group.context
    u = assemble(identity_morphism(ctx.datum), ctx.frob, ctx.frob, delta(ctx))
    deg = degree(u)
    realized = realize(group, u)
    want = delta_cf(group)
    diffs = {}
    for i, cls in enumerate(group.classes):
        if realized.values[i] != want.values[i]:
            diffs[cls.label] = {
                "got": realized.values[i].to_json_obj(),
                "want": want.values[i].to_json_obj(),
            }
    ok = not diffs and deg == CycloNumber.one()
    report = {
        "group": args.group,
        "q": args.q,
        "degree": _fmt(deg),
        "degree_ok": deg == CycloNumber.one(),
        "coefficients": {k: v.to_json_obj() for k, v in u.labels().items()},
        "delta_matches": not diffs,
        "diff": diffs,
        "verified": ok,
    }
    return (0 if ok else 2), report


def _cmd_verify_formula(args):
    if args.seed is None:
        raise InputError("--seed is required for randomized verification")
    m = _get_morphism(args)
    fr = split_frobenius(m.source, args.q)
    fr_t = split_frobenius(m.target, args.q)
    src_ctx = GroupContext(m.source, fr)
    ident_t = identity_morphism(m.target)
    rng = random.Random(args.seed)
    mismatches = []
    for trial in range(args.trials):
        f = random_stable(src_ctx, rng)
        left = assemble(m, fr, fr_t, f)
        right = assemble(ident_t, fr_t, fr_t, transfer(m, fr, fr_t, f))
        rep = compare(left, right)
        if not rep:
            mismatches.append(
                {
                    "trial": trial,
                    "diff": {
                        label: {"left": a.to_json_obj(), "right": b.to_json_obj()}
                        for label, (a, b) in rep.diffs.items()
                    },
                }
            )
    report = {
        "source": m.source.name,
        "target": m.target.name,
        "q": args.q,
        "trials": args.trials,
        "seed": args.seed,
        "mismatch_count": len(mismatches),
        "mismatches": mismatches,
        "verified": not mismatches,
    }
    return (0 if not mismatches else 2), report


def _cmd_verify(args):
    if args.what == "delta":
        return _cmd_verify_delta(args)
    if args.what == "formula":
        return _cmd_verify_formula(args)
    raise InputError(f"unknown verification {args.what!r}")


def _cmd_gauss(args):
    p, e = _parse_prime_power(args.q)
    field = get_field(p, e)
    psi = AddChar(p, e, args.b)
    rows = []
    ok = True
    for k in range(field.q - 1):
        chi = MultChar(p, e, k)
        g = gauss_sum(field, chi, psi)
        norm = g * g.conjugate()
        if k == 0:
            expected = CycloNumber.from_rational(1)
        else:
            expected = CycloNumber.from_rational(field.q)
        if norm != expected:
            ok = False
        rows.append([str(k), _fmt(g), _fmt(norm)])
    report = {
        "q": args.q,
        "b": args.b,
        "norm_checks_pass": ok,
        "table": {"columns": ["k", "gauss_sum", "norm"], "rows": rows},
    }
    return (0 if ok else 2), report


def _parse_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise InputError("q must be a prime power")
            return p, e
    raise InputError("q must be >= 2")


# -- output -------------------------------------------------------------------------


def emit(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        table = report.get("table")
        if table:
            writer.writerow(table["columns"])
            for row in table["rows"]:
                writer.writerow(row)
        else:
            writer.writerow(["key", "value"])
            for k in sorted(report):
                v = report[k]
                if isinstance(v, (str, int, bool, float)):
                    writer.writerow([k, v])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for k in sorted(report):
            if k == "table":
                continue
            v = report[k]
            if isinstance(v, (str, int, bool, float)):
                lines.append(f"{k}: {v}")
            else:
                lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
        table = report.get("table")
        if table:
            lines.append(" | ".join(table["columns"]))
            for row in table["rows"]:
                lines.append(" | ".join(str(x) for x in row))
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown format {fmt!r}")


# -- parser ----------------------------------------------------------------------------


def _add_common(p):
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out", help="write the report to this path instead of stdout")


def _add_morphism_args(p):
    p.add_argument("--preset", help=f"one of {', '.join(morphism_presets())}")
    p.add_argument("--file", help="JSON file {source, target, matrix}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dltransfer",
        description="Exact transfer of stable functions on finite reductive groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootdatum", help="inspect a standard root datum")
    p.add_argument("--name", required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_rootdatum)

    p = sub.add_parser("morphism", help="analyze a dual morphism")
    _add_morphism_args(p)
    p.add_argument("--check", action="store_true", help="included for symmetry; analysis always runs")
    _add_common(p)
    p.set_defaults(handler=_cmd_morphism)

    p = sub.add_parser("classes", help="enumerate geometric classes")
    p.add_argument("--group", required=True)
    p.add_argument("--q", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_classes)

    p = sub.add_parser("tame", help="stabilizers of a tame character point")
    p.add_argument("--group", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--point", required=True, help='e.g. "[1/2,0/1]"')
    _add_common(p)
    p.set_defaults(handler=_cmd_tame)

    p = sub.add_parser("transfer", help="transfer a gamma table through a morphism")
    _add_morphism_args(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--gamma-file", help="JSON gamma table on the source group")
    p.add_argument("--random", action="store_true", help="use a seeded random gamma")
    p.add_argument("--seed", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_transfer)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("what", choices=["delta", "formula"])
    p.add_argument("--group", default="GL2")
    p.add_argument("--q", type=int, required=True)
    _add_morphism_args(p)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("gauss", help="Gauss-sum table with norm checks")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    _add_common(p)
    p.set_defaults(handler=_cmd_gauss)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        code, report = args.handler(args)
        payload = emit(report, args.format)
    except (InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
