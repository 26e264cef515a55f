"""Generate induction-table JSON files for the small matrix groups.

Rows are produced from the closed-form character values on each eigenvalue
pattern (central, central-unipotent, split regular, nonsplit regular), keyed
by canonical pair-class and conjugacy-class labels.  Split-torus rows are
written from the closed formulas as well, so the loader's comparison against
brute-force parabolic induction is a genuine cross-check.

Usage: python scripts/make_dl_tables.py [outdir]
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from dltransfer.cyclo import CycloNumber
from dltransfer.matrixgroup import (
    abstract_from_eigen_exponents,
    _embed_unit_dlog,
    build_group,
    class_type,
)
from dltransfer.ssclasses import enumerate_pair_classes
from dltransfer.torusreal import realization

TARGETS = [("GL2", 2), ("GL2", 3), ("GL2", 5), ("SL2", 3), ("SL2", 5)]


def row_values(group, pc):
    """Closed-form values of the induction character for one pair class."""
    torus = pc.torus()
    theta = pc.char()
    w = pc.w()
    split_w = w.length == 0
    real = realization(torus)
    q = group.q

    def theta_at(eigen_exps):
        return theta.value(abstract_from_eigen_exponents(group, torus, eigen_exps))

    out = {}
    for cls in group.classes:
        kind, data = class_type(group, cls.rep)
        if kind in ("central", "central_unipotent"):
            d = _embed_unit_dlog(group, torus, data)
            th = theta_at((d, d))
            if kind == "central":
                v = th * CycloNumber.from_rational(q + 1 if split_w else -(q - 1))
            else:
                v = th
        elif kind == "split_regular":
            if not split_w:
                continue
            a, b = data
            da = _embed_unit_dlog(group, torus, a)
            db = _embed_unit_dlog(group, torus, b)
            v = theta_at((da, db)) + theta_at((db, da))
        else:  # nonsplit_regular: eigenvalues x, x^q in the quadratic extension
            if split_w:
                continue
            dx = real.field.dlog(data)
            v = theta_at((dx, q * dx)) + theta_at((q * dx, dx))
        if not v.is_zero():
            out[cls.label] = v.to_json_obj()
    return out


def make_table(name, q):
    group = build_group(name, q)
    pairs = enumerate_pair_classes(group.datum, group.frob)
    rows = []
    for pc in pairs:
        rows.append(
            {
                "pair": pc.label(),
                "w": list(list(r) for r in pc.w().matrix.entries),
                "theta": pc.point.label(),
                "values": row_values(group, pc),
            }
        )
    return {"group": name, "q": q, "pairs": rows}


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "src", "dltransfer", "data", "dl_tables"
    )
    os.makedirs(outdir, exist_ok=True)
    for name, q in TARGETS:
        table = make_table(name, q)
        path = os.path.join(outdir, f"{name.lower()}_q{q}.json")
        with open(path, "w") as fh:
            json.dump(table, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print(f"wrote {path} ({len(table['pairs'])} pairs)")


if __name__ == "__main__":
    main()
